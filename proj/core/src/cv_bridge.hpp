#pragma once

// OpenCV stays an implementation detail: include it only from .cpp files,
// through this header. The pragma silences the enum-arithmetic deprecation
// noise OpenCV 4.5 headers emit under C++20.

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wdeprecated-enum-enum-conversion"
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>
#include <opencv2/video/tracking.hpp>
#include <opencv2/videoio.hpp>
#pragma GCC diagnostic pop

#include "vcc/image.hpp"

namespace vcc {

inline cv::Mat to_mat(const ImageU8& img) {
    CV_Assert(img.c == 1 || img.c == 3);
    cv::Mat m(img.h, img.w, img.c == 1 ? CV_8UC1 : CV_8UC3);
    std::memcpy(m.data, img.data.data(), img.data.size());
    return m;
}

inline ImageU8 from_mat(const cv::Mat& m) {
    CV_Assert(m.type() == CV_8UC1 || m.type() == CV_8UC3);
    ImageU8 img(m.rows, m.cols, m.channels());
    if (m.isContinuous()) {
        std::memcpy(img.data.data(), m.data, img.data.size());
    } else {
        for (int y = 0; y < m.rows; ++y)
            std::memcpy(img.data.data() + static_cast<std::size_t>(y) * m.cols * m.channels(),
                        m.ptr(y), static_cast<std::size_t>(m.cols) * m.channels());
    }
    return img;
}

} // namespace vcc
