#include "vcc/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vcc {

ImageF to_float(const ImageU8& img) {
    ImageF out(img.h, img.w, img.c);
    std::copy(img.data.begin(), img.data.end(), out.data.begin());
    return out;
}

ImageU8 to_u8_clamped(const ImageF& img) {
    ImageU8 out(img.h, img.w, img.c);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        const float v = std::round(img.data[i]);
        out.data[i] = static_cast<std::uint8_t>(std::clamp(v, 0.f, 255.f));
    }
    return out;
}

ImageU8 ensure_3ch(const ImageU8& img) {
    if (img.c == 3) return img;
    if (img.c != 1) throw std::invalid_argument("ensure_3ch: expected 1 or 3 channels");
    ImageU8 out(img.h, img.w, 3);
    for (int y = 0; y < img.h; ++y)
        for (int x = 0; x < img.w; ++x) {
            const std::uint8_t v = img.at(y, x, 0);
            out.at(y, x, 0) = v;
            out.at(y, x, 1) = v;
            out.at(y, x, 2) = v;
        }
    return out;
}

namespace {

template <typename Img>
ImageF crop_impl(const Img& img, const BoundingBox& box) {
    if (!box.valid() || box.x1 < 0 || box.y1 < 0 || box.x2 > img.w || box.y2 > img.h)
        throw std::invalid_argument("crop: box outside image bounds");
    ImageF out(box.height(), box.width(), img.c);
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x)
            for (int ch = 0; ch < img.c; ++ch)
                out.at(y, x, ch) = static_cast<float>(img.at(box.y1 + y, box.x1 + x, ch));
    return out;
}

} // namespace

ImageF crop(const ImageF& img, const BoundingBox& box) { return crop_impl(img, box); }
ImageF crop(const ImageU8& img, const BoundingBox& box) { return crop_impl(img, box); }

ImageF resize_bilinear(const ImageF& src, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0) throw std::invalid_argument("resize_bilinear: bad size");
    if (src.h == out_h && src.w == out_w) return src;

    ImageF out(out_h, out_w, src.c);
    const double sy = static_cast<double>(src.h) / out_h;
    const double sx = static_cast<double>(src.w) / out_w;
    for (int y = 0; y < out_h; ++y) {
        const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, static_cast<double>(src.h - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, src.h - 1);
        const float wy = static_cast<float>(fy - y0);
        for (int x = 0; x < out_w; ++x) {
            const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, static_cast<double>(src.w - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, src.w - 1);
            const float wx = static_cast<float>(fx - x0);
            for (int ch = 0; ch < src.c; ++ch) {
                const float a = src.at(y0, x0, ch);
                const float b = src.at(y0, x1, ch);
                const float c = src.at(y1, x0, ch);
                const float d = src.at(y1, x1, ch);
                const float top = a + (b - a) * wx;
                const float bot = c + (d - c) * wx;
                out.at(y, x, ch) = top + (bot - top) * wy;
            }
        }
    }
    return out;
}

ImageF crop_resize(const ImageU8& img, const BoundingBox& box, int out_h, int out_w) {
    return resize_bilinear(crop(img, box), out_h, out_w);
}

ImageF crop_resize(const ImageF& img, const BoundingBox& box, int out_h, int out_w) {
    return resize_bilinear(crop(img, box), out_h, out_w);
}

} // namespace vcc
