#include "vcc/adapters.hpp"

#include <cmath>
#include <stdexcept>

#include "cv_bridge.hpp"
#include "vcc/array_io.hpp"

namespace vcc {

float MotionMap::magnitude(int y, int x) const {
    if (mode == Mode::Gradient) return at(y, x, 0);
    const float dx = at(y, x, 0);
    const float dy = at(y, x, 1);
    return std::sqrt(dx * dx + dy * dy);
}

std::vector<float> MotionMap::magnitude_map() const {
    std::vector<float> out(static_cast<std::size_t>(h) * w);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out[static_cast<std::size_t>(y) * w + x] = magnitude(y, x);
    return out;
}

std::vector<Detection> StaticDetector::detect(const ImageU8&, int frame_idx) {
    if (frame_idx < 0 || frame_idx >= static_cast<int>(per_frame_.size())) return {};
    return per_frame_[frame_idx];
}

std::vector<Detection> FileDetector::detect(const ImageU8&, int frame_idx) {
    const auto path = dir_ / (std::to_string(frame_idx) + ".det");
    if (!std::filesystem::exists(path)) return {};
    const ArrayFile arr = read_array(path);
    if (arr.dims.size() != 2 || arr.dims[1] != 6)
        throw std::runtime_error("detection file must be Nx6: " + path.string());
    const auto v = arr.as_f32();
    std::vector<Detection> out;
    out.reserve(arr.dims[0]);
    for (std::uint32_t i = 0; i < arr.dims[0]; ++i) {
        const float* r = v.data() + static_cast<std::size_t>(i) * 6;
        Detection d;
        d.box = BoundingBox{static_cast<int>(std::floor(r[0])), static_cast<int>(std::floor(r[1])),
                            static_cast<int>(std::ceil(r[2])), static_cast<int>(std::ceil(r[3]))};
        d.confidence = r[4];
        d.class_id = static_cast<int>(r[5]);
        out.push_back(d);
    }
    return out;
}

MotionMap FarnebackFlow::flow(const ImageU8& a, const ImageU8& b, int) {
    if (a.h != b.h || a.w != b.w || a.c != b.c)
        throw std::invalid_argument("flow: frame shapes differ");
    cv::Mat ga, gb;
    cv::cvtColor(to_mat(a), ga, cv::COLOR_BGR2GRAY);
    cv::cvtColor(to_mat(b), gb, cv::COLOR_BGR2GRAY);
    cv::Mat f;
    cv::calcOpticalFlowFarneback(ga, gb, f, 0.5, 3, 15, 3, 5, 1.1, 0);

    MotionMap m;
    m.mode = MotionMap::Mode::Flow;
    m.h = a.h;
    m.w = a.w;
    m.values.resize(static_cast<std::size_t>(a.h) * a.w * 2);
    for (int y = 0; y < a.h; ++y) {
        const auto* row = f.ptr<cv::Point2f>(y);
        for (int x = 0; x < a.w; ++x) {
            m.at(y, x, 0) = row[x].x;
            m.at(y, x, 1) = row[x].y;
        }
    }
    return m;
}

MotionMap FileFlow::flow(const ImageU8& a, const ImageU8&, int frame_idx) {
    const auto path = dir_ / (std::to_string(frame_idx) + ".flow");
    const ArrayFile arr = read_array(path);
    if (arr.dims.size() != 3 || arr.dims[2] != 2)
        throw std::runtime_error("flow file must be HxWx2: " + path.string());
    MotionMap m;
    m.mode = MotionMap::Mode::Flow;
    m.h = static_cast<int>(arr.dims[0]);
    m.w = static_cast<int>(arr.dims[1]);
    if (m.h != a.h || m.w != a.w)
        throw std::runtime_error("flow file shape mismatch: " + path.string());
    m.values = arr.as_f32();
    return m;
}

MotionMap StaticFlow::flow(const ImageU8&, const ImageU8&, int frame_idx) {
    if (frame_idx < 0 || frame_idx >= static_cast<int>(per_frame_.size()))
        throw std::out_of_range("StaticFlow: no map for frame " + std::to_string(frame_idx));
    return per_frame_[frame_idx];
}

std::vector<Detection> detect_objects_scored(const ImageU8& frame, DetectorAdapter* adapter,
                                             float t_s, int frame_idx) {
    if (adapter == nullptr)
        throw std::runtime_error(
            "detector adapter not configured: motion cues alone cannot provide "
            "appearance RoIs; supply a detector or disable the appearance branch");
    std::vector<Detection> kept;
    for (auto& d : adapter->detect(frame, frame_idx)) {
        if (d.confidence > t_s) {
            d.box = d.box.clipped(frame.h, frame.w);
            d.class_id = -1;
            if (d.box.valid()) kept.push_back(d);
        }
    }
    return kept;
}

std::vector<BoundingBox> detect_objects(const ImageU8& frame, DetectorAdapter* adapter,
                                        float t_s, int frame_idx) {
    std::vector<BoundingBox> boxes;
    for (const auto& d : detect_objects_scored(frame, adapter, t_s, frame_idx))
        boxes.push_back(d.box);
    return boxes;
}

MotionMap temporal_gradient_map(const ImageU8& frame_t, const ImageU8& frame_t_minus_1) {
    if (frame_t.h != frame_t_minus_1.h || frame_t.w != frame_t_minus_1.w ||
        frame_t.c != frame_t_minus_1.c)
        throw std::invalid_argument("temporal_gradient_map: frame shapes differ");
    MotionMap m;
    m.mode = MotionMap::Mode::Gradient;
    m.h = frame_t.h;
    m.w = frame_t.w;
    m.values.resize(static_cast<std::size_t>(m.h) * m.w);
    for (int y = 0; y < m.h; ++y)
        for (int x = 0; x < m.w; ++x) {
            int best = 0;
            for (int ch = 0; ch < frame_t.c; ++ch) {
                const int d = std::abs(static_cast<int>(frame_t.at(y, x, ch)) -
                                       static_cast<int>(frame_t_minus_1.at(y, x, ch)));
                best = std::max(best, d);
            }
            m.at(y, x, 0) = static_cast<float>(best);
        }
    return m;
}

MotionMap flow_map(const ImageU8& frame_t, const ImageU8& frame_t_plus_1,
                   FlowAdapter* adapter, int frame_idx) {
    if (adapter == nullptr)
        throw std::runtime_error(
            "flow adapter not configured: fall back to gradient motion cues "
            "(degraded mode) or supply a flow adapter");
    return adapter->flow(frame_t, frame_t_plus_1, frame_idx);
}

void write_detections_file(const std::filesystem::path& path, const std::vector<Detection>& dets) {
    std::vector<float> rows;
    rows.reserve(dets.size() * 6);
    for (const auto& d : dets) {
        rows.push_back(static_cast<float>(d.box.x1));
        rows.push_back(static_cast<float>(d.box.y1));
        rows.push_back(static_cast<float>(d.box.x2));
        rows.push_back(static_cast<float>(d.box.y2));
        rows.push_back(d.confidence);
        rows.push_back(static_cast<float>(d.class_id));
    }
    write_array_f32(path, {static_cast<std::uint32_t>(dets.size()), 6u}, rows);
}

void write_flow_file(const std::filesystem::path& path, const MotionMap& flow) {
    if (flow.mode != MotionMap::Mode::Flow)
        throw std::invalid_argument("write_flow_file: map is not in flow mode");
    write_array_f32(path,
                    {static_cast<std::uint32_t>(flow.h), static_cast<std::uint32_t>(flow.w), 2u},
                    flow.values);
}

} // namespace vcc
