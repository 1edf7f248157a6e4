#pragma once

#include <algorithm>
#include <cstdint>

namespace vcc {

// Axis-aligned box in pixel coordinates, half-open: covers columns
// [x1, x2) and rows [y1, y2). A w x h object therefore has x2 - x1 == w.
struct BoundingBox {
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;

    int width() const { return x2 - x1; }
    int height() const { return y2 - y1; }
    std::int64_t area() const {
        return static_cast<std::int64_t>(width()) * height();
    }
    bool valid() const { return x1 < x2 && y1 < y2; }

    // Center in doubled coordinates so half-pixel centers stay integral.
    int center_x2() const { return x1 + x2; }
    int center_y2() const { return y1 + y2; }

    double aspect_ratio() const {
        return static_cast<double>(width()) / static_cast<double>(height());
    }

    BoundingBox clipped(int frame_h, int frame_w) const {
        BoundingBox b;
        b.x1 = std::clamp(x1, 0, frame_w);
        b.y1 = std::clamp(y1, 0, frame_h);
        b.x2 = std::clamp(x2, 0, frame_w);
        b.y2 = std::clamp(y2, 0, frame_h);
        return b;
    }

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

inline std::int64_t intersection_area(const BoundingBox& a, const BoundingBox& b) {
    const int w = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    const int h = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (w <= 0 || h <= 0) return 0;
    return static_cast<std::int64_t>(w) * h;
}

inline double iou(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t inter = intersection_area(a, b);
    const std::int64_t uni = a.area() + b.area() - inter;
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

// Intersection over the smaller box. Nested boxes score 1 regardless of the
// size difference, which is the property the appearance filter keys on.
inline double overlap_ratio_min(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t inter = intersection_area(a, b);
    const std::int64_t denom = std::min(a.area(), b.area());
    return denom > 0 ? static_cast<double>(inter) / static_cast<double>(denom) : 0.0;
}

} // namespace vcc
