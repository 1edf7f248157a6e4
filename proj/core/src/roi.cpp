#include "vcc/roi.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vcc {

void RoiThresholds::validate() const {
    if (t_s < 0.f || t_a <= 0.f || t_b < 0.f)
        throw std::invalid_argument("RoiThresholds: t_s, t_a, t_b must be non-negative (t_a > 0)");
    if (t_o <= 0.f || t_o > 1.f)
        throw std::invalid_argument("RoiThresholds: t_o must be in (0, 1]");
    if (t_ar <= 1.f)
        throw std::invalid_argument("RoiThresholds: t_ar must exceed 1");
}

std::size_t BinaryMap::count_true() const {
    return static_cast<std::size_t>(std::count_if(data.begin(), data.end(),
                                                  [](std::uint8_t v) { return v != 0; }));
}

std::vector<BoundingBox> RoiSet::all() const {
    std::vector<BoundingBox> out = appearance;
    out.insert(out.end(), motion.begin(), motion.end());
    return out;
}

namespace {

std::vector<BoundingBox> filter_ranked(std::vector<Detection> dets, float t_a, float t_o) {
    std::stable_sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
        if (a.box.area() != b.box.area()) return a.box.area() > b.box.area();
        return a.confidence > b.confidence;
    });
    std::vector<BoundingBox> kept;
    for (const auto& d : dets) {
        if (static_cast<float>(d.box.area()) <= t_a) continue;
        bool overlapped = false;
        for (const auto& k : kept) {
            if (overlap_ratio_min(d.box, k) >= t_o) {
                overlapped = true;
                break;
            }
        }
        if (!overlapped) kept.push_back(d.box);
    }
    return kept;
}

} // namespace

std::vector<BoundingBox> filter_appearance_rois(const std::vector<Detection>& detections,
                                                float t_a, float t_o) {
    return filter_ranked(detections, t_a, t_o);
}

std::vector<BoundingBox> filter_appearance_rois(const std::vector<BoundingBox>& boxes,
                                                float t_a, float t_o) {
    std::vector<Detection> dets(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) dets[i].box = boxes[i];
    return filter_ranked(std::move(dets), t_a, t_o);
}

BinaryMap binarize(const MotionMap& motion, float t_b) {
    BinaryMap bm(motion.h, motion.w);
    for (int y = 0; y < motion.h; ++y)
        for (int x = 0; x < motion.w; ++x)
            bm.at(y, x) = motion.magnitude(y, x) > t_b ? 1 : 0;
    return bm;
}

BinaryMap subtract_rois(const BinaryMap& map, const std::vector<BoundingBox>& boxes) {
    BinaryMap out = map;
    for (const auto& b : boxes) {
        const BoundingBox c = b.clipped(map.h, map.w);
        if (!c.valid()) continue;
        for (int y = c.y1; y < c.y2; ++y)
            std::fill(out.data.begin() + static_cast<std::size_t>(y) * map.w + c.x1,
                      out.data.begin() + static_cast<std::size_t>(y) * map.w + c.x2, 0);
    }
    return out;
}

namespace {

// 8-neighborhood in counterclockwise order (image coordinates, y down).
constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};

struct BorderTracer {
    const BinaryMap& src;
    std::vector<int> lab; // 0 background, 1 unvisited, +id / -id visited border

    explicit BorderTracer(const BinaryMap& m)
        : src(m), lab(m.data.size()) {
        for (std::size_t i = 0; i < m.data.size(); ++i) lab[i] = m.data[i] ? 1 : 0;
    }

    int get(int y, int x) const {
        if (y < 0 || y >= src.h || x < 0 || x >= src.w) return 0;
        return lab[static_cast<std::size_t>(y) * src.w + x];
    }
    void set(int y, int x, int v) { lab[static_cast<std::size_t>(y) * src.w + x] = v; }

    static int dir_of(int from_y, int from_x, int to_y, int to_x) {
        const int dy = to_y - from_y, dx = to_x - from_x;
        for (int d = 0; d < 8; ++d)
            if (kDy[d] == dy && kDx[d] == dx) return d;
        return -1;
    }

    // Follows one border starting at (sy, sx) whose triggering background
    // neighbor is (by, bx). Returns the border's bounding box when `record`.
    BoundingBox follow(int sy, int sx, int by, int bx, int id, bool record) {
        BoundingBox box{sx, sy, sx + 1, sy + 1};
        auto grow = [&box](int y, int x) {
            box.x1 = std::min(box.x1, x);
            box.y1 = std::min(box.y1, y);
            box.x2 = std::max(box.x2, x + 1);
            box.y2 = std::max(box.y2, y + 1);
        };
        (void)record;

        // Clockwise scan from the trigger pixel for the first foreground
        // neighbor; none means an isolated pixel.
        const int start_dir = dir_of(sy, sx, by, bx);
        int d1 = -1;
        for (int k = 0; k < 8; ++k) {
            const int d = (start_dir - k + 8) % 8;
            if (get(sy + kDy[d], sx + kDx[d]) != 0) {
                d1 = d;
                break;
            }
        }
        if (d1 < 0) {
            set(sy, sx, -id);
            return box;
        }

        int prev_y = sy + kDy[d1], prev_x = sx + kDx[d1]; // (i1, j1)
        int cur_y = sy, cur_x = sx;                        // (i3, j3)
        const int first_y = prev_y, first_x = prev_x;

        while (true) {
            // Counterclockwise scan around the current pixel, starting just
            // past the previous one.
            const int back = dir_of(cur_y, cur_x, prev_y, prev_x);
            int next_y = -1, next_x = -1;
            bool east_zero_seen = false;
            for (int k = 1; k <= 8; ++k) {
                const int d = (back + k) % 8;
                const int ny = cur_y + kDy[d], nx = cur_x + kDx[d];
                if (get(ny, nx) != 0) {
                    next_y = ny;
                    next_x = nx;
                    break;
                }
                if (d == 0) east_zero_seen = true; // examined east neighbor, zero
            }

            if (east_zero_seen)
                set(cur_y, cur_x, -id);
            else if (get(cur_y, cur_x) == 1)
                set(cur_y, cur_x, id);
            grow(cur_y, cur_x);

            if (next_y == sy && next_x == sx && cur_y == first_y && cur_x == first_x)
                break;
            prev_y = cur_y;
            prev_x = cur_x;
            cur_y = next_y;
            cur_x = next_x;
        }
        return box;
    }
};

} // namespace

std::vector<BoundingBox> trace_region_boxes(const BinaryMap& map) {
    BorderTracer tracer(map);
    std::vector<BoundingBox> boxes;
    int next_id = 1;
    for (int y = 0; y < map.h; ++y) {
        for (int x = 0; x < map.w; ++x) {
            const int v = tracer.get(y, x);
            if (v == 0) continue;
            if (v == 1 && tracer.get(y, x - 1) == 0) {
                // Outer border of a new region.
                ++next_id;
                boxes.push_back(tracer.follow(y, x, y, x - 1, next_id, true));
            } else if (v >= 1 && tracer.get(y, x + 1) == 0) {
                // Hole border: trace only to mark pixels, no box.
                ++next_id;
                tracer.follow(y, x, y, x + 1, next_id, false);
            }
        }
    }
    return boxes;
}

std::vector<BoundingBox> detect_motion_rois(const BinaryMap& map, float t_a, float t_ar) {
    std::vector<BoundingBox> out;
    for (const auto& b : trace_region_boxes(map)) {
        if (static_cast<float>(b.area()) <= t_a) continue;
        const double ar = b.aspect_ratio();
        if (ar <= 1.0 / t_ar || ar >= t_ar) continue;
        out.push_back(b);
    }
    return out;
}

RoiSet extract_rois(const ImageU8& frame, const MotionMap& motion,
                    DetectorAdapter* detector, const RoiThresholds& th, int frame_idx) {
    th.validate();
    if (motion.h != frame.h || motion.w != frame.w)
        throw std::invalid_argument("extract_rois: motion map does not match frame");

    RoiSet rois;
    if (detector != nullptr) {
        const auto dets = detect_objects_scored(frame, detector, th.t_s, frame_idx);
        rois.appearance = filter_appearance_rois(dets, th.t_a, th.t_o);
    }
    const BinaryMap bm = subtract_rois(binarize(motion, th.t_b), rois.appearance);
    rois.motion = detect_motion_rois(bm, th.t_a, th.t_ar);
    return rois;
}

} // namespace vcc
