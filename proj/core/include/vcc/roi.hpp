#pragma once

#include <vector>

#include "vcc/adapters.hpp"
#include "vcc/box.hpp"

namespace vcc {

struct RoiThresholds {
    float t_s = 0.5f;   // detector confidence
    float t_a = 144.f;  // minimum box area (px^2)
    float t_o = 0.6f;   // overlap ratio against larger kept boxes
    float t_b = 1.f;    // motion magnitude binarization
    float t_ar = 10.f;  // aspect ratio band (1/t_ar, t_ar)

    void validate() const; // throws on out-of-range values
};

struct BinaryMap {
    int h = 0;
    int w = 0;
    std::vector<std::uint8_t> data;

    BinaryMap() = default;
    BinaryMap(int h_, int w_) : h(h_), w(w_), data(static_cast<std::size_t>(h_) * w_, 0) {}
    std::uint8_t& at(int y, int x) { return data[static_cast<std::size_t>(y) * w + x]; }
    std::uint8_t at(int y, int x) const { return data[static_cast<std::size_t>(y) * w + x]; }
    std::size_t count_true() const;
};

struct RoiSet {
    std::vector<BoundingBox> appearance; // B_a
    std::vector<BoundingBox> motion;     // B_m

    std::vector<BoundingBox> all() const; // B_a followed by B_m
};

// Drops boxes with area <= t_a, then greedily drops any box whose overlap
// ratio (intersection over the smaller area) against an already-kept box of
// larger-or-equal area reaches t_o. Nested boxes always hit ratio 1.
// Candidates are ranked by area; equal areas rank by confidence, then by
// input order, so the output is deterministic.
std::vector<BoundingBox> filter_appearance_rois(const std::vector<Detection>& detections,
                                                float t_a, float t_o);
std::vector<BoundingBox> filter_appearance_rois(const std::vector<BoundingBox>& boxes,
                                                float t_a, float t_o);

// Pixel true iff motion magnitude > t_b.
BinaryMap binarize(const MotionMap& motion, float t_b);

// Clears every pixel covered by a box.
BinaryMap subtract_rois(const BinaryMap& map, const std::vector<BoundingBox>& boxes);

// Bounding boxes of the outer borders of 8-connected regions (border
// following), in raster order of each region's topmost-leftmost pixel.
std::vector<BoundingBox> trace_region_boxes(const BinaryMap& map);

// Outer-contour boxes filtered by area > t_a and 1/t_ar < w/h < t_ar.
std::vector<BoundingBox> detect_motion_rois(const BinaryMap& map, float t_a, float t_ar);

// Full per-frame pipeline. A null detector disables the appearance branch
// (B_a empty); the motion branch runs either way.
RoiSet extract_rois(const ImageU8& frame, const MotionMap& motion,
                    DetectorAdapter* detector, const RoiThresholds& th,
                    int frame_idx = 0);

} // namespace vcc
