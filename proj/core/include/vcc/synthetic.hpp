#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vcc/video.hpp"

namespace vcc {

enum class MotifShape { Square, Disk, Cross };

// One kind of moving foreground object. Motifs are value types; two motifs
// are the same motif iff every field matches.
struct Motif {
    MotifShape shape = MotifShape::Square;
    int size_px = 14;
    float speed = 2.f;            // px/frame
    float dir_x = 1.f;
    float dir_y = 0.f;
    std::array<std::uint8_t, 3> color = {200, 200, 200};

    friend bool operator==(const Motif&, const Motif&) = default;
};

struct SyntheticSpec {
    int canvas_h = 120;
    int canvas_w = 160;
    int frames = 120;
    std::vector<Motif> normal;
    std::vector<Motif> anomalies;
    int actors_per_motif = 1;
    // Inclusive frame window in which anomaly actors are on canvas.
    // start > end means no anomalies at all.
    int anomaly_start = -1;
    int anomaly_end = -2;
    std::uint64_t seed = 0;
    std::uint8_t background = 30;
    // Deterministic per-pixel texture riding on each actor, so that moving
    // interiors produce temporal gradients and trackable flow.
    int texture_amplitude = 40;
};

// Per-actor ground truth trajectory. boxes[f] is the actor's visible extent
// on frame f; an invalid box means the actor is absent from that frame.
struct ActorTrack {
    int motif_index = 0;
    bool anomaly = false;
    std::vector<BoundingBox> boxes;
};

struct SyntheticClip {
    VideoSequence video;
    GroundTruth gt;
    std::vector<ActorTrack> tracks;
};

// Deterministic renderer: the same spec always produces bit-identical frames,
// labels and masks. Frame labels are 1 exactly on frames where some anomaly
// actor is drawn, and pixel masks cover exactly the drawn anomaly pixels.
SyntheticClip generate_synthetic(const SyntheticSpec& spec);

} // namespace vcc
