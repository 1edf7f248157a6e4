#include "vcc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vcc {

namespace {

struct Actor {
    Motif motif;
    int motif_index;
    bool anomaly;
    double x, y;   // center position
    double vx, vy; // velocity px/frame
    std::uint64_t texture_seed;
};

bool shape_covers(MotifShape shape, int size, int lx, int ly) {
    switch (shape) {
        case MotifShape::Square:
            return true;
        case MotifShape::Disk: {
            const double r = size / 2.0;
            const double dx = lx + 0.5 - r;
            const double dy = ly + 0.5 - r;
            return dx * dx + dy * dy <= r * r;
        }
        case MotifShape::Cross: {
            const int arm = std::max(1, size / 3);
            const int lo = (size - arm) / 2;
            const int hi = lo + arm;
            return (lx >= lo && lx < hi) || (ly >= lo && ly < hi);
        }
    }
    return false;
}

int texture_offset(int lx, int ly, std::uint64_t seed, int amplitude) {
    if (amplitude <= 0) return 0;
    std::uint64_t h = seed;
    h ^= static_cast<std::uint64_t>(lx) * 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h ^= static_cast<std::uint64_t>(ly) * 0x94d049bb133111ebull;
    h = (h ^ (h >> 27)) * 0x2545f4914f6cdd1dull;
    h ^= h >> 31;
    return static_cast<int>(h % (2 * static_cast<std::uint64_t>(amplitude) + 1)) - amplitude;
}

void bounce(double& pos, double& vel, double half, double limit) {
    pos += vel;
    if (pos - half < 0) {
        pos = half + (half - pos);
        vel = -vel;
    } else if (pos + half > limit) {
        pos = limit - half - (pos + half - limit);
        vel = -vel;
    }
    pos = std::clamp(pos, half, limit - half);
}

} // namespace

SyntheticClip generate_synthetic(const SyntheticSpec& spec) {
    if (spec.frames <= 0) throw std::invalid_argument("synthetic: frames must be positive");
    for (const auto* set : {&spec.normal, &spec.anomalies})
        for (const auto& m : *set)
            if (m.size_px >= spec.canvas_h || m.size_px >= spec.canvas_w || m.size_px <= 0)
                throw std::invalid_argument("synthetic: motif larger than canvas");
    for (const auto& a : spec.anomalies)
        for (const auto& n : spec.normal)
            if (a == n) throw std::invalid_argument("synthetic: motif sets must be disjoint");

    std::mt19937_64 rng(spec.seed);
    auto spawn = [&](const Motif& m, int motif_index, bool anomaly, int actor_ordinal) {
        const double half = m.size_px / 2.0;
        std::uniform_real_distribution<double> dx(half + 1, spec.canvas_w - half - 1);
        std::uniform_real_distribution<double> dy(half + 1, spec.canvas_h - half - 1);
        Actor a;
        a.motif = m;
        a.motif_index = motif_index;
        a.anomaly = anomaly;
        a.x = dx(rng);
        a.y = dy(rng);
        const double norm = std::hypot(m.dir_x, m.dir_y);
        const double flip = (actor_ordinal % 2 == 0) ? 1.0 : -1.0;
        a.vx = norm > 0 ? flip * m.speed * m.dir_x / norm : 0.0;
        a.vy = norm > 0 ? flip * m.speed * m.dir_y / norm : 0.0;
        a.texture_seed = rng();
        return a;
    };

    std::vector<Actor> actors;
    for (std::size_t mi = 0; mi < spec.normal.size(); ++mi)
        for (int k = 0; k < spec.actors_per_motif; ++k)
            actors.push_back(spawn(spec.normal[mi], static_cast<int>(mi), false, k));
    for (std::size_t mi = 0; mi < spec.anomalies.size(); ++mi)
        for (int k = 0; k < spec.actors_per_motif; ++k)
            actors.push_back(spawn(spec.anomalies[mi], static_cast<int>(mi), true, k));

    SyntheticClip clip;
    clip.video.id = "synthetic";
    clip.tracks.resize(actors.size());
    for (std::size_t i = 0; i < actors.size(); ++i) {
        clip.tracks[i].motif_index = actors[i].motif_index;
        clip.tracks[i].anomaly = actors[i].anomaly;
        clip.tracks[i].boxes.assign(spec.frames, BoundingBox{});
    }
    clip.gt.frame_labels.assign(spec.frames, 0);
    clip.gt.pixel_masks.resize(spec.frames);

    for (int f = 0; f < spec.frames; ++f) {
        ImageU8 frame(spec.canvas_h, spec.canvas_w, 3, spec.background);
        ImageU8 mask(spec.canvas_h, spec.canvas_w, 1, 0);
        bool any_anomaly = false;

        for (std::size_t ai = 0; ai < actors.size(); ++ai) {
            Actor& a = actors[ai];
            const bool active = !a.anomaly || (f >= spec.anomaly_start && f <= spec.anomaly_end);
            if (f > 0) {
                const double half = a.motif.size_px / 2.0;
                bounce(a.x, a.vx, half, spec.canvas_w);
                bounce(a.y, a.vy, half, spec.canvas_h);
            }
            if (!active) continue;

            const int s = a.motif.size_px;
            const int x0 = static_cast<int>(std::lround(a.x - s / 2.0));
            const int y0 = static_cast<int>(std::lround(a.y - s / 2.0));
            int min_x = spec.canvas_w, min_y = spec.canvas_h, max_x = -1, max_y = -1;
            for (int ly = 0; ly < s; ++ly) {
                const int py = y0 + ly;
                if (py < 0 || py >= spec.canvas_h) continue;
                for (int lx = 0; lx < s; ++lx) {
                    const int px = x0 + lx;
                    if (px < 0 || px >= spec.canvas_w) continue;
                    if (!shape_covers(a.motif.shape, s, lx, ly)) continue;
                    const int off = texture_offset(lx, ly, a.texture_seed, spec.texture_amplitude);
                    for (int ch = 0; ch < 3; ++ch)
                        frame.at(py, px, ch) = static_cast<std::uint8_t>(
                            std::clamp(static_cast<int>(a.motif.color[ch]) + off, 0, 255));
                    if (a.anomaly) mask.at(py, px, 0) = 255;
                    min_x = std::min(min_x, px);
                    min_y = std::min(min_y, py);
                    max_x = std::max(max_x, px);
                    max_y = std::max(max_y, py);
                }
            }
            if (max_x >= 0) {
                clip.tracks[ai].boxes[f] = BoundingBox{min_x, min_y, max_x + 1, max_y + 1};
                if (a.anomaly) any_anomaly = true;
            }
        }

        clip.gt.frame_labels[f] = any_anomaly ? 1 : 0;
        if (any_anomaly) clip.gt.pixel_masks[f] = std::move(mask);
        clip.video.frames.push_back(std::move(frame));
    }
    return clip;
}

} // namespace vcc
