#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "vcc/box.hpp"
#include "vcc/image.hpp"

namespace vcc {

struct Detection {
    BoundingBox box;
    float confidence = 0.f;
    int class_id = -1; // carried through the handoff, ignored downstream
};

// Per-frame motion cue. Gradient mode stores one absolute-difference channel;
// flow mode stores the (dx, dy) displacement field.
struct MotionMap {
    enum class Mode { Gradient, Flow };
    Mode mode = Mode::Gradient;
    int h = 0;
    int w = 0;
    std::vector<float> values; // h*w (gradient) or h*w*2 (flow, interleaved)

    int channels() const { return mode == Mode::Flow ? 2 : 1; }
    float& at(int y, int x, int ch = 0) { return values[(static_cast<std::size_t>(y) * w + x) * channels() + ch]; }
    float at(int y, int x, int ch = 0) const { return values[(static_cast<std::size_t>(y) * w + x) * channels() + ch]; }

    // Scalar used for binarization: |diff| in gradient mode, magnitude in flow mode.
    float magnitude(int y, int x) const;
    std::vector<float> magnitude_map() const;
};

// Object detector hook. Real detectors run out of process and hand results
// over as files; in-process implementations cover tests and synthetic runs.
class DetectorAdapter {
public:
    virtual ~DetectorAdapter() = default;
    virtual std::vector<Detection> detect(const ImageU8& frame, int frame_idx) = 0;
    virtual std::string name() const = 0;
};

// Dense flow hook, same idea. flow(a, b) estimates displacement from a to b.
class FlowAdapter {
public:
    virtual ~FlowAdapter() = default;
    virtual MotionMap flow(const ImageU8& a, const ImageU8& b, int frame_idx) = 0;
    virtual std::string name() const = 0;
};

// Replays detections supplied up front; frames beyond the list are empty.
class StaticDetector final : public DetectorAdapter {
public:
    explicit StaticDetector(std::vector<std::vector<Detection>> per_frame)
        : per_frame_(std::move(per_frame)) {}
    std::vector<Detection> detect(const ImageU8&, int frame_idx) override;
    std::string name() const override { return "static"; }

private:
    std::vector<std::vector<Detection>> per_frame_;
};

// Reads "<dir>/<frame_idx>.det": an Nx6 float32 array file with rows
// (x1, y1, x2, y2, confidence, class_id).
class FileDetector final : public DetectorAdapter {
public:
    explicit FileDetector(std::filesystem::path clip_dir) : dir_(std::move(clip_dir)) {}
    std::vector<Detection> detect(const ImageU8& frame, int frame_idx) override;
    std::string name() const override { return "file"; }

private:
    std::filesystem::path dir_;
};

// Classic dense flow estimator (Farneback polynomial expansion). Needs no
// pretrained weights, so the full pipeline runs self-contained.
class FarnebackFlow final : public FlowAdapter {
public:
    MotionMap flow(const ImageU8& a, const ImageU8& b, int frame_idx) override;
    std::string name() const override { return "farneback"; }
};

// Reads "<dir>/<frame_idx>.flow": an HxWx2 float32 array file.
class FileFlow final : public FlowAdapter {
public:
    explicit FileFlow(std::filesystem::path clip_dir) : dir_(std::move(clip_dir)) {}
    MotionMap flow(const ImageU8& a, const ImageU8& b, int frame_idx) override;
    std::string name() const override { return "file"; }

private:
    std::filesystem::path dir_;
};

// Replays precomputed maps (tests).
class StaticFlow final : public FlowAdapter {
public:
    explicit StaticFlow(std::vector<MotionMap> per_frame) : per_frame_(std::move(per_frame)) {}
    MotionMap flow(const ImageU8&, const ImageU8&, int frame_idx) override;
    std::string name() const override { return "static"; }

private:
    std::vector<MotionMap> per_frame_;
};

// Keeps detections with confidence strictly above t_s, strips class labels,
// and clips boxes to the frame. Throws if the adapter is absent: appearance
// RoIs cannot be recovered from motion cues alone.
std::vector<BoundingBox> detect_objects(const ImageU8& frame, DetectorAdapter* adapter,
                                        float t_s, int frame_idx = 0);

// Filtered detections with confidences retained (the RoI filter uses them
// for deterministic tie-breaking).
std::vector<Detection> detect_objects_scored(const ImageU8& frame, DetectorAdapter* adapter,
                                             float t_s, int frame_idx = 0);

// Per-pixel |a - b|, maxed over channels.
MotionMap temporal_gradient_map(const ImageU8& frame_t, const ImageU8& frame_t_minus_1);

MotionMap flow_map(const ImageU8& frame_t, const ImageU8& frame_t_plus_1,
                   FlowAdapter* adapter, int frame_idx = 0);

// Adapter handoff writers (the inverse of FileDetector / FileFlow).
void write_detections_file(const std::filesystem::path& path, const std::vector<Detection>& dets);
void write_flow_file(const std::filesystem::path& path, const MotionMap& flow);

} // namespace vcc
