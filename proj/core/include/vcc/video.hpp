#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vcc/image.hpp"

namespace vcc {

// A clip in memory. After ingestion every frame is 3-channel 8-bit and all
// frames share one geometry.
struct VideoSequence {
    std::string id;
    std::optional<double> frame_rate;
    std::vector<ImageU8> frames;

    int frame_h() const { return frames.empty() ? 0 : frames.front().h; }
    int frame_w() const { return frames.empty() ? 0 : frames.front().w; }
    int frame_count() const { return static_cast<int>(frames.size()); }
};

struct GroundTruth {
    std::vector<std::uint8_t> frame_labels;       // one 0/1 per frame
    std::vector<ImageU8> pixel_masks;             // optional; empty image = none

    bool has_masks() const;
    void validate(int frame_count) const;         // throws on inconsistency
};

// Loads either a directory of lexicographically ordered image files or a
// single decodable video file. Single-channel frames are replicated to three
// channels on the way in.
VideoSequence load_sequence(const std::filesystem::path& path);

// Writes frames as zero-padded "%06d.<ext>" image files.
void save_sequence(const VideoSequence& seq, const std::filesystem::path& dir,
                   const std::string& ext = "png");

// Ground-truth layout under <root>/gt/: "<clip>.labels" holds one 0/1 per
// line; optional mask images live in "<root>/gt/<clip>/%06d.png".
GroundTruth load_ground_truth(const std::filesystem::path& gt_root,
                              const std::string& clip_id, int frame_count);
void save_ground_truth(const GroundTruth& gt, const std::filesystem::path& gt_root,
                       const std::string& clip_id);

// Clip ids (subdirectory names) of a split directory, sorted.
std::vector<std::string> list_clips(const std::filesystem::path& split_dir);

} // namespace vcc
