#include "vcc/video.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cv_bridge.hpp"

namespace fs = std::filesystem;

namespace vcc {

namespace {

const std::set<std::string> kImageExts = {
    ".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff", ".ppm", ".pgm"};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string frame_name(int idx, const std::string& ext) {
    std::ostringstream os;
    os.width(6);
    os.fill('0');
    os << idx;
    return os.str() + "." + ext;
}

VideoSequence load_from_dir(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && kImageExts.count(lower(e.path().extension().string())))
            files.push_back(e.path());
    }
    if (files.empty())
        throw std::runtime_error("load_sequence: no image files in " + dir.string());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    VideoSequence seq;
    seq.id = dir.filename().string();
    for (const auto& f : files) {
        cv::Mat m = cv::imread(f.string(), cv::IMREAD_UNCHANGED);
        if (m.empty()) throw std::runtime_error("load_sequence: unreadable image " + f.string());
        if (m.channels() == 4) cv::cvtColor(m, m, cv::COLOR_BGRA2BGR);
        if (m.depth() != CV_8U) m.convertTo(m, CV_8U);
        ImageU8 img = ensure_3ch(from_mat(m));
        if (!seq.frames.empty() &&
            (img.h != seq.frame_h() || img.w != seq.frame_w()))
            throw std::runtime_error("load_sequence: inconsistent frame size at " + f.string());
        seq.frames.push_back(std::move(img));
    }
    return seq;
}

VideoSequence load_from_video(const fs::path& file) {
    cv::VideoCapture cap(file.string());
    if (!cap.isOpened())
        throw std::runtime_error("load_sequence: cannot decode video " + file.string());
    VideoSequence seq;
    seq.id = file.stem().string();
    const double fps = cap.get(cv::CAP_PROP_FPS);
    if (fps > 0) seq.frame_rate = fps;
    cv::Mat frame;
    while (cap.read(frame)) {
        cv::Mat m = frame.clone();
        if (m.channels() == 4) cv::cvtColor(m, m, cv::COLOR_BGRA2BGR);
        if (m.depth() != CV_8U) m.convertTo(m, CV_8U);
        seq.frames.push_back(ensure_3ch(from_mat(m)));
    }
    if (seq.frames.empty())
        throw std::runtime_error("load_sequence: video has no frames: " + file.string());
    return seq;
}

} // namespace

bool GroundTruth::has_masks() const {
    return std::any_of(pixel_masks.begin(), pixel_masks.end(),
                       [](const ImageU8& m) { return !m.data.empty(); });
}

void GroundTruth::validate(int frame_count) const {
    if (static_cast<int>(frame_labels.size()) != frame_count)
        throw std::runtime_error("ground truth: label count != frame count");
    if (!pixel_masks.empty() && static_cast<int>(pixel_masks.size()) != frame_count)
        throw std::runtime_error("ground truth: mask count != frame count");
    for (std::size_t i = 0; i < pixel_masks.size(); ++i) {
        const auto& m = pixel_masks[i];
        const bool nonempty = std::any_of(m.data.begin(), m.data.end(),
                                          [](std::uint8_t v) { return v != 0; });
        if (nonempty && frame_labels[i] == 0)
            throw std::runtime_error("ground truth: nonempty mask on a frame labeled normal");
    }
}

VideoSequence load_sequence(const fs::path& path) {
    if (!fs::exists(path))
        throw std::runtime_error("load_sequence: path does not exist: " + path.string());
    VideoSequence seq = fs::is_directory(path) ? load_from_dir(path) : load_from_video(path);
    for (const auto& f : seq.frames)
        if (f.c != 3) throw std::runtime_error("load_sequence: internal channel error");
    return seq;
}

void save_sequence(const VideoSequence& seq, const fs::path& dir, const std::string& ext) {
    fs::create_directories(dir);
    for (int i = 0; i < seq.frame_count(); ++i) {
        const fs::path p = dir / frame_name(i, ext);
        if (!cv::imwrite(p.string(), to_mat(seq.frames[i])))
            throw std::runtime_error("save_sequence: cannot write " + p.string());
    }
}

GroundTruth load_ground_truth(const fs::path& gt_root, const std::string& clip_id,
                              int frame_count) {
    GroundTruth gt;
    const fs::path labels = gt_root / (clip_id + ".labels");
    std::ifstream is(labels);
    if (!is) throw std::runtime_error("load_ground_truth: missing " + labels.string());
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        gt.frame_labels.push_back(line[0] == '1' ? 1 : 0);
    }
    const fs::path mask_dir = gt_root / clip_id;
    if (fs::is_directory(mask_dir)) {
        gt.pixel_masks.resize(gt.frame_labels.size());
        for (std::size_t i = 0; i < gt.frame_labels.size(); ++i) {
            const fs::path p = mask_dir / frame_name(static_cast<int>(i), "png");
            if (fs::exists(p)) {
                cv::Mat m = cv::imread(p.string(), cv::IMREAD_GRAYSCALE);
                if (m.empty()) throw std::runtime_error("load_ground_truth: bad mask " + p.string());
                gt.pixel_masks[i] = from_mat(m);
            }
        }
    }
    gt.validate(frame_count);
    return gt;
}

void save_ground_truth(const GroundTruth& gt, const fs::path& gt_root,
                       const std::string& clip_id) {
    fs::create_directories(gt_root);
    std::ofstream os(gt_root / (clip_id + ".labels"));
    for (auto l : gt.frame_labels) os << static_cast<int>(l) << "\n";
    if (!os) throw std::runtime_error("save_ground_truth: write failure");
    if (gt.has_masks()) {
        const fs::path mask_dir = gt_root / clip_id;
        fs::create_directories(mask_dir);
        for (std::size_t i = 0; i < gt.pixel_masks.size(); ++i) {
            if (gt.pixel_masks[i].data.empty()) continue;
            cv::imwrite((mask_dir / frame_name(static_cast<int>(i), "png")).string(),
                        to_mat(gt.pixel_masks[i]));
        }
    }
}

std::vector<std::string> list_clips(const fs::path& split_dir) {
    std::vector<std::string> out;
    if (!fs::is_directory(split_dir))
        throw std::runtime_error("list_clips: not a directory: " + split_dir.string());
    for (const auto& e : fs::directory_iterator(split_dir))
        if (e.is_directory()) out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace vcc
