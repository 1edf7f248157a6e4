#pragma once

#include <cstdint>
#include <vector>

#include "vcc/box.hpp"

namespace vcc {

// Interleaved HxWxC raster, 8-bit. Channel order is whatever the decoder
// produced; nothing downstream assigns meaning to individual channels.
struct ImageU8 {
    int h = 0;
    int w = 0;
    int c = 0;
    std::vector<std::uint8_t> data;

    ImageU8() = default;
    ImageU8(int h_, int w_, int c_, std::uint8_t fill = 0)
        : h(h_), w(w_), c(c_), data(static_cast<std::size_t>(h_) * w_ * c_, fill) {}

    std::uint8_t& at(int y, int x, int ch) {
        return data[(static_cast<std::size_t>(y) * w + x) * c + ch];
    }
    std::uint8_t at(int y, int x, int ch) const {
        return data[(static_cast<std::size_t>(y) * w + x) * c + ch];
    }
    std::size_t size() const { return data.size(); }

    friend bool operator==(const ImageU8&, const ImageU8&) = default;
};

// Interleaved float raster; used for resized patches and flow fields.
struct ImageF {
    int h = 0;
    int w = 0;
    int c = 0;
    std::vector<float> data;

    ImageF() = default;
    ImageF(int h_, int w_, int c_, float fill = 0.f)
        : h(h_), w(w_), c(c_), data(static_cast<std::size_t>(h_) * w_ * c_, fill) {}

    float& at(int y, int x, int ch) {
        return data[(static_cast<std::size_t>(y) * w + x) * c + ch];
    }
    float at(int y, int x, int ch) const {
        return data[(static_cast<std::size_t>(y) * w + x) * c + ch];
    }
    std::size_t size() const { return data.size(); }

    friend bool operator==(const ImageF&, const ImageF&) = default;
};

ImageF to_float(const ImageU8& img);
ImageU8 to_u8_clamped(const ImageF& img);

// Replicates a single channel across three; 3-channel input passes through.
ImageU8 ensure_3ch(const ImageU8& img);

ImageF crop(const ImageF& img, const BoundingBox& box);
ImageF crop(const ImageU8& img, const BoundingBox& box);

// Bilinear resample with half-pixel centers. Resizing to the source size
// reproduces the input exactly; output values never leave the input's range.
ImageF resize_bilinear(const ImageF& src, int out_h, int out_w);

ImageF crop_resize(const ImageU8& img, const BoundingBox& box, int out_h, int out_w);
ImageF crop_resize(const ImageF& img, const BoundingBox& box, int out_h, int out_w);

} // namespace vcc
