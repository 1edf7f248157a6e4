#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace vcc {

// Flat binary array container used for the out-of-process adapter handoff
// (.det / .flow files) and for internal archives.
//
// Layout, little-endian:
//   bytes 0..3   magic "VCA1"
//   byte  4      dtype: 0 = uint8, 1 = float32, 2 = int32, 3 = float64
//   byte  5      ndim (1..4)
//   bytes 6..7   reserved (zero)
//   then ndim x uint32 dims, then the row-major payload.
enum class ArrayDType : std::uint8_t { U8 = 0, F32 = 1, I32 = 2, F64 = 3 };

struct ArrayFile {
    ArrayDType dtype = ArrayDType::F32;
    std::vector<std::uint32_t> dims;
    std::vector<std::uint8_t> raw; // payload bytes

    std::size_t element_count() const;
    std::size_t element_size() const;

    std::vector<float> as_f32() const;       // converts U8/I32/F64 as needed
    std::vector<std::uint8_t> as_u8() const; // requires dtype == U8
};

void write_array(const std::filesystem::path& path, ArrayDType dtype,
                 const std::vector<std::uint32_t>& dims, const void* data);
ArrayFile read_array(const std::filesystem::path& path);

void write_array_f32(const std::filesystem::path& path,
                     const std::vector<std::uint32_t>& dims,
                     const std::vector<float>& values);

// Stream variants used by record archives that embed arrays.
void write_array_stream(std::ostream& os, ArrayDType dtype,
                        const std::vector<std::uint32_t>& dims, const void* data);
ArrayFile read_array_stream(std::istream& is);

} // namespace vcc
