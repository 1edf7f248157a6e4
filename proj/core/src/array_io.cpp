#include "vcc/array_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace vcc {

namespace {

constexpr char kMagic[4] = {'V', 'C', 'A', '1'};

std::size_t dtype_size(ArrayDType t) {
    switch (t) {
        case ArrayDType::U8: return 1;
        case ArrayDType::F32: return 4;
        case ArrayDType::I32: return 4;
        case ArrayDType::F64: return 8;
    }
    throw std::invalid_argument("unknown array dtype");
}

} // namespace

std::size_t ArrayFile::element_count() const {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return dims.empty() ? 0 : n;
}

std::size_t ArrayFile::element_size() const { return dtype_size(dtype); }

std::vector<float> ArrayFile::as_f32() const {
    const std::size_t n = element_count();
    std::vector<float> out(n);
    switch (dtype) {
        case ArrayDType::F32:
            std::memcpy(out.data(), raw.data(), n * sizeof(float));
            break;
        case ArrayDType::U8:
            for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<float>(raw[i]);
            break;
        case ArrayDType::I32: {
            for (std::size_t i = 0; i < n; ++i) {
                std::int32_t v;
                std::memcpy(&v, raw.data() + i * 4, 4);
                out[i] = static_cast<float>(v);
            }
            break;
        }
        case ArrayDType::F64: {
            for (std::size_t i = 0; i < n; ++i) {
                double v;
                std::memcpy(&v, raw.data() + i * 8, 8);
                out[i] = static_cast<float>(v);
            }
            break;
        }
    }
    return out;
}

std::vector<std::uint8_t> ArrayFile::as_u8() const {
    if (dtype != ArrayDType::U8) throw std::runtime_error("array is not uint8");
    return raw;
}

void write_array_stream(std::ostream& os, ArrayDType dtype,
                        const std::vector<std::uint32_t>& dims, const void* data) {
    if (dims.empty() || dims.size() > 4)
        throw std::invalid_argument("write_array: ndim must be 1..4");
    os.write(kMagic, 4);
    const std::uint8_t dt = static_cast<std::uint8_t>(dtype);
    const std::uint8_t nd = static_cast<std::uint8_t>(dims.size());
    const std::uint8_t zero[2] = {0, 0};
    os.write(reinterpret_cast<const char*>(&dt), 1);
    os.write(reinterpret_cast<const char*>(&nd), 1);
    os.write(reinterpret_cast<const char*>(zero), 2);
    std::size_t n = 1;
    for (auto d : dims) {
        os.write(reinterpret_cast<const char*>(&d), 4);
        n *= d;
    }
    os.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n * dtype_size(dtype)));
    if (!os) throw std::runtime_error("write_array: stream failure");
}

ArrayFile read_array_stream(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_array: bad magic");
    std::uint8_t dt, nd, pad[2];
    is.read(reinterpret_cast<char*>(&dt), 1);
    is.read(reinterpret_cast<char*>(&nd), 1);
    is.read(reinterpret_cast<char*>(pad), 2);
    if (!is || dt > 3 || nd == 0 || nd > 4)
        throw std::runtime_error("read_array: bad header");
    ArrayFile arr;
    arr.dtype = static_cast<ArrayDType>(dt);
    arr.dims.resize(nd);
    std::size_t n = 1;
    for (auto& d : arr.dims) {
        is.read(reinterpret_cast<char*>(&d), 4);
        n *= d;
    }
    arr.raw.resize(n * dtype_size(arr.dtype));
    is.read(reinterpret_cast<char*>(arr.raw.data()), static_cast<std::streamsize>(arr.raw.size()));
    if (!is) throw std::runtime_error("read_array: truncated payload");
    return arr;
}

void write_array(const std::filesystem::path& path, ArrayDType dtype,
                 const std::vector<std::uint32_t>& dims, const void* data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_array: cannot open " + path.string());
    write_array_stream(os, dtype, dims, data);
}

ArrayFile read_array(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_array: cannot open " + path.string());
    return read_array_stream(is);
}

void write_array_f32(const std::filesystem::path& path,
                     const std::vector<std::uint32_t>& dims,
                     const std::vector<float>& values) {
    write_array(path, ArrayDType::F32, dims, values.data());
}

} // namespace vcc
