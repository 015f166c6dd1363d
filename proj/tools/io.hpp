#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace divlcp::cli {

enum class Format { Raw, Text };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is malformed for the requested format or width.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

// raw: packed little-endian unsigned integers of width/8 bytes each.
// text: one decimal integer per line.
void write_ints(const std::filesystem::path& path, const std::vector<std::int64_t>& values,
                Format format, int width);

template <class I>
void write_ints(const std::filesystem::path& path, const std::vector<I>& values, Format format,
                int width) {
    write_ints(path, std::vector<std::int64_t>(values.begin(), values.end()), format, width);
}

std::vector<std::int64_t> read_ints(const std::filesystem::path& path, Format format, int width);

}  // namespace divlcp::cli
