#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>

namespace divlcp::cli {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return data;
}

void write_ints(const std::filesystem::path& path, const std::vector<std::int64_t>& values,
                Format format, int width) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    if (format == Format::Text) {
        std::string buf;
        for (std::int64_t v : values) {
            buf += std::to_string(v);
            buf += '\n';
            if (buf.size() > (1 << 20)) {
                out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
                buf.clear();
            }
        }
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    } else {
        const int bytes = width / 8;
        std::vector<char> buf(values.size() * bytes);
        char* p = buf.data();
        for (std::int64_t v : values) {
            auto u = static_cast<std::uint64_t>(v);
            for (int b = 0; b < bytes; ++b, u >>= 8) *p++ = static_cast<char>(u & 0xff);
        }
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    if (!out.flush()) throw IoError("write failed: " + path.string());
}

std::vector<std::int64_t> read_ints(const std::filesystem::path& path, Format format, int width) {
    const std::vector<std::uint8_t> data = read_bytes(path);
    std::vector<std::int64_t> values;
    if (format == Format::Text) {
        const char* p = reinterpret_cast<const char*>(data.data());
        const char* end = p + data.size();
        std::size_t line = 1;
        while (p < end) {
            const char* eol = std::find(p, end, '\n');
            const char* e = eol;
            if (e > p && e[-1] == '\r') --e;
            if (e > p) {
                std::int64_t v = 0;
                auto [ptr, ec] = std::from_chars(p, e, v);
                if (ec != std::errc() || ptr != e || v < 0)
                    throw FormatError(path.string() + ":" + std::to_string(line) + ": not a non-negative integer");
                values.push_back(v);
            }
            p = eol + (eol < end);
            ++line;
        }
        return values;
    }
    const std::size_t bytes = static_cast<std::size_t>(width / 8);
    if (data.size() % bytes != 0)
        throw FormatError(path.string() + ": size " + std::to_string(data.size()) +
                          " is not a multiple of " + std::to_string(bytes));
    values.resize(data.size() / bytes);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint64_t u = 0;
        for (std::size_t b = bytes; b-- > 0;) u = (u << 8) | data[i * bytes + b];
        values[i] = static_cast<std::int64_t>(u);
    }
    return values;
}

}  // namespace divlcp::cli
