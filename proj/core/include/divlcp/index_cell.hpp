#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace divlcp {

template <class I>
concept IndexCell = std::same_as<I, std::int32_t> || std::same_as<I, std::int64_t>;

// Thrown when the text does not fit the signed range of the chosen cell width.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A marked cell stores ~v. The sign bit is the flag, the payload survives.
template <IndexCell I>
constexpr I mark(I v) noexcept { return ~v; }

template <IndexCell I>
constexpr bool is_marked(I v) noexcept { return v < 0; }

template <IndexCell I>
constexpr I decode(I v) noexcept { return v < 0 ? ~v : v; }

template <IndexCell I>
constexpr std::size_t max_text_length() noexcept {
    return static_cast<std::size_t>(std::numeric_limits<I>::max());
}

template <IndexCell I>
void check_capacity(std::size_t n) {
    if (n > max_text_length<I>())
        throw CapacityError("text of " + std::to_string(n) + " bytes exceeds " +
                            std::to_string(sizeof(I) * 8) + "-bit index capacity");
}

}  // namespace divlcp
