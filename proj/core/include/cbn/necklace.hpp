#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbn {

/// Binary string up to rotation, stored as its lexicographically least
/// rotation. Read as the value sequence a single node shows on consecutive
/// time steps of a periodic orbit.
class Necklace {
public:
    Necklace() = default;

    /// Canonicalises; throws specification_error on empty input.
    explicit Necklace(std::span<const std::uint8_t> bits);

    /// "0110" -> necklace 0011. Throws specification_error on empty input or
    /// characters other than 0/1.
    static Necklace parse(std::string_view bits);

    [[nodiscard]] std::size_t length() const noexcept { return bits_.size(); }
    [[nodiscard]] const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    [[nodiscard]] bool operator[](std::size_t i) const { return bits_.at(i) != 0; }
    [[nodiscard]] std::string to_string() const;

    /// Smallest d >= 1 with the string invariant under rotation by d.
    [[nodiscard]] std::size_t period() const;

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend auto operator<=>(const Necklace&, const Necklace&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Start index of the least rotation (Booth's algorithm, O(p)).
[[nodiscard]] std::size_t least_rotation(std::span<const std::uint8_t> bits);

[[nodiscard]] Necklace necklace_canonical(std::span<const std::uint8_t> bits);
[[nodiscard]] Necklace necklace_canonical(std::string_view bits);

inline constexpr std::size_t max_necklace_length = 24;

/// All necklaces of length p in ascending order. Throws specification_error
/// for p == 0 and budget_error for p > max_necklace_length.
[[nodiscard]] std::vector<Necklace> enumerate_necklaces(std::size_t p);

/// (1/p) * sum over d | p of phi(d) * 2^(p/d).
[[nodiscard]] std::uint64_t necklace_count(std::size_t p);

} // namespace cbn
