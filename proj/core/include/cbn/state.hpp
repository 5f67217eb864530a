#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbn {

/// One bit per node, packed into 64-bit words by node index.
/// String form puts node 0 leftmost.
class CbnState {
public:
    CbnState() = default;
    explicit CbnState(std::size_t size, bool value = false);

    /// Parse "0101..."; throws specification_error on any other character.
    static CbnState from_string(std::string_view bits);

    /// Bit i of `code` becomes node i. Requires size <= 64.
    static CbnState from_code(std::size_t size, std::uint64_t code);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] bool operator[](std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    [[nodiscard]] bool test(std::size_t i) const;
    void set(std::size_t i, bool value);

    [[nodiscard]] bool all() const noexcept;
    [[nodiscard]] bool none() const noexcept;
    [[nodiscard]] std::size_t count() const noexcept;

    /// Componentwise x <= y.
    [[nodiscard]] bool leq(const CbnState& other) const;

    /// Packed form for size <= 64; throws dimension_error otherwise.
    [[nodiscard]] std::uint64_t code() const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::size_t hash() const noexcept;

    friend bool operator==(const CbnState&, const CbnState&) = default;
    friend std::strong_ordering operator<=>(const CbnState& a, const CbnState& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct CbnStateHash {
    std::size_t operator()(const CbnState& s) const noexcept { return s.hash(); }
};

} // namespace cbn
