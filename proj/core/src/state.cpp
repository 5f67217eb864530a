#include "cbn/state.hpp"

#include "cbn/errors.hpp"

#include <bit>

namespace cbn {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

std::uint64_t tail_mask(std::size_t size) {
    const std::size_t rem = size & 63;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

} // namespace

CbnState::CbnState(std::size_t size, bool value)
    : size_(size), words_(word_count(size), value ? ~std::uint64_t{0} : 0) {
    if (value && !words_.empty()) {
        words_.back() &= tail_mask(size_);
    }
}

CbnState CbnState::from_string(std::string_view bits) {
    CbnState s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            s.set(i, true);
        } else if (bits[i] != '0') {
            throw specification_error("invalid character '" + std::string(1, bits[i]) + "' in bit string \"" +
                                      std::string(bits) + "\"");
        }
    }
    return s;
}

CbnState CbnState::from_code(std::size_t size, std::uint64_t code) {
    if (size > 64) {
        throw dimension_error("packed state codes hold at most 64 nodes");
    }
    CbnState s(size);
    if (size > 0) {
        s.words_[0] = code & tail_mask(size);
    }
    return s;
}

bool CbnState::test(std::size_t i) const {
    if (i >= size_) {
        throw dimension_error("bit " + std::to_string(i) + " out of range for state of size " +
                              std::to_string(size_));
    }
    return (*this)[i];
}

void CbnState::set(std::size_t i, bool value) {
    if (i >= size_) {
        throw dimension_error("bit " + std::to_string(i) + " out of range for state of size " +
                              std::to_string(size_));
    }
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

bool CbnState::all() const noexcept {
    if (words_.empty()) {
        return true;
    }
    for (std::size_t w = 0; w + 1 < words_.size(); ++w) {
        if (words_[w] != ~std::uint64_t{0}) {
            return false;
        }
    }
    return words_.back() == tail_mask(size_);
}

bool CbnState::none() const noexcept {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::size_t CbnState::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool CbnState::leq(const CbnState& other) const {
    if (other.size_ != size_) {
        throw dimension_error("comparing states of different sizes");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t CbnState::code() const {
    if (size_ > 64) {
        throw dimension_error("state of size " + std::to_string(size_) + " has no 64-bit code");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string CbnState::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

std::size_t CbnState::hash() const noexcept {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// Orders like the string form: the first differing node decides.
std::strong_ordering operator<=>(const CbnState& a, const CbnState& b) {
    if (a.size_ != b.size_) {
        return a.size_ <=> b.size_;
    }
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff != 0) {
            const std::uint64_t lowest = diff & (~diff + 1);
            return (a.words_[w] & lowest) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

} // namespace cbn
