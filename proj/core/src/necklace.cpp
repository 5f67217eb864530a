#include "cbn/necklace.hpp"

#include "cbn/errors.hpp"

#include <algorithm>

namespace cbn {

std::size_t least_rotation(std::span<const std::uint8_t> bits) {
    const std::size_t n = bits.size();
    if (n == 0) {
        throw specification_error("empty bit string has no rotation");
    }
    // Booth's failure-function scan over the doubled string.
    const auto at = [&](std::size_t i) { return bits[i % n]; };
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const auto sj = at(j);
        long i = fail[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1)) {
                k = j - static_cast<std::size_t>(i) - 1;
            }
            i = fail[static_cast<std::size_t>(i)];
        }
        if (sj != at(k + static_cast<std::size_t>(i + 1))) {
            if (sj < at(k)) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

Necklace::Necklace(std::span<const std::uint8_t> bits) {
    if (bits.empty()) {
        throw specification_error("necklace needs at least one bead");
    }
    const std::size_t start = least_rotation(bits);
    bits_.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits_.push_back(bits[(start + i) % bits.size()] != 0 ? 1 : 0);
    }
}

Necklace Necklace::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw specification_error("invalid character '" + std::string(1, c) + "' in necklace \"" +
                                      std::string(text) + "\"");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return Necklace(bits);
}

std::string Necklace::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out += b != 0 ? '1' : '0';
    }
    return out;
}

std::size_t Necklace::period() const {
    const std::size_t p = bits_.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) {
            continue;
        }
        bool invariant = true;
        for (std::size_t i = 0; i < p && invariant; ++i) {
            invariant = bits_[i] == bits_[(i + d) % p];
        }
        if (invariant) {
            return d;
        }
    }
    return p;
}

Necklace necklace_canonical(std::span<const std::uint8_t> bits) { return Necklace(bits); }

Necklace necklace_canonical(std::string_view bits) { return Necklace::parse(bits); }

std::vector<Necklace> enumerate_necklaces(std::size_t p) {
    if (p == 0) {
        throw specification_error("necklace length must be positive");
    }
    if (p > max_necklace_length) {
        throw budget_error("necklace enumeration limited to length " + std::to_string(max_necklace_length));
    }
    std::vector<Necklace> out;
    std::vector<std::uint8_t> bits(p);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
        // Most significant bit first, so numeric order is string order.
        for (std::size_t i = 0; i < p; ++i) {
            bits[i] = (code >> (p - 1 - i)) & 1U;
        }
        if (least_rotation(bits) != 0) {
            continue;
        }
        // A periodic string has several least rotations; keep only the
        // instance that is already canonical.
        Necklace n(bits);
        if (n.bits() == bits) {
            out.push_back(std::move(n));
        }
    }
    return out;
}

std::uint64_t necklace_count(std::size_t p) {
    if (p == 0 || p > 62) {
        throw specification_error("necklace_count supports lengths 1..62");
    }
    const auto phi = [](std::size_t m) {
        std::size_t result = m;
        for (std::size_t q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                while (m % q == 0) {
                    m /= q;
                }
                result -= result / q;
            }
        }
        if (m > 1) {
            result -= result / m;
        }
        return result;
    };
    std::uint64_t sum = 0;
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d == 0) {
            sum += static_cast<std::uint64_t>(phi(d)) * (std::uint64_t{1} << (p / d));
        }
    }
    return sum / p;
}

} // namespace cbn
