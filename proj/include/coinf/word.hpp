/**
 * @file word.hpp
 * @brief Fixed-length words over GF(2) and the covering partial order.
 *
 * A Word is a vector in GF(2)^n packed into a single 64-bit integer; every
 * structure in this library (codewords, erasure patterns, hypercube points)
 * is a word of length n <= 63.  Coordinate i of the word is bit i of the
 * integer; this mapping is the single source of truth for every module,
 * including the indicator tables where a word doubles as a table index.
 *
 * Coordinates are 0-based throughout the library.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinf {

/// Largest supported word length: a word must fit one machine word.
inline constexpr int kMaxWordLength = 63;

struct Word {
    uint64_t bits = 0;  ///< bit i = coordinate i; bits >= position n are zero
    int n = 1;          ///< length, 1 <= n <= 63

    Word() = default;

    Word(uint64_t bits_, int n_) : bits(bits_), n(n_) {
        if (n_ < 1 || n_ > kMaxWordLength)
            throw std::invalid_argument("Word: length must be in [1, 63], got " + std::to_string(n_));
        if (n_ < 64 && (bits_ >> n_) != 0)
            throw std::invalid_argument("Word: bits set beyond position n-1");
    }

    bool operator==(const Word&) const = default;

    bool get(int i) const {
        check_index(i);
        return (bits >> i) & 1u;
    }

    /// Word with coordinate i flipped.
    Word flipped(int i) const {
        check_index(i);
        return Word(bits ^ (uint64_t{1} << i), n);
    }

    bool is_zero() const { return bits == 0; }

    /// GF(2) addition.
    Word operator^(const Word& other) const {
        if (other.n != n) throw std::invalid_argument("Word: length mismatch in +");
        return Word(bits ^ other.bits, n);
    }

    std::string str() const {
        std::string s(static_cast<size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if ((bits >> i) & 1u) s[static_cast<size_t>(i)] = '1';
        return s;
    }

   private:
    void check_index(int i) const {
        if (i < 0 || i >= n)
            throw std::out_of_range("Word: coordinate " + std::to_string(i) + " out of range for length " +
                                    std::to_string(n));
    }
};

/// Number of nonzero coordinates.
inline int weight(const Word& w) { return std::popcount(w.bits); }

/// Index set of nonzero coordinates, increasing.
inline std::vector<int> support(const Word& w) {
    std::vector<int> s;
    s.reserve(static_cast<size_t>(weight(w)));
    for (uint64_t b = w.bits; b != 0; b &= b - 1) s.push_back(std::countr_zero(b));
    return s;
}

/// true iff supp(y) is contained in supp(x), i.e. x covers y.
inline bool covers(const Word& x, const Word& y) {
    if (x.n != y.n) throw std::invalid_argument("covers: length mismatch");
    return (x.bits & y.bits) == y.bits;
}

/// Standard basis vector e_i of length n.
inline Word basis_word(int i, int n) {
    if (i < 0 || i >= n) throw std::out_of_range("basis_word: index out of range");
    return Word(uint64_t{1} << i, n);
}

inline Word zero_word(int n) { return Word(0, n); }

inline Word ones_word(int n) {
    Word w(0, n);
    w.bits = (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    return w;
}

/// Parse a 0/1 string; index 0 is the leftmost character.
inline Word parse_word(const std::string& s) {
    const int n = static_cast<int>(s.size());
    Word w = zero_word(n);
    for (int i = 0; i < n; ++i) {
        if (s[static_cast<size_t>(i)] == '1')
            w.bits |= uint64_t{1} << i;
        else if (s[static_cast<size_t>(i)] != '0')
            throw std::invalid_argument("parse_word: expected 0/1 string, got '" + s + "'");
    }
    return w;
}

}  // namespace coinf
