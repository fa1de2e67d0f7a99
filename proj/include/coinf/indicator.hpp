/**
 * @file indicator.hpp
 * @brief Bit-packed membership tables over the full hypercube GF(2)^n.
 *
 * An IndicatorMap holds one bit per word of GF(2)^n: bit at table position m
 * is the membership of the word whose integer encoding is m (bit i of m =
 * coordinate i, as in word.hpp).  All transforms below are bit-parallel: a
 * coordinate b < 6 acts inside each 64-bit table word through mask/shift
 * pairs, a coordinate b >= 6 acts on pairs of table words whose indices
 * differ in bit b-6.
 *
 * The in-place upward closure is the n * 2^n workhorse behind every Omega_i
 * computation.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinf/word.hpp"

namespace coinf {

/// Indicator tables above this length do not fit a desk-scale memory budget.
inline constexpr int kMaxIndicatorLength = 28;

/// Members of a set of words, one bit per point of GF(2)^n.
class IndicatorMap {
   public:
    explicit IndicatorMap(int n) : n_(n) {
        if (n < 1 || n > kMaxIndicatorLength)
            throw std::invalid_argument("IndicatorMap: length " + std::to_string(n) + " not in [1, " +
                                        std::to_string(kMaxIndicatorLength) + "]");
        words_.assign(word_count(n), 0);
    }

    int length() const { return n_; }
    uint64_t universe_size() const { return uint64_t{1} << n_; }

    bool test(uint64_t m) const { return (words_[m >> 6] >> (m & 63)) & 1u; }
    void set(uint64_t m) { words_[m >> 6] |= uint64_t{1} << (m & 63); }
    void set(const Word& w) {
        require_length(w.n);
        set(w.bits);
    }
    bool test(const Word& w) const {
        require_length(w.n);
        return test(w.bits);
    }

    uint64_t population() const {
        uint64_t total = 0;
        for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
        return total;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool operator==(const IndicatorMap&) const = default;

    IndicatorMap& operator|=(const IndicatorMap& other) {
        require_same(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    IndicatorMap& operator&=(const IndicatorMap& other) {
        require_same(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    IndicatorMap& operator^=(const IndicatorMap& other) {
        require_same(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    bool subset_of(const IndicatorMap& other) const {
        require_same(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const IndicatorMap& other) const {
        require_same(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    /**
     * In-place upward closure under the covering order: after the call, a
     * position is set iff it covers some originally set position.  One OR
     * pass per coordinate, n * 2^n bit operations total.
     */
    void upward_close() {
        for (int b = 0; b < n_ && b < 6; ++b) {
            const int s = 1 << b;
            const uint64_t lo = kLowHalf[b];
            for (auto& w : words_) w |= (w & lo) << s;
        }
        for (int b = 6; b < n_; ++b) {
            const size_t stride = size_t{1} << (b - 6);
            for (size_t base = 0; base < words_.size(); base += 2 * stride)
                for (size_t i = base; i < base + stride; ++i) words_[i + stride] |= words_[i];
        }
    }

    /// Positions whose membership toggles when coordinate j is flipped.
    IndicatorMap boundary(int j) const {
        IndicatorMap out = flip(j);
        out ^= *this;
        return out;
    }

    /// The translate { x + e_j : x in this } (table positions permuted).
    IndicatorMap flip(int j) const {
        require_coordinate(j);
        IndicatorMap out(n_);
        if (j < 6) {
            const int s = 1 << j;
            const uint64_t lo = kLowHalf[j];
            for (size_t i = 0; i < words_.size(); ++i) {
                const uint64_t w = words_[i];
                out.words_[i] = ((w & lo) << s) | ((w >> s) & lo);
            }
        } else {
            const size_t stride = size_t{1} << (j - 6);
            for (size_t base = 0; base < words_.size(); base += 2 * stride)
                for (size_t i = base; i < base + stride; ++i) {
                    out.words_[i] = words_[i + stride];
                    out.words_[i + stride] = words_[i];
                }
        }
        return out;
    }

    /// OR the boundary in direction j into acc, without a temporary table.
    void accumulate_boundary(int j, IndicatorMap& acc) const {
        require_coordinate(j);
        acc.require_same(*this);
        if (j < 6) {
            const int s = 1 << j;
            const uint64_t lo = kLowHalf[j];
            for (size_t i = 0; i < words_.size(); ++i) {
                const uint64_t w = words_[i];
                acc.words_[i] |= w ^ (((w & lo) << s) | ((w >> s) & lo));
            }
        } else {
            const size_t stride = size_t{1} << (j - 6);
            for (size_t base = 0; base < words_.size(); base += 2 * stride)
                for (size_t i = base; i < base + stride; ++i) {
                    const uint64_t d = words_[i] ^ words_[i + stride];
                    acc.words_[i] |= d;
                    acc.words_[i + stride] |= d;
                }
        }
    }

    /// true iff membership is monotone under the covering order.
    bool is_upward_closed() const {
        for (int b = 0; b < n_ && b < 6; ++b) {
            const int s = 1 << b;
            const uint64_t lo = kLowHalf[b];
            for (uint64_t w : words_)
                if (((w & lo) << s) & ~w) return false;
        }
        for (int b = 6; b < n_; ++b) {
            const size_t stride = size_t{1} << (b - 6);
            for (size_t base = 0; base < words_.size(); base += 2 * stride)
                for (size_t i = base; i < base + stride; ++i)
                    if (words_[i] & ~words_[i + stride]) return false;
        }
        return true;
    }

    /// true iff the set is invariant under flipping coordinate j.
    bool is_flip_symmetric(int j) const { return flip(j) == *this; }

    template <typename Fn>
    void for_each_member(Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i)
            for (uint64_t w = words_[i]; w != 0; w &= w - 1)
                fn((uint64_t{i} << 6) | static_cast<uint64_t>(std::countr_zero(w)));
    }

    std::vector<Word> members() const {
        std::vector<Word> out;
        out.reserve(static_cast<size_t>(population()));
        for_each_member([&](uint64_t m) { out.push_back(Word(m, n_)); });
        return out;
    }

    /// Raw dump: 8-byte little-endian length header, then the table bits,
    /// least significant byte first.
    void write_blob(std::ostream& os) const {
        for (int t = 0; t < 8; ++t) os.put(static_cast<char>((static_cast<uint64_t>(n_) >> (8 * t)) & 0xFF));
        const uint64_t bytes = (universe_size() + 7) / 8;
        for (uint64_t t = 0; t < bytes; ++t)
            os.put(static_cast<char>((words_[t >> 3] >> (8 * (t & 7))) & 0xFF));
    }

    static IndicatorMap read_blob(std::istream& is) {
        uint64_t n = 0;
        for (int t = 0; t < 8; ++t) {
            const int c = is.get();
            if (c < 0) throw std::runtime_error("IndicatorMap: truncated blob header");
            n |= static_cast<uint64_t>(c) << (8 * t);
        }
        if (n < 1 || n > kMaxIndicatorLength) throw std::runtime_error("IndicatorMap: bad blob length header");
        IndicatorMap out(static_cast<int>(n));
        const uint64_t bytes = (out.universe_size() + 7) / 8;
        for (uint64_t t = 0; t < bytes; ++t) {
            const int c = is.get();
            if (c < 0) throw std::runtime_error("IndicatorMap: truncated blob body");
            out.words_[t >> 3] |= static_cast<uint64_t>(c) << (8 * (t & 7));
        }
        return out;
    }

   private:
    static size_t word_count(int n) { return n >= 6 ? (size_t{1} << (n - 6)) : 1; }

    void require_same(const IndicatorMap& other) const {
        if (other.n_ != n_) throw std::invalid_argument("IndicatorMap: length mismatch");
    }
    void require_length(int n) const {
        if (n != n_) throw std::invalid_argument("IndicatorMap: word length mismatch");
    }
    void require_coordinate(int j) const {
        if (j < 0 || j >= n_) throw std::out_of_range("IndicatorMap: coordinate out of range");
    }

    /// kLowHalf[b]: table positions whose bit b is clear.
    static constexpr uint64_t kLowHalf[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                             0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

    int n_;
    std::vector<uint64_t> words_;
};

/// Member counts per Hamming weight: the sufficient statistic for measures
/// and influence polynomials.
struct WeightProfile {
    int n = 0;
    std::vector<uint64_t> counts;  ///< counts[w] = members of weight w, w = 0..n

    bool operator==(const WeightProfile&) const = default;

    uint64_t total() const {
        uint64_t t = 0;
        for (uint64_t c : counts) t += c;
        return t;
    }
};

inline WeightProfile weight_profile(const IndicatorMap& m) {
    WeightProfile p;
    p.n = m.length();
    p.counts.assign(static_cast<size_t>(p.n) + 1, 0);
    m.for_each_member([&](uint64_t idx) { ++p.counts[static_cast<size_t>(std::popcount(idx))]; });
    return p;
}

}  // namespace coinf
