/**
 * @file code.hpp
 * @brief Binary linear codes: generic codes from matrices, the block-diagonal
 *        families (repetition, distinct-weight, hybrid), simple parity-check
 *        codes, and Kronecker products.
 */
#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "coinf/matrix.hpp"
#include "coinf/word.hpp"

namespace coinf {

/// Enumeration beyond 2^28 codewords is refused by the brute-force paths.
inline constexpr int kMaxEnumerableDim = 28;

/// Construction provenance, kept so reports and closed forms can dispatch
/// without re-detecting structure.
struct Family {
    enum class Kind { generic, repetition, distinct_weight, hybrid, parity_check, product };

    Kind kind = Kind::generic;
    int r = 0;                             ///< repetition / distinct_weight parameter
    int k = 0;                             ///< repetition / distinct_weight parameter
    int n = 0;                             ///< parity_check parameter
    std::vector<std::vector<int>> parts;   ///< hybrid partition
    std::shared_ptr<const Family> left;    ///< product factor
    std::shared_ptr<const Family> right;   ///< product factor

    std::string name() const {
        switch (kind) {
            case Kind::repetition: return "repetition";
            case Kind::distinct_weight: return "distinct_weight";
            case Kind::hybrid: return "hybrid";
            case Kind::parity_check: return "parity_check";
            case Kind::product: return "product";
            default: return "generic";
        }
    }
};

/// Ordered partition of {0..n-1} into disjoint nonempty parts.
struct Partition {
    std::vector<std::vector<int>> parts;
    int n = 0;

    explicit Partition(std::vector<std::vector<int>> parts_) : parts(std::move(parts_)) {
        if (parts.empty()) throw std::invalid_argument("Partition: no parts");
        uint64_t seen = 0;
        int count = 0;
        for (const auto& part : parts) {
            if (part.empty()) throw std::invalid_argument("Partition: empty part");
            for (int i : part) {
                if (i < 0 || i >= kMaxWordLength)
                    throw std::invalid_argument("Partition: index " + std::to_string(i) + " out of range");
                if ((seen >> i) & 1u) throw std::invalid_argument("Partition: index " + std::to_string(i) + " repeated");
                seen |= uint64_t{1} << i;
                ++count;
            }
        }
        n = count;
        const uint64_t full = (uint64_t{1} << n) - 1;
        if (seen != full) throw std::invalid_argument("Partition: parts do not cover 0.." + std::to_string(n - 1));
    }
};

class BinaryCode {
   public:
    BinaryCode(GF2Matrix generator, Family family = {})
        : generator_(std::move(generator)), family_(std::move(family)) {
        if (generator_.cols < 1) throw std::invalid_argument("BinaryCode: length must be positive");
        RrefResult rr = rref(generator_);
        k_ = rr.rank;
        std::vector<uint64_t> basis_rows(rr.matrix.rows.begin(), rr.matrix.rows.begin() + k_);
        basis_ = GF2Matrix(std::move(basis_rows), generator_.cols);
    }

    int n() const { return generator_.cols; }
    int k() const { return k_; }
    const GF2Matrix& generator() const { return generator_; }
    /// Canonical full-rank basis of the code (rref of the generator).
    const GF2Matrix& basis() const { return basis_; }
    const Family& family() const { return family_; }

    uint64_t codeword_count() const { return uint64_t{1} << k_; }

    bool contains(const Word& c) const {
        if (c.n != n()) return false;
        // Reduce c against the rref basis.
        uint64_t rem = c.bits;
        for (int i = 0; i < k_; ++i) {
            const uint64_t row = basis_.rows[static_cast<size_t>(i)];
            const uint64_t pivot = row & ~(row - 1);  // lowest set bit
            if (rem & pivot) rem ^= row;
        }
        return rem == 0;
    }

   private:
    GF2Matrix generator_;
    GF2Matrix basis_;
    Family family_;
    int k_ = 0;
};

/// Visit all 2^k codewords exactly once (Gray-code order over the basis).
template <typename Fn>
void for_each_codeword(const BinaryCode& code, Fn&& fn) {
    if (code.k() > kMaxEnumerableDim)
        throw std::length_error("for_each_codeword: dimension " + std::to_string(code.k()) +
                                " exceeds enumeration cap " + std::to_string(kMaxEnumerableDim));
    uint64_t c = 0;
    fn(Word(c, code.n()));
    const uint64_t total = code.codeword_count();
    for (uint64_t t = 1; t < total; ++t) {
        c ^= code.basis().rows[static_cast<size_t>(std::countr_zero(t))];
        fn(Word(c, code.n()));
    }
}

/// All codewords, sorted by their integer encoding.
inline std::vector<Word> codewords(const BinaryCode& code) {
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(code.codeword_count()));
    for_each_codeword(code, [&](const Word& c) { out.push_back(c); });
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.bits < b.bits; });
    return out;
}

inline BinaryCode from_matrix(const GF2Matrix& m, Family family = {}) { return BinaryCode(m, std::move(family)); }

/// The r-times repetition code: k blocks of r ones, an [rk, k, r] code.
inline BinaryCode repetition_code(int r, int k) {
    if (r < 1 || k < 1) throw std::invalid_argument("repetition_code: r and k must be positive");
    if (r > kMaxWordLength || k > kMaxWordLength || r * k > kMaxWordLength)
        throw std::invalid_argument("repetition_code: length " + std::to_string(r * k) + " exceeds cap 63");
    std::vector<uint64_t> rows(static_cast<size_t>(k));
    const uint64_t block = (uint64_t{1} << r) - 1;
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = block << (i * r);
    Family f;
    f.kind = Family::Kind::repetition;
    f.r = r;
    f.k = k;
    return BinaryCode(GF2Matrix(std::move(rows), r * k), std::move(f));
}

/// Block-diagonal code with block sizes 2^r, 2^{r+1}, ..., 2^{r+k-1}:
/// a [2^{r+k} - 2^r, k, 2^r] code whose 2^k codeword weights are all distinct.
inline BinaryCode distinct_weight_code(int r, int k) {
    if (r < 0 || k < 1) throw std::invalid_argument("distinct_weight_code: need r >= 0, k >= 1");
    if (r + k > 6)  // length 2^{r+k} - 2^r <= 63 forces r+k <= 6
        throw std::invalid_argument("distinct_weight_code: length exceeds cap 63");
    const int n = (1 << (r + k)) - (1 << r);
    std::vector<uint64_t> rows(static_cast<size_t>(k));
    int offset = 0;
    for (int i = 0; i < k; ++i) {
        const int width = 1 << (r + i);
        rows[static_cast<size_t>(i)] = ((uint64_t{1} << width) - 1) << offset;
        offset += width;
    }
    Family f;
    f.kind = Family::Kind::distinct_weight;
    f.r = r;
    f.k = k;
    return BinaryCode(GF2Matrix(std::move(rows), n), std::move(f));
}

/// Generator row i is the indicator of part A_i; an [n, k, min |A_i|] code.
inline BinaryCode hybrid_code(const Partition& partition) {
    std::vector<uint64_t> rows(partition.parts.size(), 0);
    for (size_t i = 0; i < partition.parts.size(); ++i)
        for (int j : partition.parts[i]) rows[i] |= uint64_t{1} << j;
    Family f;
    f.kind = Family::Kind::hybrid;
    f.parts = partition.parts;
    return BinaryCode(GF2Matrix(std::move(rows), partition.n), std::move(f));
}

/// All even-weight words of length n: the [n, n-1, 2] simple parity-check code.
inline BinaryCode parity_check_code(int n) {
    if (n < 2 || n > kMaxWordLength) throw std::invalid_argument("parity_check_code: need 2 <= n <= 63");
    std::vector<uint64_t> rows(static_cast<size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i)
        rows[static_cast<size_t>(i)] = (uint64_t{1} << i) | (uint64_t{1} << (n - 1));
    Family f;
    f.kind = Family::Kind::parity_check;
    f.n = n;
    return BinaryCode(GF2Matrix(std::move(rows), n), std::move(f));
}

/**
 * Kronecker product of the two generators.  Coordinate (r, t) of the product
 * maps to flat index r * n2 + t, matching the block layout of the generator.
 */
inline BinaryCode product(const BinaryCode& c1, const BinaryCode& c2) {
    const int n1 = c1.n(), n2 = c2.n();
    if (n1 * n2 > kMaxWordLength)
        throw std::invalid_argument("product: length " + std::to_string(n1 * n2) + " exceeds cap 63");
    const auto& g1 = c1.generator();
    const auto& g2 = c2.generator();
    std::vector<uint64_t> rows;
    rows.reserve(static_cast<size_t>(g1.row_count()) * static_cast<size_t>(g2.row_count()));
    for (int a = 0; a < g1.row_count(); ++a) {
        for (int b = 0; b < g2.row_count(); ++b) {
            uint64_t row = 0;
            for (uint64_t ra = g1.rows[static_cast<size_t>(a)]; ra != 0; ra &= ra - 1)
                row |= g2.rows[static_cast<size_t>(b)] << (std::countr_zero(ra) * n2);
            rows.push_back(row);
        }
    }
    Family f;
    f.kind = Family::Kind::product;
    f.left = std::make_shared<Family>(c1.family());
    f.right = std::make_shared<Family>(c2.family());
    return BinaryCode(GF2Matrix(std::move(rows), n1 * n2), std::move(f));
}

/// Minimum weight over nonzero codewords.  The trivial code has none.
inline int min_distance(const BinaryCode& code) {
    if (code.k() < 1) throw std::domain_error("min_distance: no nonzero codewords");
    int best = code.n() + 1;
    for_each_codeword(code, [&](const Word& c) {
        if (!c.is_zero()) best = std::min(best, weight(c));
    });
    return best;
}

}  // namespace coinf
