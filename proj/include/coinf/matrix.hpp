/**
 * @file matrix.hpp
 * @brief Dense GF(2) matrices with at most 63 columns, and elimination-based
 *        algebra: reduced row echelon form, parity checks, linear solving.
 *
 * Rows are Words, so a matrix is a short list of 64-bit integers and every
 * row operation is a single XOR.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "coinf/word.hpp"

namespace coinf {

struct GF2Matrix {
    std::vector<uint64_t> rows;  ///< row i, bit j = entry (i, j)
    int cols = 0;

    GF2Matrix() = default;
    GF2Matrix(std::vector<uint64_t> rows_, int cols_) : rows(std::move(rows_)), cols(cols_) {
        if (cols_ < 0 || cols_ > kMaxWordLength)
            throw std::invalid_argument("GF2Matrix: column count must be in [0, 63]");
        const uint64_t excess = (cols_ >= 64) ? 0 : ~uint64_t{0} << cols_;
        for (uint64_t r : rows)
            if (r & excess) throw std::invalid_argument("GF2Matrix: row has bits beyond column count");
    }

    int row_count() const { return static_cast<int>(rows.size()); }

    bool operator==(const GF2Matrix&) const = default;

    bool get(int r, int c) const { return (rows[static_cast<size_t>(r)] >> c) & 1u; }

    Word row_word(int r) const { return Word(rows[static_cast<size_t>(r)], cols); }

    static GF2Matrix identity(int n) {
        std::vector<uint64_t> rows(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = uint64_t{1} << i;
        return GF2Matrix(std::move(rows), n);
    }

    static GF2Matrix from_strings(const std::vector<std::string>& row_strings, int cols) {
        std::vector<uint64_t> rows;
        rows.reserve(row_strings.size());
        for (const auto& s : row_strings) {
            if (static_cast<int>(s.size()) != cols)
                throw std::invalid_argument("GF2Matrix: row string length does not match column count");
            rows.push_back(parse_word(s).bits);
        }
        return GF2Matrix(std::move(rows), cols);
    }
};

struct RrefResult {
    GF2Matrix matrix;
    std::vector<int> pivots;  ///< pivot columns, increasing
    int rank = 0;
};

/// Reduced row echelon form over GF(2).  Row space is preserved.
inline RrefResult rref(const GF2Matrix& m) {
    RrefResult out;
    out.matrix = m;
    auto& rows = out.matrix.rows;
    int r = 0;
    for (int c = 0; c < m.cols && r < out.matrix.row_count(); ++c) {
        int pivot = -1;
        for (int i = r; i < out.matrix.row_count(); ++i) {
            if ((rows[static_cast<size_t>(i)] >> c) & 1u) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
        for (int i = 0; i < out.matrix.row_count(); ++i)
            if (i != r && ((rows[static_cast<size_t>(i)] >> c) & 1u)) rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(r)];
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

inline int rank(const GF2Matrix& m) { return rref(m).rank; }

/// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
inline GF2Matrix row_basis(const GF2Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<uint64_t> rows(rr.matrix.rows.begin(), rr.matrix.rows.begin() + rr.rank);
    return GF2Matrix(std::move(rows), m.cols);
}

inline bool is_systematic(const GF2Matrix& g) {
    const int k = g.row_count();
    if (k > g.cols) return false;
    const uint64_t id_mask = (k >= 64) ? ~uint64_t{0} : ((uint64_t{1} << k) - 1);
    for (int i = 0; i < k; ++i)
        if ((g.rows[static_cast<size_t>(i)] & id_mask) != (uint64_t{1} << i)) return false;
    return true;
}

/**
 * Parity-check matrix of a systematic generator G = [I_k | P]:
 * returns H = [P^T | I_{n-k}], the (n-k) x n matrix with G H^T = 0.
 */
inline GF2Matrix parity_check_from_systematic(const GF2Matrix& g) {
    if (!is_systematic(g))
        throw std::invalid_argument("parity_check_from_systematic: generator is not in systematic form");
    const int k = g.row_count();
    const int n = g.cols;
    std::vector<uint64_t> rows(static_cast<size_t>(n - k), 0);
    for (int j = 0; j < n - k; ++j) {
        uint64_t row = uint64_t{1} << (k + j);  // identity block
        for (int i = 0; i < k; ++i)
            if (g.get(i, k + j)) row |= uint64_t{1} << i;  // P transposed
        rows[static_cast<size_t>(j)] = row;
    }
    return GF2Matrix(std::move(rows), n);
}

struct LinearSolution {
    Word particular;                   ///< one solution of A x = b
    std::vector<Word> nullspace_basis; ///< basis of {x : A x = 0}
};

/**
 * Solve A x = b over GF(2), where x ranges over GF(2)^cols and b has one bit
 * per row of A.  Returns one solution together with a nullspace basis, or
 * nullopt when the system is inconsistent.
 *
 * A matrix with zero rows poses no constraints; b must then be the zero word
 * of length 1 (a Word cannot be empty).
 */
inline std::optional<LinearSolution> solve(const GF2Matrix& a, const Word& b) {
    const int n = a.cols;
    const int m = a.row_count();
    if (m > kMaxWordLength) throw std::invalid_argument("solve: too many constraint rows");
    if (b.n != std::max(1, m) || (m == 0 && b.bits != 0))
        throw std::invalid_argument("solve: right-hand side length must equal the row count");
    // Augmented rows: bit n carries the right-hand side.  n <= 63, so bit n fits.
    std::vector<uint64_t> rows(a.rows);
    for (int i = 0; i < m; ++i)
        if ((b.bits >> i) & 1u) rows[static_cast<size_t>(i)] |= uint64_t{1} << n;

    std::vector<int> pivot_col;  // pivot column of each eliminated row
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int pivot = -1;
        for (int i = r; i < m; ++i)
            if ((rows[static_cast<size_t>(i)] >> c) & 1u) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
        for (int i = 0; i < m; ++i)
            if (i != r && ((rows[static_cast<size_t>(i)] >> c) & 1u)) rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(r)];
        pivot_col.push_back(c);
        ++r;
    }
    const uint64_t rhs_bit = uint64_t{1} << n;
    for (int i = r; i < m; ++i)
        if (rows[static_cast<size_t>(i)] & rhs_bit) return std::nullopt;  // 0 = 1

    uint64_t x = 0;
    for (int i = 0; i < r; ++i)
        if (rows[static_cast<size_t>(i)] & rhs_bit) x |= uint64_t{1} << pivot_col[static_cast<size_t>(i)];

    LinearSolution sol{Word(n == 0 ? 0 : x, std::max(1, n)), {}};
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        uint64_t v = uint64_t{1} << f;
        for (int i = 0; i < r; ++i)
            if ((rows[static_cast<size_t>(i)] >> f) & 1u) v |= uint64_t{1} << pivot_col[static_cast<size_t>(i)];
        sol.nullspace_basis.push_back(Word(v, n));
    }
    return sol;
}

}  // namespace coinf
