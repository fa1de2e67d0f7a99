/**
 * @file hypercube.hpp
 * @brief Exhaustive-hypercube machinery for a code: the unrecoverable sets
 *        Omega_i, their boundaries, the influence supports B_j, Bernoulli
 *        measures, and influence of generic monotone indicators.
 *
 * Everything here walks all 2^n table positions, so lengths are capped:
 * kDefaultBruteForceCap unless a caller explicitly raises the cap to
 * kHardBruteForceCap (32 MiB per indicator; an all-coordinates run keeps
 * n + 1 indicators live).
 */
#pragma once

#include <utility>

#include "coinf/code.hpp"
#include "coinf/indicator.hpp"
#include "coinf/parallel.hpp"
#include "coinf/polynomial.hpp"

namespace coinf {

inline constexpr int kDefaultBruteForceCap = 26;
inline constexpr int kHardBruteForceCap = 28;

namespace detail {
inline void check_cap(int n, int cap, const char* what) {
    if (cap < 1 || cap > kHardBruteForceCap)
        throw std::invalid_argument(std::string(what) + ": cap " + std::to_string(cap) +
                                    " outside [1, " + std::to_string(kHardBruteForceCap) + "]");
    if (n > cap)
        throw std::length_error(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the brute-force cap " + std::to_string(cap));
}
}  // namespace detail

/// The codewords whose coordinate i is nonzero; empty or half the code.
inline std::vector<Word> support_codewords(const BinaryCode& code, int i) {
    if (i < 0 || i >= code.n()) throw std::out_of_range("support_codewords: coordinate out of range");
    std::vector<Word> out;
    for_each_codeword(code, [&](const Word& c) {
        if (c.get(i)) out.push_back(c);
    });
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.bits < b.bits; });
    return out;
}

/**
 * Omega_i: every word covering some codeword with coordinate i in its
 * support — exactly the erasure patterns from which coordinate i cannot be
 * recovered.  Seeds the table with S_i and runs the upward closure.
 */
inline IndicatorMap omega(const BinaryCode& code, int i, int cap = kDefaultBruteForceCap) {
    detail::check_cap(code.n(), cap, "omega");
    if (i < 0 || i >= code.n()) throw std::out_of_range("omega: coordinate out of range");
    IndicatorMap map(code.n());
    for_each_codeword(code, [&](const Word& c) {
        if (c.get(i)) map.set(c.bits);
    });
    map.upward_close();
    return map;
}

/**
 * Same set as omega, straight from the definition: scan every word of
 * GF(2)^n against every codeword of S_i.  Kept free of the closure-transform
 * code on purpose; this is the oracle the fast path is checked against.
 */
inline IndicatorMap naive_omega(const BinaryCode& code, int i, int n_cap = 16, int k_cap = 12) {
    if (code.n() > n_cap || code.k() > k_cap)
        throw std::length_error("naive_omega: limits n <= " + std::to_string(n_cap) + ", k <= " +
                                std::to_string(k_cap) + " exceeded");
    if (i < 0 || i >= code.n()) throw std::out_of_range("naive_omega: coordinate out of range");
    // Collect S_i by plain message multiplication, no Gray-code walking.
    std::vector<uint64_t> s_i;
    const auto& basis = code.basis();
    const uint64_t messages = uint64_t{1} << code.k();
    for (uint64_t msg = 0; msg < messages; ++msg) {
        uint64_t cw = 0;
        for (int row = 0; row < code.k(); ++row)
            if ((msg >> row) & 1u) cw ^= basis.rows[static_cast<size_t>(row)];
        if ((cw >> i) & 1u) s_i.push_back(cw);
    }
    IndicatorMap map(code.n());
    const uint64_t universe = uint64_t{1} << code.n();
    for (uint64_t x = 0; x < universe; ++x)
        for (uint64_t cw : s_i)
            if ((x & cw) == cw) {
                map.set(x);
                break;
            }
    return map;
}

/// Words whose membership in `om` toggles when coordinate j flips.
inline IndicatorMap boundary(const IndicatorMap& om, int j) { return om.boundary(j); }

/**
 * B_j: the union over i != j of the j-boundaries of Omega_i — the support
 * of coordinate j's influence.  Peak memory three tables.
 */
inline IndicatorMap b_set(const BinaryCode& code, int j, int cap = kDefaultBruteForceCap) {
    detail::check_cap(code.n(), cap, "b_set");
    if (j < 0 || j >= code.n()) throw std::out_of_range("b_set: coordinate out of range");
    IndicatorMap acc(code.n());
    for (int i = 0; i < code.n(); ++i) {
        if (i == j) continue;
        const IndicatorMap om = omega(code, i, cap);
        om.accumulate_boundary(j, acc);
    }
    return acc;
}

/**
 * All of B_0..B_{n-1} in one sweep: each Omega_i is computed once and folded
 * into every accumulator, then discarded.  Peak memory n + 1 tables.
 * `threads` splits the fold across coordinates j; the accumulators are
 * disjoint, so the result does not depend on the thread count.
 */
inline std::vector<IndicatorMap> all_b_sets(const BinaryCode& code, int cap = kDefaultBruteForceCap,
                                            int threads = 1) {
    detail::check_cap(code.n(), cap, "all_b_sets");
    const int n = code.n();
    std::vector<IndicatorMap> acc(static_cast<size_t>(n), IndicatorMap(n));
    for (int i = 0; i < n; ++i) {
        const IndicatorMap om = omega(code, i, cap);
        detail::parallel_for(static_cast<size_t>(n), threads, [&](size_t begin, size_t end) {
            for (size_t j = begin; j < end; ++j) {
                if (static_cast<int>(j) == i) continue;
                om.accumulate_boundary(static_cast<int>(j), acc[j]);
            }
        });
    }
    return acc;
}

/// Exact Bernoulli-p measure of the indicated set, 0 < p < 1.
inline mpq_class mu_p(const IndicatorMap& m, const mpq_class& p) {
    return measure_from_profile(weight_profile(m), p);
}

/**
 * Influence of coordinate j on the monotone indicator f: the Bernoulli mass
 * of the toggling set, with exponent wt(x) (not the wt(x)-1 normalization
 * used for codes).  Rejects non-monotone tables.
 */
inline InfluencePoly monotone_influence(const IndicatorMap& f, int j) {
    if (!f.is_upward_closed())
        throw std::invalid_argument("monotone_influence: indicator is not upward closed");
    return InfluencePoly::from_profile(weight_profile(f.boundary(j)), 0);
}

}  // namespace coinf
