/**
 * @file influence.hpp
 * @brief Influence of a coordinate on erasure recovery, exactly.
 *
 * The influence of coordinate j is the polynomial
 *
 *     I_j(p) = sum over x in B_j of p^{wt(x)-1} (1-p)^{n-wt(x)},
 *
 * well defined because the zero word never lies in B_j.  Everything is exact:
 * integer coefficients in the monomial basis, rational evaluation.  The
 * closed forms below cover simple parity-check codes and every code with
 * minimum disjoint support, and are verified against the brute-force route
 * in the test and verify suites.
 */
#pragma once

#include <cmath>

#include "coinf/structure.hpp"

namespace coinf {

/// Brute-force influence of coordinate j, from the weight profile of B_j.
inline InfluencePoly influence(const BinaryCode& code, int j, int cap = kDefaultBruteForceCap) {
    const WeightProfile profile = weight_profile(b_set(code, j, cap));
    if (profile.counts[0] != 0)
        throw std::logic_error("influence: zero word appeared in B_j");  // impossible by construction
    return InfluencePoly::from_profile(profile, -1);
}

/// Influences of all coordinates in one n+1-table sweep.
inline std::vector<InfluencePoly> all_influences(const BinaryCode& code, int cap = kDefaultBruteForceCap,
                                                 int threads = 1) {
    const std::vector<IndicatorMap> b = all_b_sets(code, cap, threads);
    std::vector<InfluencePoly> out(static_cast<size_t>(code.n()));
    detail::parallel_for(b.size(), threads, [&](size_t begin, size_t end) {
        for (size_t j = begin; j < end; ++j) out[j] = InfluencePoly::from_profile(weight_profile(b[j]), -1);
    });
    return out;
}

/// Sum of all per-coordinate influences.
inline InfluencePoly total_influence(const BinaryCode& code, int cap = kDefaultBruteForceCap, int threads = 1) {
    InfluencePoly total;
    for (const InfluencePoly& poly : all_influences(code, cap, threads)) total += poly;
    return total;
}

/// (n-1)(1-p)^{n-2}: every coordinate of the [n, n-1, 2] parity-check code.
inline InfluencePoly closed_form_parity_check(int n) {
    if (n < 2) throw std::invalid_argument("closed_form_parity_check: need n >= 2");
    return InfluencePoly::one_minus_p_power(n - 1, n - 2);
}

/// n(n-1)(1-p)^{n-2}: total influence of the parity-check code.
inline InfluencePoly closed_form_total_parity_check(int n) {
    if (n < 2) throw std::invalid_argument("closed_form_total_parity_check: need n >= 2");
    return InfluencePoly::one_minus_p_power(static_cast<long>(n) * (n - 1), n - 2);
}

/**
 * p^{|T|-2} where T is the part containing j.  Requires |T| >= 2: a
 * singleton part has empty boundaries and influence 0, outside this form.
 */
inline InfluencePoly closed_form_mds(const MdsStructure& st, int j) {
    if (j < 0 || j >= static_cast<int>(st.part_index.size()))
        throw std::out_of_range("closed_form_mds: coordinate out of range");
    const int size = st.part_size_of(j);
    if (size < 2)
        throw std::invalid_argument("closed_form_mds: closed form requires part size >= 2; use brute force");
    return InfluencePoly::monomial(1, size - 2);
}

/// sum over parts of |T| p^{|T|-2}; requires every part size >= 2.
inline InfluencePoly closed_form_total_mds(const MdsStructure& st) {
    InfluencePoly total;
    for (const auto& part : st.parts) {
        const int size = static_cast<int>(part.size());
        if (size < 2)
            throw std::invalid_argument("closed_form_total_mds: closed form requires part sizes >= 2; use brute force");
        total += InfluencePoly::monomial(size, size - 2);
    }
    return total;
}

/**
 * The bridge between code influence and monotone-function influence:
 * whether p * I_j(C) equals the sum over i != j of the influences of j on
 * the indicators of Omega_i.  The identity requires the boundaries
 * d_j Omega_i to tile B_j, so the report also records whether they are
 * pairwise distinct and pairwise disjoint.
 */
struct SumRelationReport {
    bool boundaries_pairwise_distinct = true;
    bool boundaries_pairwise_disjoint = true;
    bool identity_holds = false;
    InfluencePoly lhs;  ///< p * I_j(C)
    InfluencePoly rhs;  ///< sum of monotone influences
};

inline SumRelationReport sum_relation_check(const BinaryCode& code, int j, int cap = kDefaultBruteForceCap) {
    detail::check_cap(code.n(), cap, "sum_relation_check");
    if (j < 0 || j >= code.n()) throw std::out_of_range("sum_relation_check: coordinate out of range");
    SumRelationReport report;
    std::vector<IndicatorMap> boundaries;
    InfluencePoly rhs;
    for (int i = 0; i < code.n(); ++i) {
        if (i == j) continue;
        const IndicatorMap om = omega(code, i, cap);
        IndicatorMap bd = om.boundary(j);
        rhs += InfluencePoly::from_profile(weight_profile(bd), 0);
        boundaries.push_back(std::move(bd));
    }
    for (size_t a = 0; a < boundaries.size(); ++a)
        for (size_t b = a + 1; b < boundaries.size(); ++b) {
            if (boundaries[a] == boundaries[b]) report.boundaries_pairwise_distinct = false;
            if (boundaries[a].intersects(boundaries[b])) report.boundaries_pairwise_disjoint = false;
        }
    report.lhs = influence(code, j, cap).times_p();
    report.rhs = rhs;
    report.identity_holds = (report.lhs == report.rhs);
    return report;
}

/**
 * Checks the containment chain and the influence lower bound available when
 * S_i = S_j for distinct coordinates: S_j and its e_j-translate sit inside
 * Omega_j and its translate, which sit inside B_j, and the sum over S_j of
 * p^{wt-1}(1-p)^{n-wt} bounds I_j from below.
 */
struct SiEqualReport {
    bool s_union_inside_omega_union = false;
    bool omega_union_inside_b = false;
    bool lower_bound_holds_on_grid = false;  ///< at p = 1/10 .. 9/10
};

inline SiEqualReport si_equal_lower_bound_check(const BinaryCode& code, int i, int j,
                                                int cap = kDefaultBruteForceCap) {
    detail::check_cap(code.n(), cap, "si_equal_lower_bound_check");
    if (i == j) throw std::invalid_argument("si_equal_lower_bound_check: coordinates must differ");
    if (support_codewords(code, i) != support_codewords(code, j))
        throw std::invalid_argument("si_equal_lower_bound_check: S_i != S_j, hypothesis not met");

    const int n = code.n();
    IndicatorMap s_union(n);
    for (const Word& c : support_codewords(code, j)) s_union.set(c.bits);
    WeightProfile s_profile = weight_profile(s_union);
    s_union |= s_union.flip(j);

    IndicatorMap omega_union = omega(code, j, cap);
    omega_union |= omega_union.flip(j);

    const IndicatorMap b = b_set(code, j, cap);

    SiEqualReport report;
    report.s_union_inside_omega_union = s_union.subset_of(omega_union);
    report.omega_union_inside_b = omega_union.subset_of(b);

    const InfluencePoly bound = InfluencePoly::from_profile(s_profile, -1);
    const InfluencePoly gap = influence(code, j, cap) - bound;
    report.lower_bound_holds_on_grid = true;
    for (int t = 1; t <= 9; ++t)
        if (gap.evaluate(make_rational(t, 10)) < 0) report.lower_bound_holds_on_grid = false;
    return report;
}

/**
 * Transition-width bound 2 mu (1 - mu) / I * ln((1-eps)/eps).  Diagnostic
 * only: the logarithm makes this the one non-exact value in the module.
 */
inline double exit_bound(const mpq_class& mu, const mpq_class& total_influence_value, const mpq_class& eps) {
    if (mu < 0 || mu > 1) throw std::domain_error("exit_bound: mu must be in [0, 1]");
    if (eps <= 0 || eps >= make_rational(1, 2)) throw std::domain_error("exit_bound: eps must be in (0, 1/2)");
    if (total_influence_value <= 0) throw std::domain_error("exit_bound: vacuous bound, total influence is 0");
    const mpq_class factor = 2 * mu * (1 - mu) / total_influence_value;
    const mpq_class ratio = (1 - eps) / eps;
    return factor.get_d() * std::log(ratio.get_d());
}

}  // namespace coinf
