/**
 * @file report.hpp
 * @brief The full analysis pipeline behind the CLI: construct, detect
 *        structure, brute-force influences, attach closed forms, compare.
 *
 * Reports are canonical JSON: object keys sorted (the library default),
 * big integers and rationals as decimal strings, so re-parsing and
 * re-emitting a report is byte-identical.
 */
#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coinf/influence.hpp"
#include "coinf/io.hpp"
#include "coinf/recovery.hpp"

namespace coinf {

struct AnalyzeOptions {
    int cap = kDefaultBruteForceCap;
    int threads = 1;
    std::vector<mpq_class> eval_grid;  ///< p values for exact evaluation columns
    bool retain_omegas = false;        ///< include per-coordinate omega summaries
};

struct Analysis {
    json report;
    bool closed_form_mismatch = false;
};

namespace detail {

inline json poly_to_json(const InfluencePoly& poly) {
    json coeffs = json::array();
    for (const auto& c : poly.coeff_strings()) coeffs.push_back(c);
    return coeffs;
}

inline json basis_to_json(const InfluencePoly& poly) {
    json out = json::array();
    for (const BasisTerm& term : poly.basis_form())
        out.push_back(json::array({term.count, term.p_exp, term.q_exp}));
    return out;
}

inline json profile_to_json(const WeightProfile& profile) {
    json out = json::array();
    for (uint64_t c : profile.counts) out.push_back(c);
    return out;
}

inline json eval_to_json(const InfluencePoly& poly, const std::vector<mpq_class>& grid) {
    json out = json::object();
    for (const mpq_class& p : grid) out[rational_str(p)] = rational_str(poly.evaluate(p));
    return out;
}

/// Closed-form string for reports: "p^4", "1", "9(1-p)^8".
inline std::string mds_form_str(int part_size) {
    const int e = part_size - 2;
    return e == 0 ? "1" : (e == 1 ? "p" : "p^" + std::to_string(e));
}

inline std::string parity_form_str(long scale, int e) {
    const std::string base = std::to_string(scale);
    if (e == 0) return base;
    return base + "(1-p)" + (e == 1 ? "" : "^" + std::to_string(e));
}

}  // namespace detail

/**
 * One coordinate's closed form, as determined by structure: the
 * minimum-disjoint-support monomial when available (part size >= 2), else
 * the parity-check family form.  Returns {string, polynomial} or nothing.
 */
inline std::optional<std::pair<std::string, InfluencePoly>> closed_form_for(
    const BinaryCode& code, const std::optional<MdsStructure>& st, int j) {
    if (st && st->part_size_of(j) >= 2)
        return std::make_pair(detail::mds_form_str(st->part_size_of(j)), closed_form_mds(*st, j));
    if (code.family().kind == Family::Kind::parity_check) {
        const int n = code.n();
        return std::make_pair(detail::parity_form_str(n - 1, n - 2), closed_form_parity_check(n));
    }
    return std::nullopt;
}

inline std::optional<std::pair<std::string, InfluencePoly>> closed_form_total_for(
    const BinaryCode& code, const std::optional<MdsStructure>& st) {
    if (st) {
        bool all_big = true;
        for (const auto& part : st->parts) all_big = all_big && part.size() >= 2;
        if (all_big) {
            // Aggregate equal part sizes: 5 parts of size 3 print as "15p".
            std::map<int, long> coeff_by_size;
            for (const auto& part : st->parts) coeff_by_size[static_cast<int>(part.size())] += static_cast<long>(part.size());
            std::string text;
            for (const auto& [size, coeff] : coeff_by_size) {
                if (!text.empty()) text += "+";
                text += std::to_string(coeff);
                if (size > 2) text += detail::mds_form_str(size);
            }
            return std::make_pair(text, closed_form_total_mds(*st));
        }
    }
    if (code.family().kind == Family::Kind::parity_check) {
        const int n = code.n();
        return std::make_pair(detail::parity_form_str(static_cast<long>(n) * (n - 1), n - 2),
                              closed_form_total_parity_check(n));
    }
    return std::nullopt;
}

/// Full pipeline: structure detection, brute force if n fits the cap,
/// closed forms, comparisons, notes.
inline Analysis analyze(const BinaryCode& code, const AnalyzeOptions& options = {}) {
    Analysis out;
    const int n = code.n();
    json& report = out.report;
    std::vector<std::string> notes;

    json code_meta{{"n", n}, {"k", code.k()}, {"family", family_to_json(code.family())}};
    if (code.k() >= 1 && code.k() <= kMaxEnumerableDim)
        code_meta["d"] = min_distance(code);
    else
        code_meta["d"] = nullptr;
    report["code"] = std::move(code_meta);

    // Structure: enumeration-based detection when the dimension allows it,
    // family knowledge otherwise.
    std::optional<MdsStructure> st;
    std::string mds_source;
    json mds_json;
    if (code.k() <= kMaxEnumerableDim) {
        MdsDetection det = detect_mds(code);
        mds_source = "detected";
        mds_json["is_mds"] = det.is_mds();
        mds_json["reason"] = det.is_mds() ? json(nullptr) : json(det.reason());
        if (det.is_mds()) st = std::move(det.structure);
    } else if (auto tagged = structure_from_family(code.family(), n)) {
        mds_source = "family";
        mds_json["is_mds"] = true;
        mds_json["reason"] = nullptr;
        st = std::move(tagged);
        notes.push_back("structure taken from the construction; dimension too large to verify by enumeration");
    } else {
        mds_source = "unknown";
        mds_json["is_mds"] = nullptr;
        mds_json["reason"] = "dimension too large to enumerate and no construction structure available";
    }
    json parts = json::array();
    json u = json::array();
    if (st) {
        for (const auto& part : st->parts) parts.push_back(part);
        for (const Word& w : st->u) u.push_back(w.str());
    }
    mds_json["parts"] = std::move(parts);
    mds_json["u"] = std::move(u);
    mds_json["source"] = mds_source;
    report["mds"] = std::move(mds_json);

    // Influences.
    const bool brute = n <= options.cap;
    json influence_json;
    influence_json["cap"] = options.cap;
    influence_json["computed"] = brute;
    std::vector<InfluencePoly> polys;
    std::vector<WeightProfile> profiles;
    if (brute) {
        const std::vector<IndicatorMap> b = all_b_sets(code, options.cap, options.threads);
        for (int j = 0; j < n; ++j) {
            profiles.push_back(weight_profile(b[static_cast<size_t>(j)]));
            polys.push_back(InfluencePoly::from_profile(profiles.back(), -1));
        }
    } else {
        notes.push_back("brute force skipped: n exceeds the cap " + std::to_string(options.cap));
    }

    json records = json::array();
    InfluencePoly total;
    for (int j = 0; j < n; ++j) {
        json record{{"j", j}};
        const auto closed = closed_form_for(code, st, j);
        record["closed_form"] = closed ? json(closed->first) : json(nullptr);
        if (brute) {
            const InfluencePoly& poly = polys[static_cast<size_t>(j)];
            total += poly;
            record["weight_profile"] = detail::profile_to_json(profiles[static_cast<size_t>(j)]);
            record["basis_form"] = detail::basis_to_json(poly);
            record["monomial_coeffs"] = detail::poly_to_json(poly);
            if (closed) {
                const bool matches = (closed->second == poly);
                record["matches_closed_form"] = matches;
                if (!matches) out.closed_form_mismatch = true;
            } else {
                record["matches_closed_form"] = nullptr;
            }
            if (!options.eval_grid.empty()) record["evaluations"] = detail::eval_to_json(poly, options.eval_grid);
        } else {
            record["matches_closed_form"] = nullptr;
        }
        records.push_back(std::move(record));
    }
    influence_json["per_coordinate"] = std::move(records);

    json total_json;
    const auto closed_total = closed_form_total_for(code, st);
    total_json["closed_form"] = closed_total ? json(closed_total->first) : json(nullptr);
    if (brute) {
        total_json["monomial_coeffs"] = detail::poly_to_json(total);
        if (closed_total) {
            const bool matches = (closed_total->second == total);
            total_json["matches_closed_form"] = matches;
            if (!matches) out.closed_form_mismatch = true;
        } else {
            total_json["matches_closed_form"] = nullptr;
        }
        if (!options.eval_grid.empty()) total_json["evaluations"] = detail::eval_to_json(total, options.eval_grid);
    } else {
        total_json["matches_closed_form"] = nullptr;
    }
    influence_json["total"] = std::move(total_json);
    report["influence"] = std::move(influence_json);

    if (options.retain_omegas && n <= options.cap) {
        json omegas = json::array();
        for (int i = 0; i < n; ++i) {
            const IndicatorMap om = omega(code, i, options.cap);
            omegas.push_back(json{{"i", i},
                                  {"population", om.population()},
                                  {"weight_profile", detail::profile_to_json(weight_profile(om))}});
        }
        report["omegas"] = std::move(omegas);
    }

    report["notes"] = notes;
    return out;
}

/// Lossy CSV projection of an analysis: per-coordinate and total influence
/// evaluated on a p grid, as doubles.
inline std::string analysis_csv(const BinaryCode& code, const AnalyzeOptions& options) {
    const int n = code.n();
    if (n > options.cap)
        throw std::length_error("csv output needs brute-force influences: n exceeds cap " +
                                std::to_string(options.cap));
    std::vector<mpq_class> grid = options.eval_grid;
    if (grid.empty())
        for (int t = 1; t <= 9; ++t) grid.push_back(make_rational(t, 10));
    const std::vector<InfluencePoly> polys = all_influences(code, options.cap, options.threads);
    InfluencePoly total;
    for (const auto& poly : polys) total += poly;

    std::string out = "p";
    for (int j = 0; j < n; ++j) out += ",I_" + std::to_string(j);
    out += ",total\n";
    char buffer[64];
    for (const mpq_class& p : grid) {
        out += rational_str(p);
        for (const auto& poly : polys) {
            std::snprintf(buffer, sizeof(buffer), "%.12g", poly.evaluate(p).get_d());
            out += ",";
            out += buffer;
        }
        std::snprintf(buffer, sizeof(buffer), "%.12g", total.evaluate(p).get_d());
        out += ",";
        out += buffer;
        out += "\n";
    }
    return out;
}

}  // namespace coinf
