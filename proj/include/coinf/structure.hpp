/**
 * @file structure.hpp
 * @brief Minimum support codewords u_i and detection of the
 *        minimum-disjoint-support property.
 *
 * A code has minimum disjoint support when every S_i has a covering-order
 * minimum u_i and the distinct supports T_i = supp(u_i) partition the
 * coordinates.  The partition is what makes every influence of the code
 * expressible in closed form.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coinf/hypercube.hpp"

namespace coinf {

struct MdsStructure {
    std::vector<Word> u;                  ///< u[i] = minimum of S_i
    std::vector<std::vector<int>> parts;  ///< distinct supports, by first occurrence
    std::vector<int> part_index;          ///< part containing each coordinate
    int s = 0;                            ///< number of parts

    int part_size_of(int j) const { return static_cast<int>(parts[static_cast<size_t>(part_index[static_cast<size_t>(j)])].size()); }
};

struct MdsDetection {
    enum class Failure { none, dead_coordinate, no_minimum, not_partition };

    std::optional<MdsStructure> structure;
    Failure failure = Failure::none;
    int coordinate = -1;  ///< coordinate at which the failing clause was found

    bool is_mds() const { return structure.has_value(); }

    std::string reason() const {
        switch (failure) {
            case Failure::dead_coordinate: return "dead coordinate " + std::to_string(coordinate);
            case Failure::no_minimum: return "no minimum at coordinate " + std::to_string(coordinate);
            case Failure::not_partition: return "supports do not partition at coordinate " + std::to_string(coordinate);
            default: return "";
        }
    }
};

/**
 * The covering-order minimum of S_i, if S_i has one.  A minimum must be a
 * minimum-weight member, so one candidate check against all of S_i decides.
 * Returns nullopt for an empty S_i (dead coordinate) or an S_i with no
 * minimum.
 */
inline std::optional<Word> minimum_support_codeword(const BinaryCode& code, int i) {
    const std::vector<Word> s_i = support_codewords(code, i);
    if (s_i.empty()) return std::nullopt;
    const Word* candidate = &s_i.front();
    for (const Word& c : s_i)
        if (weight(c) < weight(*candidate)) candidate = &c;
    for (const Word& c : s_i)
        if (!covers(c, *candidate)) return std::nullopt;
    return *candidate;
}

/// Pairwise clause of the structure: any two u are equal or disjoint.
inline bool verify_disjointness(const MdsStructure& st) {
    for (size_t i = 0; i < st.u.size(); ++i)
        for (size_t j = i + 1; j < st.u.size(); ++j)
            if (st.u[i] != st.u[j] && (st.u[i].bits & st.u[j].bits) != 0) return false;
    return true;
}

/// Decide minimum disjoint support; absence carries the failing clause.
inline MdsDetection detect_mds(const BinaryCode& code) {
    MdsDetection out;
    const int n = code.n();
    MdsStructure st;
    st.u.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::vector<Word> s_i = support_codewords(code, i);
        if (s_i.empty()) {
            out.failure = MdsDetection::Failure::dead_coordinate;
            out.coordinate = i;
            return out;
        }
        const Word* candidate = &s_i.front();
        for (const Word& c : s_i)
            if (weight(c) < weight(*candidate)) candidate = &c;
        bool minimum = true;
        for (const Word& c : s_i)
            if (!covers(c, *candidate)) {
                minimum = false;
                break;
            }
        if (!minimum) {
            out.failure = MdsDetection::Failure::no_minimum;
            out.coordinate = i;
            return out;
        }
        st.u.push_back(*candidate);
    }
    // Distinct supports must tile the coordinate set.
    st.part_index.assign(static_cast<size_t>(n), -1);
    uint64_t covered = 0;
    for (int i = 0; i < n; ++i) {
        const uint64_t supp = st.u[static_cast<size_t>(i)].bits;
        if (st.part_index[static_cast<size_t>(i)] >= 0) continue;  // already placed by an earlier equal u
        if (covered & supp) {
            out.failure = MdsDetection::Failure::not_partition;
            out.coordinate = i;
            return out;
        }
        const int part = st.s++;
        std::vector<int> indices = support(st.u[static_cast<size_t>(i)]);
        for (int j : indices) {
            // Coordinates inside the support must agree on their minimum,
            // or the supports overlap without being equal.
            if (st.u[static_cast<size_t>(j)] != st.u[static_cast<size_t>(i)]) {
                out.failure = MdsDetection::Failure::not_partition;
                out.coordinate = j;
                return out;
            }
            st.part_index[static_cast<size_t>(j)] = part;
        }
        st.parts.push_back(std::move(indices));
        covered |= supp;
    }
    const uint64_t full = (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    if (covered != full) {
        // Unreachable when every u_i exists (i lies in supp(u_i)); kept as a
        // guard on the partition clause.
        out.failure = MdsDetection::Failure::not_partition;
        out.coordinate = std::countr_one(covered);
        return out;
    }
    out.structure = std::move(st);
    return out;
}

namespace detail {

/// The coordinate partition a family tag determines a priori, or nullopt.
inline std::optional<std::vector<std::vector<int>>> family_parts(const Family& family) {
    std::vector<std::vector<int>> parts;
    switch (family.kind) {
        case Family::Kind::repetition: {
            for (int b = 0; b < family.k; ++b) {
                std::vector<int> part(static_cast<size_t>(family.r));
                for (int t = 0; t < family.r; ++t) part[static_cast<size_t>(t)] = b * family.r + t;
                parts.push_back(std::move(part));
            }
            return parts;
        }
        case Family::Kind::distinct_weight: {
            int offset = 0;
            for (int b = 0; b < family.k; ++b) {
                const int width = 1 << (family.r + b);
                std::vector<int> part(static_cast<size_t>(width));
                for (int t = 0; t < width; ++t) part[static_cast<size_t>(t)] = offset + t;
                parts.push_back(std::move(part));
                offset += width;
            }
            return parts;
        }
        case Family::Kind::hybrid:
            return family.parts;
        case Family::Kind::product: {
            if (!family.left || !family.right) return std::nullopt;
            const auto left = family_parts(*family.left);
            const auto right = family_parts(*family.right);
            if (!left || !right) return std::nullopt;
            int n2 = 0;
            for (const auto& part : *right) n2 += static_cast<int>(part.size());
            for (const auto& lp : *left)
                for (const auto& rp : *right) {
                    std::vector<int> part;
                    part.reserve(lp.size() * rp.size());
                    for (int a : lp)
                        for (int b : rp) part.push_back(a * n2 + b);
                    std::sort(part.begin(), part.end());
                    parts.push_back(std::move(part));
                }
            return parts;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace detail

/**
 * The minimum-disjoint-support structure known from a family tag, without
 * codeword enumeration: block structure for repetition / distinct-weight /
 * hybrid codes, crossed parts for products of such.  Nullopt for families
 * with no a-priori structure or tags inconsistent with the length n.
 */
inline std::optional<MdsStructure> structure_from_family(const Family& family, int n) {
    auto maybe_parts = detail::family_parts(family);
    if (!maybe_parts) return std::nullopt;
    auto& parts = *maybe_parts;
    for (const auto& part : parts)
        if (part.empty()) return std::nullopt;
    // Canonical order, as detection produces it: sorted parts, by first element.
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    MdsStructure st;
    st.s = static_cast<int>(parts.size());
    st.part_index.assign(static_cast<size_t>(n), -1);
    st.u.assign(static_cast<size_t>(n), zero_word(std::max(1, n)));
    for (int p = 0; p < st.s; ++p) {
        uint64_t bits = 0;
        for (int j : parts[static_cast<size_t>(p)]) {
            if (j < 0 || j >= n) return std::nullopt;
            bits |= uint64_t{1} << j;
        }
        for (int j : parts[static_cast<size_t>(p)]) {
            st.part_index[static_cast<size_t>(j)] = p;
            st.u[static_cast<size_t>(j)] = Word(bits, n);
        }
    }
    for (int j = 0; j < n; ++j)
        if (st.part_index[static_cast<size_t>(j)] < 0) return std::nullopt;
    st.parts = parts;
    return st;
}

}  // namespace coinf
