/**
 * @file recovery.hpp
 * @brief Erasure-recovery semantics: recoverability oracles, an exact
 *        erasure decoder, and a seeded Monte Carlo estimator for the
 *        probability that a coordinate cannot be recovered.
 *
 * The primary recoverability oracle is linear-algebraic and runs in
 * polynomial time for any dimension; the enumerative definition and the
 * hypercube route (e in Omega_i) exist as independent cross-checks in the
 * test suites.
 */
#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "coinf/code.hpp"
#include "coinf/matrix.hpp"
#include "coinf/parallel.hpp"
#include "coinf/polynomial.hpp"

namespace coinf {

/// A length-n received word over {0, 1, erased}.
struct ReceivedWord {
    int n = 0;
    uint64_t values = 0;  ///< known symbol values; zero at erased positions
    uint64_t erased = 0;  ///< bit i set iff symbol i was erased

    static ReceivedWord parse(const std::string& s) {
        ReceivedWord w;
        w.n = static_cast<int>(s.size());
        if (w.n < 1 || w.n > kMaxWordLength)
            throw std::invalid_argument("ReceivedWord: length must be in [1, 63]");
        for (int i = 0; i < w.n; ++i) {
            switch (s[static_cast<size_t>(i)]) {
                case '0': break;
                case '1': w.values |= uint64_t{1} << i; break;
                case '*': w.erased |= uint64_t{1} << i; break;
                default:
                    throw std::invalid_argument("ReceivedWord: expected symbols 0, 1, *");
            }
        }
        return w;
    }

    std::string str() const {
        std::string s(static_cast<size_t>(n), '0');
        for (int i = 0; i < n; ++i) {
            if ((erased >> i) & 1u)
                s[static_cast<size_t>(i)] = '*';
            else if ((values >> i) & 1u)
                s[static_cast<size_t>(i)] = '1';
        }
        return s;
    }

    Word erasure_pattern() const { return Word(erased, n); }
};

struct RecoveryOutcome {
    enum class Kind { decoded, ambiguous, inconsistent };

    Kind kind = Kind::inconsistent;
    std::optional<Word> codeword;                   ///< decoded: the unique consistent codeword
    std::optional<std::pair<Word, Word>> witnesses; ///< ambiguous: two distinct consistent codewords
    uint64_t consistent_count = 0;
    int ambiguity_dim = 0;  ///< log2 of consistent_count
};

namespace detail {

/// Rows are the generator columns selected by `col_mask`, one constraint per
/// selected coordinate, in increasing coordinate order.
inline GF2Matrix constraint_matrix(const GF2Matrix& basis, uint64_t col_mask) {
    std::vector<uint64_t> rows;
    rows.reserve(static_cast<size_t>(std::popcount(col_mask)));
    for (uint64_t m = col_mask; m != 0; m &= m - 1) {
        const int col = std::countr_zero(m);
        uint64_t row = 0;
        for (int i = 0; i < basis.row_count(); ++i)
            if ((basis.rows[static_cast<size_t>(i)] >> col) & 1u) row |= uint64_t{1} << i;
        rows.push_back(row);
    }
    return GF2Matrix(std::move(rows), basis.row_count());
}

}  // namespace detail

/**
 * true iff no nonzero codeword is covered by the erasure pattern e, i.e.
 * the whole codeword is always recoverable under e.  Rank-based: the code
 * restricted to the non-erased coordinates must keep full dimension.
 */
inline bool pattern_recoverable(const BinaryCode& code, const Word& e) {
    if (e.n != code.n()) throw std::invalid_argument("pattern_recoverable: length mismatch");
    const uint64_t keep = ~e.bits & ones_word(code.n()).bits;
    std::vector<uint64_t> rows(code.basis().rows);
    for (auto& row : rows) row &= keep;
    return rank(GF2Matrix(std::move(rows), code.n())) == code.k();
}

/**
 * true iff coordinate i can be recovered under erasure pattern e: no
 * codeword of S_i is covered by e; equivalently e lies outside Omega_i.
 * Implemented by infeasibility of the linear system that asks for a
 * codeword vanishing outside supp(e) with coordinate i set.
 */
inline bool coordinate_recoverable(const BinaryCode& code, const Word& e, int i) {
    if (e.n != code.n()) throw std::invalid_argument("coordinate_recoverable: length mismatch");
    if (i < 0 || i >= code.n()) throw std::out_of_range("coordinate_recoverable: coordinate out of range");
    if (!e.get(i)) return true;  // members of Omega_i all have coordinate i erased
    if (code.k() == 0) return true;
    // Constraints: (mG)_t = 0 for t outside supp(e), and (mG)_i = 1.
    const uint64_t zero_mask = ~e.bits & ones_word(code.n()).bits;
    const uint64_t mask = zero_mask | (uint64_t{1} << i);
    GF2Matrix a = detail::constraint_matrix(code.basis(), mask);
    // Constraint rows follow increasing coordinate order.
    const int row_of_i = std::popcount(mask & ((uint64_t{1} << i) - 1));
    const uint64_t rhs = uint64_t{1} << row_of_i;
    return !solve(a, Word(rhs, std::max(1, a.row_count()))).has_value();
}

/// Enumerative form of the same predicate; test-suite oracle.
inline bool coordinate_recoverable_enumerative(const BinaryCode& code, const Word& e, int i) {
    if (e.n != code.n()) throw std::invalid_argument("coordinate_recoverable_enumerative: length mismatch");
    bool recoverable = true;
    for_each_codeword(code, [&](const Word& c) {
        if (c.get(i) && covers(e, c)) recoverable = false;
    });
    return recoverable;
}

/**
 * Maximum-likelihood erasure decoding: the affine system over messages that
 * matches every non-erased symbol.  Exactly one consistent codeword decodes;
 * two or more yield an ambiguous outcome with a witness pair whose
 * difference is a nonzero codeword covered by the pattern; none is
 * inconsistent (the received word did not come from this code).
 */
inline RecoveryOutcome decode_erasures(const BinaryCode& code, const ReceivedWord& w) {
    if (w.n != code.n()) throw std::invalid_argument("decode_erasures: length mismatch");
    RecoveryOutcome out;
    const uint64_t known = ~w.erased & ones_word(code.n()).bits;
    const GF2Matrix a = detail::constraint_matrix(code.basis(), known);
    uint64_t rhs = 0;
    {
        int row = 0;
        for (uint64_t m = known; m != 0; m &= m - 1, ++row)
            if ((w.values >> std::countr_zero(m)) & 1u) rhs |= uint64_t{1} << row;
    }
    const auto solution = solve(a, Word(rhs, std::max(1, a.row_count())));
    if (!solution) {
        out.kind = RecoveryOutcome::Kind::inconsistent;
        return out;
    }
    auto encode = [&](const Word& message) {
        uint64_t c = 0;
        for (int row = 0; row < code.k(); ++row)
            if ((message.bits >> row) & 1u) c ^= code.basis().rows[static_cast<size_t>(row)];
        return Word(c, code.n());
    };
    const int nullity = static_cast<int>(solution->nullspace_basis.size());
    out.ambiguity_dim = nullity;
    out.consistent_count = uint64_t{1} << nullity;
    if (nullity == 0) {
        out.kind = RecoveryOutcome::Kind::decoded;
        out.codeword = encode(solution->particular);
    } else {
        out.kind = RecoveryOutcome::Kind::ambiguous;
        const Word first = encode(solution->particular);
        const Word second = encode(solution->particular ^ solution->nullspace_basis.front());
        out.witnesses = std::make_pair(first, second);
    }
    return out;
}

/// splitmix64: the documented generator behind every sampled trial.
namespace detail {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform value in [0, bound) by rejection; exact, no modulo bias.
inline uint64_t uniform_below(uint64_t& state, uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const uint64_t r = splitmix64(state);
        const unsigned __int128 product = static_cast<unsigned __int128>(r) * bound;
        if (static_cast<uint64_t>(product) >= threshold) return static_cast<uint64_t>(product >> 64);
    }
}

}  // namespace detail

struct McEstimate {
    uint64_t trials = 0;
    uint64_t unrecoverable = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    std::string algorithm = "splitmix64";
};

/**
 * Estimate the probability that coordinate i is unrecoverable under i.i.d.
 * Bernoulli-p erasures, i.e. mu_p(Omega_i), by seeded sampling.  Trial t
 * draws from a splitmix64 stream keyed by (seed, t), so a fixed (seed,
 * trials) pair reproduces exactly, independent of the thread count.
 */
inline McEstimate mc_unrecoverable_prob(const BinaryCode& code, int i, const mpq_class& p, uint64_t trials,
                                        uint64_t seed, int threads = 1) {
    if (trials < 1) throw std::invalid_argument("mc_unrecoverable_prob: need at least one trial");
    if (p <= 0 || p >= 1) throw std::domain_error("mc_unrecoverable_prob: p must be in (0, 1)");
    if (i < 0 || i >= code.n()) throw std::out_of_range("mc_unrecoverable_prob: coordinate out of range");
    if (!p.get_num().fits_ulong_p() || !p.get_den().fits_ulong_p())
        throw std::invalid_argument("mc_unrecoverable_prob: p numerator/denominator too large");
    const uint64_t num = p.get_num().get_ui();
    const uint64_t den = p.get_den().get_ui();

    const int n = code.n();
    std::atomic<uint64_t> unrecoverable{0};
    coinf::detail::parallel_for(trials, threads, [&](size_t begin, size_t end) {
        uint64_t local = 0;
        for (size_t t = begin; t < end; ++t) {
            // Stream keyed by (seed, trial index).
            uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (static_cast<uint64_t>(t) + 1));
            uint64_t pattern = 0;
            for (int c = 0; c < n; ++c)
                if (coinf::detail::uniform_below(state, den) < num) pattern |= uint64_t{1} << c;
            if (!coordinate_recoverable(code, Word(pattern, n), i)) ++local;
        }
        unrecoverable.fetch_add(local, std::memory_order_relaxed);
    });
    McEstimate out;
    out.trials = trials;
    out.unrecoverable = unrecoverable.load();
    out.estimate = static_cast<double>(out.unrecoverable) / static_cast<double>(trials);
    out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    return out;
}

}  // namespace coinf
