/**
 * @file polynomial.hpp
 * @brief Exact univariate polynomials in p with arbitrary-precision integer
 *        coefficients, plus exact rational evaluation.
 *
 * The canonical form is the monomial basis: two polynomials are equal iff
 * their coefficient vectors are equal.  Polynomials arising from a weight
 * profile additionally carry their Bernstein-style origin, a list of terms
 * N_w * p^a * (1-p)^b, kept as provenance only and never compared.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "coinf/indicator.hpp"

namespace coinf {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// num/den as a canonical exact rational.
inline mpq_class make_rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "a/b", "0.375", or "2" into an exact rational.
inline mpq_class parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            const mpz_class den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            mpq_class q(mpz_class(s.substr(0, slash)), den);
            q.canonicalize();
            return q;
        }
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            mpz_class den = 1;
            for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            mpq_class q(mpz_class(digits), den);
            q.canonicalize();
            return q;
        }
        return mpq_class(mpz_class(s));
    } catch (const std::invalid_argument& error) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "' (" + error.what() + ")");
    }
}

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

/// One origin term: count * p^p_exp * (1-p)^q_exp.
struct BasisTerm {
    uint64_t count = 0;
    int p_exp = 0;
    int q_exp = 0;

    bool operator==(const BasisTerm&) const = default;
};

class InfluencePoly {
   public:
    InfluencePoly() = default;

    static InfluencePoly zero() { return InfluencePoly(); }

    /// c * p^e.
    static InfluencePoly monomial(const mpz_class& c, int e) {
        InfluencePoly poly;
        if (c != 0) {
            poly.coeffs_.assign(static_cast<size_t>(e) + 1, mpz_class(0));
            poly.coeffs_.back() = c;
        }
        return poly;
    }

    /// c * (1-p)^e expanded into the monomial basis.
    static InfluencePoly one_minus_p_power(const mpz_class& c, int e) {
        InfluencePoly poly;
        if (c == 0) return poly;
        poly.coeffs_.resize(static_cast<size_t>(e) + 1);
        for (int t = 0; t <= e; ++t) {
            mpz_class term = c * binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(t));
            if (t & 1) term = -term;
            poly.coeffs_[static_cast<size_t>(t)] = term;
        }
        return poly;
    }

    /**
     * Sum over a weight profile: sum_w N_w * p^{w+shift} * (1-p)^{n-w}.
     * shift = -1 gives the per-coordinate influence normalization (the
     * profile must then be empty at weight 0); shift = 0 gives the plain
     * Bernoulli mass of the counted set.
     */
    static InfluencePoly from_profile(const WeightProfile& profile, int shift) {
        InfluencePoly poly;
        const int n = profile.n;
        poly.coeffs_.assign(static_cast<size_t>(n + 1 + shift) + 1, mpz_class(0));
        for (int w = 0; w <= n; ++w) {
            const uint64_t count = profile.counts[static_cast<size_t>(w)];
            if (count == 0) continue;
            if (w + shift < 0)
                throw std::invalid_argument("InfluencePoly: profile has weight-" + std::to_string(w) +
                                            " members, exponent would be negative");
            poly.basis_.push_back(BasisTerm{count, w + shift, n - w});
            // N_w p^{w+shift} (1-p)^{n-w} expands over t = 0..n-w.
            const mpz_class big_count(static_cast<unsigned long>(count));
            for (int t = 0; t <= n - w; ++t) {
                mpz_class term =
                    big_count * binomial(static_cast<unsigned long>(n - w), static_cast<unsigned long>(t));
                if (t & 1) term = -term;
                poly.coeffs_[static_cast<size_t>(w + shift + t)] += term;
            }
        }
        poly.trim();
        return poly;
    }

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const std::vector<BasisTerm>& basis_form() const { return basis_; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero polynomial

    /// Canonical equality: coefficient vectors only; origin is provenance.
    bool operator==(const InfluencePoly& other) const { return coeffs_ == other.coeffs_; }

    InfluencePoly& operator+=(const InfluencePoly& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        for (const auto& term : other.basis_) basis_.push_back(term);
        trim();
        return *this;
    }

    InfluencePoly operator+(const InfluencePoly& other) const {
        InfluencePoly out = *this;
        out += other;
        return out;
    }

    InfluencePoly operator-(const InfluencePoly& other) const {
        InfluencePoly out = *this;
        if (other.coeffs_.size() > out.coeffs_.size()) out.coeffs_.resize(other.coeffs_.size());
        for (size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
        out.basis_.clear();
        out.trim();
        return out;
    }

    /// Multiply by p (shift every exponent up by one).
    InfluencePoly times_p() const {
        if (is_zero()) return InfluencePoly();
        InfluencePoly out;
        out.coeffs_.resize(coeffs_.size() + 1);
        for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i + 1] = coeffs_[i];
        return out;
    }

    /// Exact Horner evaluation; p must lie strictly between 0 and 1.
    mpq_class evaluate(const mpq_class& p) const {
        if (p <= 0 || p >= 1) throw std::domain_error("InfluencePoly::evaluate: p must be in (0, 1)");
        mpq_class acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) {
            acc *= p;
            acc += mpq_class(coeffs_[i]);
        }
        return acc;
    }

    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.get_str());
        return out;
    }

    /// Human-readable monomial form, e.g. "2p - 2p^3".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            const mpz_class& c = coeffs_[i];
            if (c == 0) continue;
            const bool negative = c < 0;
            mpz_class mag = abs(c);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const bool unit = (mag == 1) && i > 0;
            if (!unit) out += mag.get_str();
            if (i == 1)
                out += "p";
            else if (i > 1)
                out += "p^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<mpz_class> coeffs_;   ///< coeffs_[i] multiplies p^i
    std::vector<BasisTerm> basis_;    ///< origin terms, provenance only
};

/// Exact Bernoulli-p mass of a profiled set: sum_w N_w p^w (1-p)^{n-w}.
inline mpq_class measure_from_profile(const WeightProfile& profile, const mpq_class& p) {
    if (p <= 0 || p >= 1) throw std::domain_error("measure_from_profile: p must be in (0, 1)");
    const mpq_class q = 1 - p;
    mpq_class total(0);
    // Powers built incrementally: p^w and (1-p)^{n-w}.
    std::vector<mpq_class> p_pow(static_cast<size_t>(profile.n) + 1), q_pow(static_cast<size_t>(profile.n) + 1);
    p_pow[0] = 1;
    q_pow[0] = 1;
    for (int i = 1; i <= profile.n; ++i) {
        p_pow[static_cast<size_t>(i)] = p_pow[static_cast<size_t>(i - 1)] * p;
        q_pow[static_cast<size_t>(i)] = q_pow[static_cast<size_t>(i - 1)] * q;
    }
    for (int w = 0; w <= profile.n; ++w) {
        const uint64_t count = profile.counts[static_cast<size_t>(w)];
        if (count == 0) continue;
        mpz_class big_count = mpz_class(static_cast<unsigned long>(count));
        total += mpq_class(big_count) * p_pow[static_cast<size_t>(w)] * q_pow[static_cast<size_t>(profile.n - w)];
    }
    return total;
}

}  // namespace coinf
