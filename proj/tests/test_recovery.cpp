#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coinf/hypercube.hpp"
#include "coinf/recovery.hpp"

using namespace coinf;

namespace {

BinaryCode nine_column_code() {
    return from_matrix(GF2Matrix::from_strings({"100010101", "010010110", "001001100", "000111111"}, 9));
}

BinaryCode toy_code() { return from_matrix(GF2Matrix::from_strings({"11100", "00111"}, 5)); }

BinaryCode random_code(std::mt19937_64& rng, int max_n, int max_rows) {
    const int n = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_n - 1));
    const int rows = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_rows));
    std::vector<uint64_t> r(static_cast<size_t>(rows));
    for (auto& row : r) row = rng() & ((uint64_t{1} << n) - 1);
    return from_matrix(GF2Matrix(std::move(r), n));
}

}  // namespace

TEST_CASE("received word parsing") {
    const ReceivedWord w = ReceivedWord::parse("**1*001**");
    CHECK(w.n == 9);
    CHECK(w.erasure_pattern() == parse_word("110100011"));
    CHECK(w.str() == "**1*001**");
    CHECK_THROWS_AS(ReceivedWord::parse("01?"), std::invalid_argument);
    CHECK_THROWS_AS(ReceivedWord::parse(""), std::invalid_argument);
}

TEST_CASE("pattern recoverability on the motivating example") {
    const BinaryCode c = nine_column_code();
    // The pattern covers the codeword 110000011.
    CHECK_FALSE(pattern_recoverable(c, parse_word("110100011")));
    CHECK(pattern_recoverable(c, zero_word(9)));
    CHECK_FALSE(pattern_recoverable(c, ones_word(9)));
}

TEST_CASE("coordinate recoverability basics") {
    const BinaryCode c = toy_code();
    CHECK_FALSE(coordinate_recoverable(c, parse_word("11100"), 0));  // 11100 lies in Omega_0
    for (int i = 0; i < 5; ++i) CHECK(coordinate_recoverable(c, zero_word(5), i));

    // A single erasure is always recoverable for the parity-check code.
    const BinaryCode pc = parity_check_code(10);
    CHECK(coordinate_recoverable(pc, basis_word(1, 10), 1));
}

TEST_CASE("recoverability oracles agree exhaustively") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const BinaryCode c = random_code(rng, 10, 6);
        const int n = c.n();
        for (int i = 0; i < n; ++i) {
            const IndicatorMap om = omega(c, i);
            for (uint64_t e = 0; e < (uint64_t{1} << n); ++e) {
                const Word pattern(e, n);
                const bool linear = coordinate_recoverable(c, pattern, i);
                CHECK(linear == coordinate_recoverable_enumerative(c, pattern, i));
                CHECK(linear == !om.test(e));
            }
        }
    }
}

TEST_CASE("pattern recoverability is the conjunction over coordinates") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const BinaryCode c = random_code(rng, 9, 5);
        const int n = c.n();
        for (uint64_t e = 0; e < (uint64_t{1} << n); ++e) {
            const Word pattern(e, n);
            bool all = true;
            for (int i = 0; i < n; ++i) all = all && coordinate_recoverable(c, pattern, i);
            CHECK(pattern_recoverable(c, pattern) == all);
        }
    }
}

TEST_CASE("decoding the motivating received word is ambiguous") {
    const BinaryCode c = nine_column_code();
    const ReceivedWord w = ReceivedWord::parse("**1*001**");
    const RecoveryOutcome out = decode_erasures(c, w);
    REQUIRE(out.kind == RecoveryOutcome::Kind::ambiguous);
    REQUIRE(out.witnesses.has_value());
    const auto& [first, second] = *out.witnesses;
    CHECK(first != second);
    CHECK(c.contains(first));
    CHECK(c.contains(second));
    for (int i = 0; i < 9; ++i) {
        if ((w.erased >> i) & 1u) continue;
        CHECK(first.get(i) == ((w.values >> i) & 1u));
        CHECK(second.get(i) == ((w.values >> i) & 1u));
    }
    // The difference is a nonzero codeword covered by the pattern.
    const Word diff = first ^ second;
    CHECK(c.contains(diff));
    CHECK(covers(w.erasure_pattern(), diff));
    // The two plausible codewords of the example are both consistent.
    CHECK(c.contains(parse_word("101100110")));
    CHECK(c.contains(parse_word("011100101")));
}

TEST_CASE("decoding with no erasures") {
    const BinaryCode c = toy_code();
    const RecoveryOutcome hit = decode_erasures(c, ReceivedWord::parse("11011"));
    REQUIRE(hit.kind == RecoveryOutcome::Kind::decoded);
    CHECK(hit.codeword == parse_word("11011"));
    CHECK(hit.consistent_count == 1);

    const RecoveryOutcome miss = decode_erasures(c, ReceivedWord::parse("10000"));
    CHECK(miss.kind == RecoveryOutcome::Kind::inconsistent);
}

TEST_CASE("decoding the fully erased word") {
    const BinaryCode c = toy_code();
    const RecoveryOutcome out = decode_erasures(c, ReceivedWord::parse("*****"));
    REQUIRE(out.kind == RecoveryOutcome::Kind::ambiguous);
    CHECK(out.consistent_count == 4);
    CHECK(out.ambiguity_dim == 2);
}

TEST_CASE("decode outcome matches pattern recoverability") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        const BinaryCode c = random_code(rng, 9, 5);
        const int n = c.n();
        // Erase a random pattern over a random codeword.
        uint64_t cw = 0;
        for (int row = 0; row < c.k(); ++row)
            if (rng() & 1u) cw ^= c.basis().rows[static_cast<size_t>(row)];
        const uint64_t erased = rng() & ((uint64_t{1} << n) - 1);
        ReceivedWord w;
        w.n = n;
        w.erased = erased;
        w.values = cw & ~erased;
        const RecoveryOutcome out = decode_erasures(c, w);
        if (pattern_recoverable(c, Word(erased, n))) {
            REQUIRE(out.kind == RecoveryOutcome::Kind::decoded);
            CHECK(out.codeword == Word(cw, n));
        } else {
            CHECK(out.kind == RecoveryOutcome::Kind::ambiguous);
        }
    }
}

TEST_CASE("monte carlo estimate brackets the exact measure") {
    const BinaryCode c = repetition_code(3, 5);
    const McEstimate est = mc_unrecoverable_prob(c, 0, make_rational(1, 2), 20000, 42);
    CHECK(est.trials == 20000);
    CHECK(est.algorithm == "splitmix64");
    CHECK(std::abs(est.estimate - 0.125) <= 4.0 * est.standard_error);
}

TEST_CASE("monte carlo is deterministic across runs and thread counts") {
    const BinaryCode c = repetition_code(2, 3);
    const McEstimate a = mc_unrecoverable_prob(c, 2, make_rational(2, 7), 5000, 9001, 1);
    const McEstimate b = mc_unrecoverable_prob(c, 2, make_rational(2, 7), 5000, 9001, 4);
    CHECK(a.unrecoverable == b.unrecoverable);
    const McEstimate c2 = mc_unrecoverable_prob(c, 2, make_rational(2, 7), 5000, 9001, 1);
    CHECK(a.unrecoverable == c2.unrecoverable);
    // A different seed gives a different sample path (with overwhelming odds).
    const McEstimate d = mc_unrecoverable_prob(c, 2, make_rational(2, 7), 5000, 9002, 1);
    CHECK(a.unrecoverable != d.unrecoverable);
}

TEST_CASE("monte carlo near-zero erasure rate") {
    const McEstimate est = mc_unrecoverable_prob(repetition_code(2, 3), 0, make_rational(1, 1000), 2000, 7);
    CHECK(est.unrecoverable == 0);
    CHECK(est.estimate == 0.0);
}

TEST_CASE("monte carlo on a code containing e_i tracks p") {
    const BinaryCode c = from_matrix(GF2Matrix::identity(4));
    const McEstimate est = mc_unrecoverable_prob(c, 0, make_rational(1, 2), 20000, 5);
    CHECK(std::abs(est.estimate - 0.5) <= 4.0 * est.standard_error);
}

TEST_CASE("monte carlo matches the hypercube measure within 4 sigma") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 5; ++trial) {
        const BinaryCode c = random_code(rng, 8, 4);
        const int i = static_cast<int>(rng() % static_cast<uint64_t>(c.n()));
        const mpq_class p = make_rational(1 + static_cast<long>(rng() % 8), 10);
        const double exact = mu_p(omega(c, i), p).get_d();
        const McEstimate est = mc_unrecoverable_prob(c, i, p, 20000, 1000 + static_cast<uint64_t>(trial));
        const double sigma = std::max(est.standard_error, 1e-9);
        CHECK(std::abs(est.estimate - exact) <= 4.5 * sigma);
    }
}

TEST_CASE("monte carlo input validation") {
    const BinaryCode c = repetition_code(2, 2);
    CHECK_THROWS_AS(mc_unrecoverable_prob(c, 0, make_rational(1, 2), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_unrecoverable_prob(c, 0, mpq_class(2), 10, 1), std::domain_error);
    CHECK_THROWS_AS(mc_unrecoverable_prob(c, 9, make_rational(1, 2), 10, 1), std::out_of_range);
}
