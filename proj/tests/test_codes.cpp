#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coinf/code.hpp"

using namespace coinf;

namespace {

std::set<std::string> codeword_strings(const BinaryCode& code) {
    std::set<std::string> out;
    for (const Word& c : codewords(code)) out.insert(c.str());
    return out;
}

BinaryCode toy_code() { return from_matrix(GF2Matrix::from_strings({"11100", "00111"}, 5)); }

}  // namespace

TEST_CASE("repetition code parameters") {
    const BinaryCode c = repetition_code(3, 5);
    CHECK(c.n() == 15);
    CHECK(c.k() == 5);
    CHECK(min_distance(c) == 3);
}

TEST_CASE("1-times repetition is the full space") {
    const BinaryCode c = repetition_code(1, 6);
    CHECK(c.n() == 6);
    CHECK(c.k() == 6);
    CHECK(c.codeword_count() == 64);
}

TEST_CASE("repetition(2,3) codewords enumerated") {
    const std::set<std::string> expected{"000000", "110000", "001100", "000011",
                                         "111100", "110011", "001111", "111111"};
    CHECK(codeword_strings(repetition_code(2, 3)) == expected);
}

TEST_CASE("repetition rejects oversized lengths") {
    CHECK_THROWS_AS(repetition_code(8, 8), std::invalid_argument);
    CHECK_THROWS_AS(repetition_code(0, 3), std::invalid_argument);
}

TEST_CASE("distinct weight code parameters and weights") {
    const BinaryCode c = distinct_weight_code(2, 3);
    CHECK(c.n() == 28);
    CHECK(c.k() == 3);
    CHECK(min_distance(c) == 4);
    std::set<int> weights;
    for (const Word& cw : codewords(c)) weights.insert(weight(cw));
    CHECK(weights == std::set<int>{0, 4, 8, 12, 16, 20, 24, 28});
}

TEST_CASE("distinct weight base cases") {
    const BinaryCode c01 = distinct_weight_code(0, 1);
    CHECK(c01.n() == 1);
    CHECK(codeword_strings(c01) == std::set<std::string>{"0", "1"});

    const BinaryCode c12 = distinct_weight_code(1, 2);
    CHECK(c12.n() == 6);
    CHECK(c12.k() == 2);
    CHECK(min_distance(c12) == 2);
    std::set<int> weights;
    for (const Word& cw : codewords(c12)) weights.insert(weight(cw));
    CHECK(weights == std::set<int>{0, 2, 4, 6});
}

TEST_CASE("distinct weight map is injective on codewords") {
    for (auto [r, k] : {std::pair{0, 3}, std::pair{1, 3}, std::pair{2, 2}, std::pair{1, 4}}) {
        const BinaryCode c = distinct_weight_code(r, k);
        std::set<int> weights;
        int count = 0;
        for (const Word& cw : codewords(c)) {
            weights.insert(weight(cw));
            ++count;
        }
        CHECK(static_cast<int>(weights.size()) == count);
    }
}

TEST_CASE("distinct weight rejects oversized lengths") {
    CHECK_THROWS_AS(distinct_weight_code(3, 4), std::invalid_argument);
}

TEST_CASE("hybrid code generator rows are part indicators") {
    const int n = 7;
    const BinaryCode c = hybrid_code(Partition({{0, 1}, {2, 3, 4, 5, 6}}));
    CHECK(c.n() == n);
    CHECK(c.k() == 2);
    CHECK(c.generator().row_word(0).str() == "1100000");
    CHECK(c.generator().row_word(1).str() == "0011111");
    CHECK(min_distance(c) == 2);
}

TEST_CASE("hybrid of singletons is the identity code") {
    const BinaryCode c = hybrid_code(Partition({{0}, {1}, {2}}));
    CHECK(c.generator() == GF2Matrix::identity(3));
}

TEST_CASE("hybrid with power-of-two parts equals the distinct weight code") {
    std::vector<std::vector<int>> parts;
    int idx = 0;
    for (int size : {4, 8, 16}) {
        std::vector<int> part;
        for (int t = 0; t < size; ++t) part.push_back(idx++);
        parts.push_back(part);
    }
    CHECK(hybrid_code(Partition(parts)).generator() == distinct_weight_code(2, 3).generator());
}

TEST_CASE("repetition equals hybrid over consecutive blocks") {
    for (auto [r, k] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 4}}) {
        std::vector<std::vector<int>> parts(static_cast<size_t>(k));
        for (int b = 0; b < k; ++b)
            for (int t = 0; t < r; ++t) parts[static_cast<size_t>(b)].push_back(b * r + t);
        CHECK(hybrid_code(Partition(parts)).generator() == repetition_code(r, k).generator());
    }
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition({{0, 1}, {1, 2}}), std::invalid_argument);   // overlap
    CHECK_THROWS_AS(Partition({{0, 2}}), std::invalid_argument);           // gap
    CHECK_THROWS_AS(Partition({{0}, {}}), std::invalid_argument);          // empty part
}

TEST_CASE("parity check code parameters") {
    const BinaryCode c = parity_check_code(10);
    CHECK(c.n() == 10);
    CHECK(c.k() == 9);
    CHECK(min_distance(c) == 2);
}

TEST_CASE("parity check of length 2 is the repetition code") {
    CHECK(codeword_strings(parity_check_code(2)) == std::set<std::string>{"00", "11"});
}

TEST_CASE("parity check codewords all have even weight") {
    const BinaryCode c = parity_check_code(4);
    int count = 0;
    for (const Word& cw : codewords(c)) {
        CHECK(weight(cw) % 2 == 0);
        ++count;
    }
    CHECK(count == 8);
}

TEST_CASE("product of two 2-repetitions") {
    const BinaryCode c = product(repetition_code(2, 1), repetition_code(2, 1));
    CHECK(c.n() == 4);
    CHECK(c.k() == 1);
    CHECK(min_distance(c) == 4);
    CHECK(codeword_strings(c) == std::set<std::string>{"0000", "1111"});
}

TEST_CASE("product weights multiply block structure") {
    const BinaryCode c = product(repetition_code(2, 2), repetition_code(3, 1));
    CHECK(c.n() == 12);
    CHECK(c.k() == 2);
    std::set<int> weights;
    for (const Word& cw : codewords(c)) weights.insert(weight(cw));
    CHECK(weights == std::set<int>{0, 6, 12});
}

TEST_CASE("product dimension is multiplicative") {
    const BinaryCode a = parity_check_code(4);
    const BinaryCode b = repetition_code(2, 2);
    CHECK(product(a, b).k() == a.k() * b.k());
    CHECK_THROWS_AS(product(repetition_code(2, 5), repetition_code(2, 5)), std::invalid_argument);
}

TEST_CASE("product coordinate layout is row-major") {
    // (r, t) -> r * n2 + t: the generator of C1 x C2 expands each set bit of
    // a C1 row into a full C2 row block.
    const BinaryCode c = product(from_matrix(GF2Matrix::from_strings({"101"}, 3)),
                                 from_matrix(GF2Matrix::from_strings({"11"}, 2)));
    REQUIRE(c.generator().row_count() == 1);
    CHECK(c.generator().row_word(0).str() == "110011");
}

TEST_CASE("from_matrix spans and keeps redundant rows") {
    const GF2Matrix g = GF2Matrix::from_strings({"110", "011", "101"}, 3);
    const BinaryCode c = from_matrix(g);
    CHECK(c.generator().row_count() == 3);  // kept verbatim
    CHECK(c.k() == 2);
    CHECK(c.codeword_count() == 4);
}

TEST_CASE("the 4x9 systematic code contains the motivating difference word") {
    const BinaryCode c = from_matrix(
        GF2Matrix::from_strings({"100010101", "010010110", "001001100", "000111111"}, 9));
    CHECK(c.k() == 4);
    CHECK(c.contains(parse_word("110000011")));
    CHECK_FALSE(c.contains(parse_word("100000000")));
}

TEST_CASE("zero matrix gives the trivial code") {
    const BinaryCode c = from_matrix(GF2Matrix::from_strings({"0000"}, 4));
    CHECK(c.k() == 0);
    CHECK(codeword_strings(c) == std::set<std::string>{"0000"});
    CHECK_THROWS_AS(min_distance(c), std::domain_error);
}

TEST_CASE("toy [5,2,3] code enumerates as listed") {
    const BinaryCode c = toy_code();
    CHECK(c.k() == 2);
    CHECK(min_distance(c) == 3);
    CHECK(codeword_strings(c) == std::set<std::string>{"00000", "11100", "00111", "11011"});
}

TEST_CASE("constructor families advertise their rank") {
    CHECK(repetition_code(4, 3).k() == 3);
    CHECK(distinct_weight_code(1, 3).k() == 3);
    CHECK(hybrid_code(Partition({{0, 1, 2}, {3, 4}})).k() == 2);
    CHECK(parity_check_code(7).k() == 6);
    CHECK(product(repetition_code(2, 2), parity_check_code(3)).k() == 4);
}

TEST_CASE("family tags carry construction parameters") {
    CHECK(repetition_code(3, 5).family().name() == "repetition");
    CHECK(repetition_code(3, 5).family().r == 3);
    CHECK(distinct_weight_code(2, 3).family().k == 3);
    CHECK(parity_check_code(10).family().n == 10);
    const BinaryCode prod = product(repetition_code(2, 1), parity_check_code(2));
    CHECK(prod.family().name() == "product");
    REQUIRE(prod.family().left);
    CHECK(prod.family().left->name() == "repetition");
    CHECK(toy_code().family().name() == "generic");
}
