#include <catch2/catch_amalgamated.hpp>

#include "bigraph/patterns.hpp"
#include "test_helpers.hpp"

using namespace bigraph;
using bigraph::testing::all_bigraphs;
using bigraph::testing::two_k2;

namespace {

std::vector<OrderingPair> all_ordering_pairs(const Bigraph& g) {
    std::vector<OrderingPair> out;
    OrderingPair ord = identity_orderings(g);
    std::sort(ord.x_order.begin(), ord.x_order.end());
    do {
        std::sort(ord.y_order.begin(), ord.y_order.end());
        do {
            out.push_back(ord);
        } while (std::next_permutation(ord.y_order.begin(), ord.y_order.end()));
    } while (std::next_permutation(ord.x_order.begin(), ord.x_order.end()));
    return out;
}

}  // namespace

TEST_CASE("pattern matrices match their definitions") {
    // Gamma = [[1,1],[1,0]], Slash = [[0,1],[1,0]], I2 = [[1,0],[0,1]]
    CHECK(pattern_entry(PatternKind::Gamma, 0, 0));
    CHECK(pattern_entry(PatternKind::Gamma, 0, 1));
    CHECK(pattern_entry(PatternKind::Gamma, 1, 0));
    CHECK_FALSE(pattern_entry(PatternKind::Gamma, 1, 1));
    CHECK_FALSE(pattern_entry(PatternKind::Slash, 0, 0));
    CHECK(pattern_entry(PatternKind::Slash, 0, 1));
    CHECK(pattern_entry(PatternKind::Slash, 1, 0));
    CHECK_FALSE(pattern_entry(PatternKind::Slash, 1, 1));
    CHECK(pattern_entry(PatternKind::I2, 0, 0));
    CHECK_FALSE(pattern_entry(PatternKind::I2, 0, 1));
    CHECK_FALSE(pattern_entry(PatternKind::I2, 1, 0));
    CHECK(pattern_entry(PatternKind::I2, 1, 1));
}

TEST_CASE("find_pattern on the matching") {
    BiAdjacencyMatrix m = matrix_of(two_k2());
    OrderingPair identity{{0, 1}, {0, 1}};
    OrderingPair y_reversed{{0, 1}, {1, 0}};

    auto w = find_pattern(m, y_reversed, PatternKind::Slash);
    REQUIRE(w.has_value());
    CHECK(*w == PatternWitness{PatternKind::Slash, 0, 1, 1, 0});
    CHECK(pattern_witness_holds(m, *w));

    CHECK_FALSE(find_pattern(m, identity, PatternKind::Slash).has_value());
    CHECK(find_pattern(m, identity, PatternKind::I2).has_value());
}

TEST_CASE("an all-ones matrix contains no pattern with a zero entry") {
    BiAdjacencyMatrix m = matrix_of(complete_bigraph(2, 2));
    for (const OrderingPair& ord : all_ordering_pairs(complete_bigraph(2, 2)))
        for (PatternKind kind : {PatternKind::Gamma, PatternKind::Slash, PatternKind::I2})
            CHECK_FALSE(find_pattern(m, ord, kind).has_value());
}

TEST_CASE("find_pattern rejects mismatched dimensions") {
    BiAdjacencyMatrix m = matrix_of(two_k2());
    CHECK_THROWS_AS(find_pattern(m, OrderingPair{{0}, {0, 1}}, PatternKind::Slash),
                    std::invalid_argument);
}

TEST_CASE("S-free verification on the six-cycle") {
    Bigraph c6 = even_cycle(6);

    // identity orderings cross the independent pair x1y3, x2y2
    auto violation = verify_s_free(c6, identity_orderings(c6));
    REQUIRE(violation.has_value());
    CHECK(*violation == SViolation{0, 1, 1, 2});
    CHECK(s_violation_holds(c6, identity_orderings(c6), *violation));

    // y order y1 < y3 < y2 untangles all three independent pairs
    OrderingPair good{{0, 1, 2}, {0, 2, 1}};
    CHECK_FALSE(verify_s_free(c6, good).has_value());
}

TEST_CASE("S-free verification on the matching and the edgeless graph") {
    Bigraph m = two_k2();
    auto violation = verify_s_free(m, OrderingPair{{0, 1}, {1, 0}});
    REQUIRE(violation.has_value());
    CHECK(s_violation_holds(m, OrderingPair{{0, 1}, {1, 0}}, *violation));
    CHECK(*violation == SViolation{0, 1, 1, 0});

    Bigraph empty = bigraph::testing::edgeless(2, 3);
    CHECK_FALSE(verify_s_free(empty, identity_orderings(empty)).has_value());
}

TEST_CASE("S violations and Slash witnesses coincide") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        BiAdjacencyMatrix m = matrix_of(g);
        for (const OrderingPair& ord : all_ordering_pairs(g)) {
            bool s_clean = !verify_s_free(g, ord).has_value();
            bool slash_clean = !find_pattern(m, ord, PatternKind::Slash).has_value();
            REQUIRE(s_clean == slash_clean);
        }
    }
}

TEST_CASE("row reversal exchanges I2 and Slash") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        BiAdjacencyMatrix m = matrix_of(g);
        for (const OrderingPair& ord : all_ordering_pairs(g)) {
            bool i2_clean = !find_pattern(m, ord, PatternKind::I2).has_value();
            bool slash_clean = !find_pattern(m, reverse_rows(ord), PatternKind::Slash).has_value();
            REQUIRE(i2_clean == slash_clean);
        }
    }
}

TEST_CASE("pattern witnesses self-verify on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Bigraph g = random_bigraph(4, 4, 0.5, seed);
        BiAdjacencyMatrix m = matrix_of(g);
        for (const OrderingPair& ord : all_ordering_pairs(g))
            for (PatternKind kind : {PatternKind::Gamma, PatternKind::Slash, PatternKind::I2})
                if (auto w = find_pattern(m, ord, kind)) CHECK(pattern_witness_holds(m, *w));
    }
}

TEST_CASE("reorder permutes rows and columns") {
    BiAdjacencyMatrix m = matrix_of(two_k2());
    OrderingPair identity{{0, 1}, {0, 1}};
    CHECK(reorder(m, identity) == m);

    OrderingPair y_reversed{{0, 1}, {1, 0}};
    BiAdjacencyMatrix anti = reorder(m, y_reversed);
    CHECK_FALSE(anti.at(0, 0));
    CHECK(anti.at(0, 1));
    CHECK(anti.at(1, 0));
    CHECK_FALSE(anti.at(1, 1));

    CHECK(reorder(reorder(m, y_reversed), y_reversed) == m);
    CHECK_THROWS_AS(reorder(m, OrderingPair{{0}, {0, 1}}), std::invalid_argument);
}
