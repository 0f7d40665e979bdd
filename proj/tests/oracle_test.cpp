#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "bigraph/oracle.hpp"
#include "test_helpers.hpp"

using namespace bigraph;
using bigraph::testing::all_bigraphs;
using bigraph::testing::two_k2;

TEST_CASE("ordering oracle finds the first working pair") {
    auto ord = oracle_orderings(two_k2(), {PatternKind::Slash});
    REQUIRE(ord.has_value());
    CHECK(*ord == identity_orderings(two_k2()));  // identity already works

    auto both = oracle_orderings(complete_bigraph(2, 2), {PatternKind::Gamma, PatternKind::Slash});
    REQUIRE(both.has_value());
    CHECK(*both == identity_orderings(complete_bigraph(2, 2)));
}

TEST_CASE("no ordering of the eight-cycle avoids the Slash pattern") {
    CHECK_FALSE(oracle_orderings(even_cycle(8), {PatternKind::Slash}).has_value());
}

TEST_CASE("oracle results avoid all requested patterns") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Bigraph g = random_bigraph(3, 4, 0.5, seed);
        auto ord = oracle_orderings(g, {PatternKind::Gamma, PatternKind::Slash});
        if (!ord) continue;
        BiAdjacencyMatrix m = matrix_of(g);
        CHECK_FALSE(find_pattern(m, *ord, PatternKind::Gamma).has_value());
        CHECK_FALSE(find_pattern(m, *ord, PatternKind::Slash).has_value());
    }
}

TEST_CASE("ordering oracle enforces its budget") {
    Bigraph big = complete_bigraph(5, 5);  // 5! * 5! pairs > 576
    CHECK_THROWS_AS(oracle_orderings(big, {PatternKind::Slash}), budget_error);
}

TEST_CASE("budget overrides parse from the environment") {
    setenv("BIGRAPH_SIZE_BUDGET", "20000,20,30", 1);
    OracleBudget b = OracleBudget::from_env();
    CHECK(b.max_ordering_pairs == 20000);
    CHECK(b.max_transitive_edges == 20);
    CHECK(b.max_chordal_vertices == 30);
    setenv("BIGRAPH_SIZE_BUDGET", "1000", 1);
    b = OracleBudget::from_env();
    CHECK(b.max_ordering_pairs == 1000);
    CHECK(b.max_transitive_edges == 16);
    unsetenv("BIGRAPH_SIZE_BUDGET");
    b = OracleBudget::from_env();
    CHECK(b.max_ordering_pairs == 576);
    CHECK(b.max_chordal_vertices == 24);
}

TEST_CASE("comparability oracle and Slash oracle agree with row reversal") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        auto i2 = oracle_orderings(g, {PatternKind::I2});
        auto slash = oracle_orderings(g, {PatternKind::Slash});
        REQUIRE(i2.has_value() == slash.has_value());
        BiAdjacencyMatrix m = matrix_of(g);
        if (i2)
            CHECK_FALSE(find_pattern(m, reverse_rows(*i2), PatternKind::Slash).has_value());
        if (slash)
            CHECK_FALSE(find_pattern(m, reverse_rows(*slash), PatternKind::I2).has_value());
    }
}

TEST_CASE("transitive orientation oracle") {
    // matchings are trivially transitive
    auto matching = oracle_transitive_orientation(independence_graph(even_cycle(6)));
    REQUIRE(matching.has_value());
    CHECK(orientation_transitive(independence_graph(even_cycle(6)), *matching));

    Graph triangle(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    triangle.canonicalize();
    auto oriented = oracle_transitive_orientation(triangle);
    REQUIRE(oriented.has_value());
    CHECK(orientation_transitive(triangle, *oriented));

    // the independence graph of the eight-cycle is not transitively orientable
    CHECK_FALSE(oracle_transitive_orientation(independence_graph(even_cycle(8))).has_value());

    Graph big(20);
    for (int i = 0; i < 20; ++i) big.add_edge(i, (i + 1) % 20);
    big.canonicalize();
    CHECK_THROWS_AS(oracle_transitive_orientation(big), budget_error);
}

TEST_CASE("transitivity checker") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.canonicalize();
    CHECK(orientation_transitive(path, {{0, 1}, {2, 1}}));   // both arcs into the middle
    CHECK_FALSE(orientation_transitive(path, {{0, 1}, {1, 2}}));  // chain needs the closing edge
}

TEST_CASE("orientation from a transitive independence-graph orientation") {
    Bigraph m = two_k2();
    // edge 0 = x1y1, edge 1 = x2y2; the arc 0 -> 1 orients x1->x2 and y1->y2
    MixedOrientation o = orientation_from_transitive_ig(m, {{0, 1}});
    CHECK(o.has_arc(Side::X, 0, 1));
    CHECK(o.has_arc(Side::Y, 0, 1));
    CHECK(o.complete());
    CHECK_FALSE(find_t_witness(m, o).has_value());

    // empty independence graph: index order everywhere
    Bigraph k22 = complete_bigraph(2, 2);
    MixedOrientation trivial = orientation_from_transitive_ig(k22, {});
    CHECK(trivial.complete());
    CHECK_FALSE(find_t_witness(k22, trivial).has_value());

    CHECK_THROWS_AS(orientation_from_transitive_ig(m, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("independence-graph orientations transfer on the six-cycle") {
    Bigraph c6 = even_cycle(6);
    Graph ig = independence_graph(c6);
    auto t = oracle_transitive_orientation(ig);
    REQUIRE(t.has_value());
    MixedOrientation o = orientation_from_transitive_ig(c6, *t);
    CHECK(o.complete());
    CHECK_FALSE(find_t_witness(c6, o).has_value());
}

TEST_CASE("harness agrees with itself on cycles and the matching") {
    for (const Bigraph& g : {two_k2(), even_cycle(6)}) {
        HarnessReport report = equivalence_harness(g);
        CHECK(report.consistent);
        REQUIRE(report.consensus.has_value());
        CHECK(*report.consensus == true);
        for (const auto& st : report.statements)
            if (st.value) CHECK(*st.value == true);
    }

    HarnessReport c8 = equivalence_harness(even_cycle(8));
    CHECK(c8.consistent);
    REQUIRE(c8.consensus.has_value());
    CHECK(*c8.consensus == false);
    for (const auto& st : c8.statements) {
        REQUIRE(st.value.has_value());  // asteroid found at k <= 2, nothing skipped
        CHECK(*st.value == false);
    }
}

TEST_CASE("harness is consistent across the small suite") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        HarnessReport report = equivalence_harness(g);
        CHECK(report.consistent);
        REQUIRE(report.consensus.has_value());
    }
}
