#include <catch2/catch_amalgamated.hpp>

#include "bigraph/recognizers.hpp"
#include "test_helpers.hpp"

using namespace bigraph;
using bigraph::testing::all_bigraphs;
using bigraph::testing::two_k2;

TEST_CASE("cocomparability recognition on basic families") {
    Verdict c6 = recognize_cocomparability(even_cycle(6));
    CHECK(c6.member);
    CHECK(c6.certificate.kind == Certificate::Kind::SFreeOrderings);
    CHECK_FALSE(verify_s_free(even_cycle(6), c6.certificate.orderings).has_value());

    Verdict c8 = recognize_cocomparability(even_cycle(8));
    CHECK_FALSE(c8.member);
    CHECK(c8.certificate.kind == Certificate::Kind::WeakAsteroid);
    CHECK_FALSE(verify_weak_edge_asteroid(even_cycle(8), c8.certificate.asteroid).has_value());

    CHECK(recognize_cocomparability(two_k2()).member);
    CHECK(recognize_cocomparability(complete_bigraph(3, 2)).member);
    CHECK(recognize_cocomparability(bigraph::testing::edgeless(3, 3)).member);
}

TEST_CASE("long even cycles are refuted with verified certificates") {
    for (int n = 8; n <= 20; n += 2) {
        Bigraph g = even_cycle(n);
        Verdict v = recognize_cocomparability(g);
        CHECK_FALSE(v.member);
        REQUIRE(v.certificate.kind == Certificate::Kind::WeakAsteroid);
        CHECK_FALSE(verify_weak_edge_asteroid(g, v.certificate.asteroid).has_value());
    }
}

TEST_CASE("recognition agrees with the permutation oracle on the small suite") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        bool member = recognize_cocomparability(g).member;
        bool oracle = oracle_orderings(g, {PatternKind::Slash}).has_value();
        REQUIRE(member == oracle);
    }
}

TEST_CASE("chordless cycle search") {
    auto c6 = find_induced_cycle_at_least(even_cycle(6), 6);
    REQUIRE(c6.has_value());
    CHECK(c6->size() == 6);
    CHECK_FALSE(induced_cycle_holds(even_cycle(6), *c6, 6).has_value());

    CHECK_FALSE(find_induced_cycle_at_least(complete_bigraph(3, 3), 6).has_value());
    CHECK_FALSE(find_induced_cycle_at_least(even_cycle(4), 6).has_value());

    auto c8 = find_induced_cycle_at_least(even_cycle(8), 6);
    REQUIRE(c8.has_value());
    CHECK(c8->size() == 8);

    CHECK_THROWS_AS(find_induced_cycle_at_least(even_cycle(6), 5), std::invalid_argument);
}

TEST_CASE("exact-length chordless cycle queries") {
    CHECK(find_induced_cycle_in_range(even_cycle(6), 6, 6).has_value());
    CHECK_FALSE(find_induced_cycle_in_range(even_cycle(8), 6, 6).has_value());
    CHECK(find_induced_cycle_in_range(even_cycle(8), 6, 8).has_value());
}

TEST_CASE("chordless cycle search matches a reference enumeration") {
    // reference: test all subsets of vertices for being a chordless cycle
    auto has_long_chordless_cycle = [](const Bigraph& g) {
        std::vector<Vertex> verts;
        for (int i = 0; i < g.x_count(); ++i) verts.push_back(x_vertex(i));
        for (int i = 0; i < g.y_count(); ++i) verts.push_back(y_vertex(i));
        const int n = static_cast<int>(verts.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<Vertex> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) subset.push_back(verts[i]);
            if (subset.size() < 6) continue;
            // a chordless cycle on the subset = every vertex has degree
            // exactly 2 within it and the subset is connected
            std::sort(subset.begin(), subset.end());
            do {
                if (!induced_cycle_holds(g, subset, 6)) return true;
            } while (std::next_permutation(subset.begin(), subset.end()));
        }
        return false;
    };
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Bigraph g = random_bigraph(3, 3, 0.5, seed);
        CHECK(find_induced_cycle_at_least(g, 6).has_value() == has_long_chordless_cycle(g));
    }
}

TEST_CASE("chordal recognition") {
    Verdict c6 = recognize_chordal_bigraph(even_cycle(6));
    CHECK_FALSE(c6.member);
    REQUIRE(c6.certificate.kind == Certificate::Kind::InducedCycle);
    CHECK(c6.certificate.cycle.size() == 6);

    Verdict c4 = recognize_chordal_bigraph(even_cycle(4));
    CHECK(c4.member);
    REQUIRE(c4.certificate.kind == Certificate::Kind::GammaFreeOrderings);
    CHECK_FALSE(find_pattern(matrix_of(even_cycle(4)), c4.certificate.orderings,
                             PatternKind::Gamma)
                    .has_value());

    CHECK_FALSE(recognize_chordal_bigraph(even_cycle(8)).member);

    OracleBudget tight;
    tight.max_chordal_vertices = 4;
    CHECK_THROWS_AS(recognize_chordal_bigraph(even_cycle(6), tight), budget_error);
}

TEST_CASE("interval containment recognition") {
    CHECK(recognize_interval_containment(even_cycle(4)).member);

    Verdict c6 = recognize_interval_containment(even_cycle(6));
    CHECK_FALSE(c6.member);
    CHECK(c6.certificate.kind == Certificate::Kind::InducedCycle);

    Verdict c8 = recognize_interval_containment(even_cycle(8));
    CHECK_FALSE(c8.member);

    Verdict yes = recognize_interval_containment(two_k2());
    CHECK(yes.member);
    REQUIRE(yes.certificate.kind == Certificate::Kind::Pair);
    CHECK(yes.certificate.parts.size() == 2);
}

TEST_CASE("interval containment equals chordal and cocomparability") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        bool chordal = recognize_chordal_bigraph(g).member;
        bool cocomp = recognize_cocomparability(g).member;
        bool interval = recognize_interval_containment(g).member;
        bool oracle = oracle_orderings(g, {PatternKind::Gamma, PatternKind::Slash}).has_value();
        REQUIRE(interval == (chordal && cocomp));
        REQUIRE(interval == oracle);
        // for cocomparability members a long chordless cycle must be a six-cycle
        bool c6_free = !find_induced_cycle_in_range(g, 6, 6).has_value();
        REQUIRE(interval == (c6_free && cocomp));
    }
}
