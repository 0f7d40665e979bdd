#include <catch2/catch_amalgamated.hpp>

#include "bigraph/aux_graph.hpp"
#include "test_helpers.hpp"

using namespace bigraph;
using bigraph::testing::all_bigraphs;
using bigraph::testing::two_k2;

TEST_CASE("auxiliary neighbours") {
    CHECK(aux_neighbors(two_k2(), {Side::X, 0, 1}) ==
          std::vector<SidePair>{{Side::X, 1, 0}, {Side::Y, 1, 0}});
    CHECK(aux_neighbors(complete_bigraph(2, 2), {Side::X, 0, 1}) ==
          std::vector<SidePair>{{Side::X, 1, 0}});
    CHECK(aux_neighbors(bigraph::testing::edgeless(2, 2), {Side::X, 0, 1}) ==
          std::vector<SidePair>{{Side::X, 1, 0}});
}

TEST_CASE("auxiliary adjacency swaps the step relation") {
    // opposite-side auxiliary neighbours are exactly the step neighbours with
    // components exchanged: the auxiliary graph links pairs forced to
    // opposite orientations, steps link pairs forced to the same one
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        PairSpace space(g);
        space.for_each([&](const SidePair& p) {
            auto aux = aux_neighbors(g, p);
            auto step = pair_step_neighbors(g, p);
            std::vector<SidePair> swapped;
            for (const SidePair& q : aux)
                if (q.side != p.side) swapped.push_back(q.reversed());
            std::sort(swapped.begin(), swapped.end());
            std::sort(step.begin(), step.end());
            CHECK(swapped == step);
        });
    }
}

TEST_CASE("two-coloring of the matching") {
    auto result = two_color_aux(two_k2());
    REQUIRE(std::holds_alternative<AuxColoring>(result));
    const AuxColoring& col = std::get<AuxColoring>(result);
    // component seeded at the lexicographically smallest pair
    CHECK(col.of({Side::X, 0, 1}) == 0);
    CHECK(col.of({Side::X, 1, 0}) == 1);
    // colors forced around the four-cycle
    CHECK(col.of({Side::Y, 1, 0}) == 1);
    CHECK(col.of({Side::Y, 0, 1}) == 0);
}

TEST_CASE("colorings are proper") {
    for (const Bigraph& g : {two_k2(), even_cycle(6), complete_bigraph(3, 2),
                             bigraph::testing::edgeless(3, 3)}) {
        auto result = two_color_aux(g);
        REQUIRE(std::holds_alternative<AuxColoring>(result));
        const AuxColoring& col = std::get<AuxColoring>(result);
        PairSpace space(g);
        space.for_each([&](const SidePair& p) {
            int c = col.of(p);
            CHECK((c == 0 || c == 1));
            for (const SidePair& q : aux_neighbors(g, p)) CHECK(col.of(q) != c);
        });
    }
}

TEST_CASE("odd cycles are simple and re-verify") {
    for (int n : {8, 10, 12, 14}) {
        Bigraph g = even_cycle(n);
        auto result = two_color_aux(g);
        REQUIRE(std::holds_alternative<AuxOddCycle>(result));
        const AuxOddCycle& cycle = std::get<AuxOddCycle>(result);
        const int len = static_cast<int>(cycle.pairs.size());
        CHECK(len >= 3);
        CHECK(len % 2 == 1);
        for (int i = 0; i < len; ++i) {
            for (int j = i + 1; j < len; ++j) CHECK(cycle.pairs[i] != cycle.pairs[j]);
            CHECK(aux_adjacent(g, cycle.pairs[i], cycle.pairs[(i + 1) % len]));
        }
    }
}

TEST_CASE("bipartiteness agrees with invertibility") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        bool bipartite = std::holds_alternative<AuxColoring>(two_color_aux(g));
        CHECK(bipartite == !find_invertible_pair(g).has_value());
    }
}

TEST_CASE("odd cycle converts to a verified weak edge-asteroid") {
    for (int n : {8, 10, 12, 16, 20}) {
        Bigraph g = even_cycle(n);
        auto result = two_color_aux(g);
        REQUIRE(std::holds_alternative<AuxOddCycle>(result));
        WeakEdgeAsteroid asteroid = odd_cycle_to_weak_asteroid(g, std::get<AuxOddCycle>(result));
        CHECK_FALSE(verify_weak_edge_asteroid(g, asteroid).has_value());
        CHECK(asteroid.edges.size() % 4 == 3);  // size 4k-1
        CHECK(asteroid.edges.size() >= 7);
    }
}

TEST_CASE("asteroid extraction works on every non-bipartite small graph") {
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        auto result = two_color_aux(g);
        if (!std::holds_alternative<AuxOddCycle>(result)) continue;
        WeakEdgeAsteroid asteroid = odd_cycle_to_weak_asteroid(g, std::get<AuxOddCycle>(result));
        CHECK_FALSE(verify_weak_edge_asteroid(g, asteroid).has_value());
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Bigraph g = random_bigraph(4, 4, 0.4, seed);
        auto result = two_color_aux(g);
        if (!std::holds_alternative<AuxOddCycle>(result)) continue;
        WeakEdgeAsteroid asteroid = odd_cycle_to_weak_asteroid(g, std::get<AuxOddCycle>(result));
        CHECK_FALSE(verify_weak_edge_asteroid(g, asteroid).has_value());
    }
}

TEST_CASE("fabricated cycles are rejected") {
    Bigraph g = even_cycle(8);
    AuxOddCycle even_cycle_input{{{Side::X, 0, 1}, {Side::X, 1, 0}}};
    CHECK_THROWS_AS(odd_cycle_to_weak_asteroid(g, even_cycle_input), std::invalid_argument);

    AuxOddCycle non_adjacent{{{Side::X, 0, 1}, {Side::X, 2, 3}, {Side::X, 1, 0}}};
    CHECK_THROWS_AS(odd_cycle_to_weak_asteroid(g, non_adjacent), std::invalid_argument);
}
