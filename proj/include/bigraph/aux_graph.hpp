#ifndef BIGRAPH_AUX_GRAPH_HPP
#define BIGRAPH_AUX_GRAPH_HPP

// The auxiliary graph on ordered same-side pairs: (u,v) is adjacent to (v,u)
// and to every opposite-side pair (z,w) such that uw and vz are independent
// edges. It is bipartite exactly when the bigraph is a cocomparability
// bigraph; an odd cycle converts into a weak edge-asteroid.
//
// The graph is never materialized; breadth-first search queries neighbours
// lazily (O(n^2) pairs with O(n^2) candidate neighbours each).

#include <deque>
#include <optional>
#include <variant>

#include "bigraph/asteroids.hpp"
#include "bigraph/implication.hpp"

namespace bigraph {

// Reversal neighbour first, then opposite-side pairs in lexicographic order.
inline std::vector<SidePair> aux_neighbors(const Bigraph& g, const SidePair& p) {
    if (!valid_side_pair(g, p))
        throw std::invalid_argument("aux_neighbors: invalid side pair");
    std::vector<SidePair> out{p.reversed()};
    const Side os = opposite(p.side);
    const int n = g.side_count(os);
    auto edge = [&](int same, int opp) {
        return p.side == Side::X ? g.has_edge(same, opp) : g.has_edge(opp, same);
    };
    for (int z = 0; z < n; ++z) {
        if (!edge(p.second, z)) continue;  // vz must be an edge
        for (int w = 0; w < n; ++w) {
            if (w == z || !edge(p.first, w)) continue;  // uw must be an edge
            // independence of uw and vz: cross pairs uz, vw absent
            if (edge(p.first, z) || edge(p.second, w)) continue;
            out.push_back(SidePair{os, z, w});
        }
    }
    std::sort(out.begin() + 1, out.end());
    return out;
}

// Proper 2-coloring of the auxiliary graph, stored per pair id.
struct AuxColoring {
    PairSpace space;
    std::vector<std::int8_t> color;  // 0/1; -1 on diagonal slots

    explicit AuxColoring(const PairSpace& s) : space(s), color(s.size(), -1) {}

    int of(const SidePair& p) const { return color[space.id(p)]; }
};

// Simple odd cycle; consecutive entries (cyclically) are adjacent in the
// auxiliary graph.
struct AuxOddCycle {
    std::vector<SidePair> pairs;
};

namespace detail {

// Shrinks a closed odd walk to a simple odd cycle: a repeated vertex splits
// the walk into two loops of opposite parity; keep the odd one.
inline std::vector<int> shrink_odd_closed_walk(std::vector<int> walk) {
    for (;;) {
        const int len = static_cast<int>(walk.size());
        std::map<int, int> first_at;
        int rep_first = -1, rep_second = -1;
        for (int i = 0; i < len; ++i) {
            auto [it, fresh] = first_at.try_emplace(walk[i], i);
            if (!fresh) {
                rep_first = it->second;
                rep_second = i;
                break;
            }
        }
        if (rep_first < 0) return walk;
        std::vector<int> inner(walk.begin() + rep_first, walk.begin() + rep_second);
        if ((rep_second - rep_first) % 2 == 1) {
            walk = std::move(inner);  // odd loop
        } else {
            walk.erase(walk.begin() + rep_first, walk.begin() + rep_second);  // drop even loop
        }
    }
}

}  // namespace detail

// BFS layering component by component, seeding color 0 at the
// lexicographically smallest pair of each component. Returns a proper
// coloring, or a simple odd cycle obtained from the first same-color edge.
inline std::variant<AuxColoring, AuxOddCycle> two_color_aux(const Bigraph& g) {
    PairSpace space(g);
    AuxColoring coloring(space);
    std::vector<int> parent(space.size(), -2);

    for (int root = 0; root < space.size(); ++root) {
        if (space.is_diagonal(root) || coloring.color[root] != -1) continue;
        coloring.color[root] = 0;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop_front();
            SidePair p = space.pair(id);
            for (const SidePair& q : aux_neighbors(g, p)) {
                int qid = space.id(q);
                if (coloring.color[qid] == -1) {
                    coloring.color[qid] = static_cast<std::int8_t>(1 - coloring.color[id]);
                    parent[qid] = id;
                    queue.push_back(qid);
                } else if (coloring.color[qid] == coloring.color[id]) {
                    // odd closed walk: root..p + (p,q) + reverse(root..q)
                    std::vector<int> walk;
                    for (int cur = id; cur != -1; cur = parent[cur]) walk.push_back(cur);
                    std::reverse(walk.begin(), walk.end());
                    std::vector<int> back;
                    for (int cur = qid; cur != -1; cur = parent[cur]) back.push_back(cur);
                    walk.insert(walk.end(), back.begin(), back.end());
                    walk.pop_back();  // both paths start at root; drop duplicate
                    std::vector<int> cycle = detail::shrink_odd_closed_walk(std::move(walk));
                    AuxOddCycle out;
                    for (int c : cycle) out.pairs.push_back(space.pair(c));
                    return out;
                }
            }
        }
    }
    return coloring;
}

inline bool aux_adjacent(const Bigraph& g, const SidePair& p, const SidePair& q) {
    if (q == p.reversed()) return true;
    if (p.side == q.side) return false;
    // uw and vz independent edges, with (u,v) = p and (z,w) = q
    Edge uw = p.side == Side::X ? Edge{p.first, q.second} : Edge{q.second, p.first};
    Edge vz = p.side == Side::X ? Edge{p.second, q.first} : Edge{q.first, p.second};
    if (!g.has_edge(uw) || !g.has_edge(vz)) return false;
    return edges_independent_unchecked(g, uw, vz);
}

namespace detail {

// A step sequence Q_0..Q_t with Q_t = reversed(Q_0) closes into a simple odd
// auxiliary cycle of length t+1 whose single reversal step is the wrap: the
// auxiliary cycle entries alternate between Q_i and its reversal.
inline std::vector<SidePair> gamma_path_from_odd_cycle(const Bigraph& g,
                                                       const std::vector<SidePair>& cycle) {
    const int len = static_cast<int>(cycle.size());
    // count reversal steps; with exactly one, rotate it to the wrap and read
    // the step path straight off the cycle
    std::vector<int> reversal_steps;
    for (int i = 0; i < len; ++i)
        if (cycle[(i + 1) % len] == cycle[i].reversed()) reversal_steps.push_back(i);

    if (reversal_steps.size() == 1) {
        const int start = (reversal_steps[0] + 1) % len;
        std::vector<SidePair> path(len);
        for (int i = 0; i < len; ++i) {
            const SidePair& p = cycle[(start + i) % len];
            path[i] = (i % 2 == 0) ? p : p.reversed();
        }
        return path;
    }

    // Multiple reversal steps: walking the cycle once flips the step/reversal
    // parity an odd number of times, so the first pair is invertible; take a
    // shortest step path to its reversal instead.
    const SidePair seed = cycle.front();
    auto path = pair_step_path(g, seed, seed.reversed());
    if (!path)
        throw internal_error("odd auxiliary cycle without an invertible pair");
    return *path;
}

}  // namespace detail

// Converts an odd auxiliary cycle into a weak edge-asteroid of g, of size
// 4k-1 where 2k is the length of the underlying step path from some (u,v) to
// (v,u). Writing u_i, v_i for the path's first and second components (so
// u_{2k} = v_0 and v_{2k} = u_0), the asteroid consists of the step edges
//   u_0u_1, ..., u_{2k-1}u_{2k}, v_1v_2, ..., v_{2k-1}v_{2k}
// in that cyclic order, joined by three- and four-vertex walks whose
// avoidance conditions are exactly the step independences.
inline WeakEdgeAsteroid odd_cycle_to_weak_asteroid(const Bigraph& g, const AuxOddCycle& c) {
    const int len = static_cast<int>(c.pairs.size());
    if (len < 3 || len % 2 == 0)
        throw std::invalid_argument("odd_cycle_to_weak_asteroid: cycle length must be odd and >= 3");
    for (int i = 0; i < len; ++i) {
        if (!valid_side_pair(g, c.pairs[i]))
            throw std::invalid_argument("odd_cycle_to_weak_asteroid: invalid pair in cycle");
        if (!aux_adjacent(g, c.pairs[i], c.pairs[(i + 1) % len]))
            throw std::invalid_argument(
                "odd_cycle_to_weak_asteroid: consecutive pairs not adjacent in the auxiliary graph");
    }

    const std::vector<SidePair> path = detail::gamma_path_from_odd_cycle(g, c.pairs);
    const int steps = static_cast<int>(path.size()) - 1;  // = 2k, even and >= 4
    if (steps < 4 || steps % 2 != 0 || path.back() != path.front().reversed())
        throw internal_error("odd_cycle_to_weak_asteroid: malformed step path");
    const int k = steps / 2;

    auto u = [&](int i) { return pair_first_vertex(path[i]); };
    auto v = [&](int i) { return pair_second_vertex(path[i]); };
    auto edge_between = [&](Vertex a, Vertex b) {
        if (a.side == b.side || !g.adjacent(a, b))
            throw internal_error("odd_cycle_to_weak_asteroid: step sequence misses an edge");
        return a.side == Side::X ? Edge{a.index, b.index} : Edge{b.index, a.index};
    };

    WeakEdgeAsteroid out;
    for (int i = 0; i < 2 * k; ++i) out.edges.push_back(edge_between(u(i), u(i + 1)));
    for (int t = 1; t < 2 * k; ++t) out.edges.push_back(edge_between(v(t), v(t + 1)));

    out.walks.resize(4 * k - 1);
    out.walks[0] = {u(2 * k - 1), u(2 * k), v(1), v(2)};  // u_{2k} = v_0
    for (int i = 1; i <= 2 * k - 2; ++i) out.walks[i] = {v(i), v(i + 1), v(i + 2)};
    out.walks[2 * k - 1] = {v(2 * k - 1), v(2 * k), u(1)};  // v_{2k} = u_0
    for (int t = 1; t <= 2 * k - 2; ++t) out.walks[2 * k - 1 + t] = {u(t - 1), u(t), u(t + 1)};
    out.walks[4 * k - 2] = {u(2 * k - 2), u(2 * k - 1), u(2 * k)};

    if (auto err = verify_weak_edge_asteroid(g, out))
        throw internal_error("odd_cycle_to_weak_asteroid: constructed asteroid rejected: " + *err);
    return out;
}

}  // namespace bigraph

#endif  // BIGRAPH_AUX_GRAPH_HPP
