#ifndef BIGRAPH_ASTEROIDS_HPP
#define BIGRAPH_ASTEROIDS_HPP

// Edge-asteroids and their weak variant. An odd sequence of edges
// e_0..e_{2k} is an edge-asteroid when for each i some walk joins e_{i+k}
// and e_{i+k+1} (including all four end vertices) while avoiding every
// vertex adjacent to either end of e_i, indices mod 2k+1. The weak variant
// drops the requirement that the e_i be distinct.

#include <deque>
#include <optional>

#include "bigraph/core.hpp"

namespace bigraph {

// Edges in cyclic order plus one explicit walk per avoided edge: walks[i]
// joins edges[(i+k) mod m] and edges[(i+k+1) mod m] with m = edge count and
// k = (m-1)/2.
struct WeakEdgeAsteroid {
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> walks;

    friend bool operator==(const WeakEdgeAsteroid&, const WeakEdgeAsteroid&) = default;
};

// Same shape with all edges distinct.
struct EdgeAsteroid {
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> walks;

    WeakEdgeAsteroid as_weak() const { return WeakEdgeAsteroid{edges, walks}; }
};

namespace detail {

// Vertices not adjacent to either end of `avoid` (its own endpoints are
// adjacent to each other, so both are excluded as well).
inline std::vector<std::uint8_t> allowed_vertices(const Bigraph& g, Edge avoid) {
    std::vector<std::uint8_t> ax(g.x_count(), 1), ay(g.y_count(), 1);
    for (int x = 0; x < g.x_count(); ++x)
        if (g.has_edge(x, avoid.y)) ax[x] = 0;
    for (int y = 0; y < g.y_count(); ++y)
        if (g.has_edge(avoid.x, y)) ay[y] = 0;
    std::vector<std::uint8_t> out;
    out.reserve(g.vertex_count());
    out.insert(out.end(), ax.begin(), ax.end());
    out.insert(out.end(), ay.begin(), ay.end());
    return out;  // X block then Y block
}

inline int flat_index(const Bigraph& g, Vertex v) {
    return v.side == Side::X ? v.index : g.x_count() + v.index;
}

}  // namespace detail

// Walk from from_e to to_e avoiding all neighbours of avoid's endpoints:
// starts with (from_e.x, from_e.y), ends with (to_e.y, to_e.x), the inner Y
// endpoints connected by BFS inside the allowed set.
inline std::optional<std::vector<Vertex>> restricted_walk(const Bigraph& g, Edge avoid,
                                                          Edge from_e, Edge to_e) {
    require_edge(g, avoid, "restricted_walk");
    require_edge(g, from_e, "restricted_walk");
    require_edge(g, to_e, "restricted_walk");
    auto allowed = detail::allowed_vertices(g, avoid);
    auto ok = [&](Vertex v) { return allowed[detail::flat_index(g, v)] != 0; };
    const Vertex fx = x_vertex(from_e.x), fy = y_vertex(from_e.y);
    const Vertex tx = x_vertex(to_e.x), ty = y_vertex(to_e.y);
    if (!ok(fx) || !ok(fy) || !ok(tx) || !ok(ty)) return std::nullopt;

    // BFS from fy to ty within the allowed set
    const int total = g.vertex_count();
    std::vector<int> parent(total, -2);
    std::deque<int> queue{detail::flat_index(g, fy)};
    parent[queue.front()] = -1;
    auto vertex_of = [&](int idx) {
        return idx < g.x_count() ? x_vertex(idx) : y_vertex(idx - g.x_count());
    };
    const int goal = detail::flat_index(g, ty);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == goal) break;
        Vertex v = vertex_of(cur);
        for (int i = 0; i < g.side_count(opposite(v.side)); ++i) {
            Vertex w{opposite(v.side), i};
            if (!g.adjacent(v, w)) continue;
            int wi = detail::flat_index(g, w);
            if (!allowed[wi] || parent[wi] != -2) continue;
            parent[wi] = cur;
            queue.push_back(wi);
        }
    }
    if (parent[goal] == -2) return std::nullopt;

    std::vector<Vertex> walk{fx};
    std::vector<Vertex> tail;
    for (int idx = goal; idx != -1; idx = parent[idx]) tail.push_back(vertex_of(idx));
    walk.insert(walk.end(), tail.rbegin(), tail.rend());
    walk.push_back(tx);
    return walk;
}

// Absent iff all weak edge-asteroid conditions hold with the supplied walks;
// otherwise describes the first failing index and condition. Walk endpoints
// are accepted in either order.
inline std::optional<std::string> verify_weak_edge_asteroid(const Bigraph& g,
                                                            const WeakEdgeAsteroid& w) {
    const int m = static_cast<int>(w.edges.size());
    if (m < 3 || m % 2 == 0)
        return "edge count must be odd and at least 3, got " + std::to_string(m);
    if (static_cast<int>(w.walks.size()) != m)
        return "expected one walk per edge";
    for (int i = 0; i < m; ++i)
        if (!g.has_edge(w.edges[i]))
            return "edge " + std::to_string(i) + " not in graph";
    const int k = (m - 1) / 2;
    auto matches = [](const Vertex& a, const Vertex& b, Edge e) {
        Vertex ex = x_vertex(e.x), ey = y_vertex(e.y);
        return (a == ex && b == ey) || (a == ey && b == ex);
    };
    for (int i = 0; i < m; ++i) {
        const auto& walk = w.walks[i];
        const Edge from_e = w.edges[(i + k) % m];
        const Edge to_e = w.edges[(i + k + 1) % m];
        const Edge avoid = w.edges[i];
        if (walk.size() < 2) return "walk " + std::to_string(i) + " too short";
        for (const Vertex& v : walk)
            if (!g.valid_vertex(v))
                return "walk " + std::to_string(i) + " has an out-of-range vertex";
        if (!matches(walk[0], walk[1], from_e))
            return "walk " + std::to_string(i) + " does not start with the endpoints of edge " +
                   std::to_string((i + k) % m);
        if (!matches(walk[walk.size() - 2], walk.back(), to_e))
            return "walk " + std::to_string(i) + " does not end with the endpoints of edge " +
                   std::to_string((i + k + 1) % m);
        for (std::size_t j = 0; j + 1 < walk.size(); ++j)
            if (!g.adjacent(walk[j], walk[j + 1]))
                return "walk " + std::to_string(i) + " not a walk at position " + std::to_string(j);
        for (const Vertex& v : walk)
            if (g.adjacent(v, x_vertex(avoid.x)) || g.adjacent(v, y_vertex(avoid.y)))
                return "walk " + std::to_string(i) + " touches the neighbourhood of edge " +
                       std::to_string(i);
    }
    return std::nullopt;
}

namespace detail {

// Per-avoid-edge restricted reachability, memoized: component labels of the
// subgraph induced by the allowed set.
struct RestrictedReach {
    const Bigraph& g;
    std::vector<std::vector<int>> comp;  // by avoid-edge index; -1 = not allowed
    std::vector<std::uint8_t> ready;

    explicit RestrictedReach(const Bigraph& g_)
        : g(g_), comp(g_.edge_count()), ready(g_.edge_count(), 0) {}

    const std::vector<int>& components(int avoid_index) {
        if (!ready[avoid_index]) {
            auto allowed = allowed_vertices(g, g.edges()[avoid_index]);
            std::vector<int>& c = comp[avoid_index];
            c.assign(g.vertex_count(), -1);
            int next = 0;
            for (int s = 0; s < g.vertex_count(); ++s) {
                if (!allowed[s] || c[s] != -1) continue;
                c[s] = next;
                std::deque<int> queue{s};
                while (!queue.empty()) {
                    int cur = queue.front();
                    queue.pop_front();
                    Vertex v = cur < g.x_count() ? x_vertex(cur) : y_vertex(cur - g.x_count());
                    for (int i = 0; i < g.side_count(opposite(v.side)); ++i) {
                        Vertex w{opposite(v.side), i};
                        if (!g.adjacent(v, w)) continue;
                        int wi = flat_index(g, w);
                        if (!allowed[wi] || c[wi] != -1) continue;
                        c[wi] = next;
                        queue.push_back(wi);
                    }
                }
                ++next;
            }
            ready[avoid_index] = 1;
        }
        return comp[avoid_index];
    }

    // Walk from edge f to edge t avoiding edge a exists?
    bool joinable(int a, int f, int t) {
        const auto& c = components(a);
        const Edge fe = g.edges()[f], te = g.edges()[t];
        int fx = fe.x, fy = g.x_count() + fe.y;
        int tx = te.x, ty = g.x_count() + te.y;
        if (c[fx] < 0 || c[fy] < 0 || c[tx] < 0 || c[ty] < 0) return false;
        return c[fy] == c[ty];
    }
};

}  // namespace detail

// Exhaustive search over edge subsets of size 2k+1 for k = 1..max_k,
// quotienting rotations (smallest edge first) and reflections. First hit in
// enumeration order, with walks reconstructed via restricted_walk.
inline std::optional<EdgeAsteroid> find_edge_asteroid(const Bigraph& g, int max_k) {
    if (max_k < 1) throw std::invalid_argument("find_edge_asteroid: max_k must be >= 1");
    const int m = g.edge_count();
    detail::RestrictedReach reach(g);

    auto try_order = [&](const std::vector<int>& order) -> bool {
        const int cnt = static_cast<int>(order.size());
        const int k = (cnt - 1) / 2;
        for (int i = 0; i < cnt; ++i)
            if (!reach.joinable(order[i], order[(i + k) % cnt], order[(i + k + 1) % cnt]))
                return false;
        return true;
    };

    for (int k = 1; k <= max_k; ++k) {
        const int cnt = 2 * k + 1;
        if (cnt > m) break;
        std::vector<int> subset(cnt);
        // lexicographic subsets of {0..m-1} of size cnt
        std::vector<int> idx(cnt);
        for (int i = 0; i < cnt; ++i) idx[i] = i;
        while (true) {
            for (int i = 0; i < cnt; ++i) subset[i] = idx[i];
            // quick necessary screen: every edge must be able to join at
            // least one ordered pair of the others
            bool feasible = true;
            for (int i = 0; i < cnt && feasible; ++i) {
                int joins = 0;
                for (int f = 0; f < cnt && joins == 0; ++f) {
                    if (f == i) continue;
                    for (int t = 0; t < cnt; ++t) {
                        if (t == i || t == f) continue;
                        if (reach.joinable(subset[i], subset[f], subset[t])) {
                            joins = 1;
                            break;
                        }
                    }
                }
                if (!joins) feasible = false;
            }
            if (feasible) {
                // cyclic orders: first element fixed, reflections skipped by
                // requiring order[1] < order[cnt-1]
                std::vector<int> rest(subset.begin() + 1, subset.end());
                std::sort(rest.begin(), rest.end());
                do {
                    if (cnt > 1 && rest.front() > rest.back()) continue;
                    std::vector<int> order;
                    order.push_back(subset[0]);
                    order.insert(order.end(), rest.begin(), rest.end());
                    if (!try_order(order)) continue;
                    EdgeAsteroid result;
                    for (int e : order) result.edges.push_back(g.edges()[e]);
                    for (int i = 0; i < cnt; ++i) {
                        auto walk = restricted_walk(g, result.edges[i],
                                                    result.edges[(i + k) % cnt],
                                                    result.edges[(i + k + 1) % cnt]);
                        if (!walk)
                            throw internal_error(
                                "find_edge_asteroid: reachability and walk reconstruction disagree");
                        result.walks.push_back(std::move(*walk));
                    }
                    if (auto err = verify_weak_edge_asteroid(g, result.as_weak()))
                        throw internal_error("find_edge_asteroid: constructed asteroid rejected: " + *err);
                    return result;
                } while (std::next_permutation(rest.begin(), rest.end()));
            }
            // advance subset
            int i = cnt - 1;
            while (i >= 0 && idx[i] == m - cnt + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < cnt; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Checks a caller-supplied cyclic edge order by reconstructing all walks.
inline std::optional<EdgeAsteroid> reconstruct_edge_asteroid(const Bigraph& g,
                                                             const std::vector<Edge>& order) {
    const int cnt = static_cast<int>(order.size());
    if (cnt < 3 || cnt % 2 == 0)
        throw std::invalid_argument("reconstruct_edge_asteroid: need an odd number >= 3 of edges");
    const int k = (cnt - 1) / 2;
    EdgeAsteroid result;
    result.edges = order;
    for (int i = 0; i < cnt; ++i) {
        auto walk = restricted_walk(g, order[i], order[(i + k) % cnt], order[(i + k + 1) % cnt]);
        if (!walk) return std::nullopt;
        result.walks.push_back(std::move(*walk));
    }
    if (auto err = verify_weak_edge_asteroid(g, result.as_weak()))
        throw internal_error("reconstruct_edge_asteroid: walks rejected: " + *err);
    return result;
}

}  // namespace bigraph

#endif  // BIGRAPH_ASTEROIDS_HPP
