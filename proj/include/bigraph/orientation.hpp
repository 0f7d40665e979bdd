#ifndef BIGRAPH_ORIENTATION_HPP
#define BIGRAPH_ORIENTATION_HPP

// Mixed orientations of the ordinary complement: every same-side vertex pair
// may carry a direction while the cross-side complement edges stay
// undirected. The forbidden configuration pairs two complement edges xy,
// x'y' that are independent in the bipartite complement with agreeing arcs
// x->x' and y->y'. An acyclic orientation free of that configuration exists
// exactly when the bigraph is a cocomparability bigraph.

#include <optional>
#include <queue>

#include "bigraph/aux_graph.hpp"
#include "bigraph/implication.hpp"

namespace bigraph {

// Direction state for every same-side pair; +1 means a->b for a < b slots
// held antisymmetrically.
class MixedOrientation {
public:
    MixedOrientation() = default;
    MixedOrientation(int x_count, int y_count)
        : x_count_(x_count),
          y_count_(y_count),
          xdir_(static_cast<std::size_t>(x_count) * x_count, 0),
          ydir_(static_cast<std::size_t>(y_count) * y_count, 0) {}

    explicit MixedOrientation(const Bigraph& g) : MixedOrientation(g.x_count(), g.y_count()) {}

    int side_count(Side s) const { return s == Side::X ? x_count_ : y_count_; }

    // +1: a->b, -1: b->a, 0: unoriented.
    int direction(Side s, int a, int b) const { return grid(s)[slot(s, a, b)]; }

    bool oriented(Side s, int a, int b) const { return direction(s, a, b) != 0; }
    bool has_arc(Side s, int a, int b) const { return direction(s, a, b) > 0; }

    void orient(Side s, int a, int b) {
        if (a == b) throw std::invalid_argument("orient: loop");
        int cur = direction(s, a, b);
        if (cur < 0)
            throw std::invalid_argument("orient: pair already oriented in the opposite direction");
        grid(s)[slot(s, a, b)] = 1;
        grid(s)[slot(s, b, a)] = -1;
    }

    void clear(Side s, int a, int b) {
        grid(s)[slot(s, a, b)] = 0;
        grid(s)[slot(s, b, a)] = 0;
    }

    bool complete() const {
        for (Side s : {Side::X, Side::Y})
            for (int a = 0; a < side_count(s); ++a)
                for (int b = a + 1; b < side_count(s); ++b)
                    if (!oriented(s, a, b)) return false;
        return true;
    }

    // All arcs as directed pairs, X side then Y side, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> arcs() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Side s : {Side::X, Side::Y})
            for (int a = 0; a < side_count(s); ++a)
                for (int b = 0; b < side_count(s); ++b)
                    if (a != b && has_arc(s, a, b)) out.push_back({Vertex{s, a}, Vertex{s, b}});
        return out;
    }

    friend bool operator==(const MixedOrientation&, const MixedOrientation&) = default;

private:
    std::size_t slot(Side s, int a, int b) const {
        int n = side_count(s);
        return static_cast<std::size_t>(a) * n + b;
    }
    std::vector<std::int8_t>& grid(Side s) { return s == Side::X ? xdir_ : ydir_; }
    const std::vector<std::int8_t>& grid(Side s) const { return s == Side::X ? xdir_ : ydir_; }

    int x_count_ = 0;
    int y_count_ = 0;
    std::vector<std::int8_t> xdir_;
    std::vector<std::int8_t> ydir_;
};

// xy and x'y' are bipartite-complement edges, independent there (equivalently
// xy' and x'y are edges of g), carrying agreeing arcs x->x' and y->y'.
struct TWitness {
    int x = 0, xp = 0;  // X indices, arc x -> xp
    int y = 0, yp = 0;  // Y indices, arc y -> yp

    friend bool operator==(const TWitness&, const TWitness&) = default;
};

inline bool t_witness_holds(const Bigraph& g, const MixedOrientation& o, const TWitness& w) {
    if (w.x < 0 || w.x >= g.x_count() || w.xp < 0 || w.xp >= g.x_count()) return false;
    if (w.y < 0 || w.y >= g.y_count() || w.yp < 0 || w.yp >= g.y_count()) return false;
    if (w.x == w.xp || w.y == w.yp) return false;
    if (g.has_edge(w.x, w.y) || g.has_edge(w.xp, w.yp)) return false;   // complement edges
    if (!g.has_edge(w.x, w.yp) || !g.has_edge(w.xp, w.y)) return false; // independent there
    return o.has_arc(Side::X, w.x, w.xp) && o.has_arc(Side::Y, w.y, w.yp);
}

// Absent iff no two complement-independent complement edges agree; first
// witness in lexicographic (x, y, x', y') scan. Works on partial
// orientations: unoriented pairs cannot agree.
inline std::optional<TWitness> find_t_witness(const Bigraph& g, const MixedOrientation& o) {
    for (int x = 0; x < g.x_count(); ++x)
        for (int y = 0; y < g.y_count(); ++y) {
            if (g.has_edge(x, y)) continue;
            for (int xp = 0; xp < g.x_count(); ++xp) {
                if (xp == x || !o.has_arc(Side::X, x, xp)) continue;
                for (int yp = 0; yp < g.y_count(); ++yp) {
                    if (yp == y || !o.has_arc(Side::Y, y, yp)) continue;
                    if (g.has_edge(xp, yp)) continue;
                    if (g.has_edge(x, yp) && g.has_edge(xp, y))
                        return TWitness{x, xp, y, yp};
                }
            }
        }
    return std::nullopt;
}

inline bool is_t_free(const Bigraph& g, const MixedOrientation& o) {
    return !find_t_witness(g, o).has_value();
}

// Directed cycle within one side of the orientation, if any.
inline std::optional<std::vector<Vertex>> find_directed_cycle(const MixedOrientation& o) {
    for (Side s : {Side::X, Side::Y}) {
        const int n = o.side_count(s);
        std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
        std::vector<int> stack, next_child(n, 0);
        for (int root = 0; root < n; ++root) {
            if (state[root] != 0) continue;
            stack = {root};
            state[root] = 1;
            next_child[root] = 0;
            while (!stack.empty()) {
                int v = stack.back();
                bool advanced = false;
                for (int& w = next_child[v]; w < n; ++w) {
                    if (w == v || !o.has_arc(s, v, w)) continue;
                    if (state[w] == 1) {
                        // cycle: unwind stack from w to v
                        std::vector<Vertex> cycle;
                        auto it = std::find(stack.begin(), stack.end(), w);
                        for (; it != stack.end(); ++it) cycle.push_back(Vertex{s, *it});
                        return cycle;
                    }
                    if (state[w] == 0) {
                        state[w] = 1;
                        next_child[w] = 0;
                        stack.push_back(w);
                        ++w;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) {
                    state[v] = 2;
                    stack.pop_back();
                }
            }
        }
    }
    return std::nullopt;
}

inline bool is_acyclic(const MixedOrientation& o) { return !find_directed_cycle(o).has_value(); }

// Orders orient pairs from earlier to later; complete and acyclic by
// construction; free of the forbidden configuration iff the pair is S-free.
inline MixedOrientation orientation_from_orderings(const Bigraph& g, const OrderingPair& ord) {
    if (!valid_orderings(g, ord))
        throw std::invalid_argument("orientation_from_orderings: invalid ordering pair");
    MixedOrientation o(g);
    OrderingPositions pos(ord);
    for (int a = 0; a < g.x_count(); ++a)
        for (int b = 0; b < g.x_count(); ++b)
            if (a != b && pos.x_pos[a] < pos.x_pos[b]) o.orient(Side::X, a, b);
    for (int a = 0; a < g.y_count(); ++a)
        for (int b = 0; b < g.y_count(); ++b)
            if (a != b && pos.y_pos[a] < pos.y_pos[b]) o.orient(Side::Y, a, b);
    return o;
}

// Per-side topological order of a complete acyclic orientation, smallest
// vertex index first among available vertices.
inline OrderingPair orderings_from_orientation(const MixedOrientation& o) {
    OrderingPair ord;
    for (Side s : {Side::X, Side::Y}) {
        const int n = o.side_count(s);
        std::vector<int> indeg(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if (!o.oriented(s, a, b))
                    throw std::invalid_argument("orderings_from_orientation: orientation incomplete");
                if (o.has_arc(s, a, b)) ++indeg[b];
            }
        std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) ready.push(v);
        std::vector<int> order;
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            order.push_back(v);
            for (int w = 0; w < n; ++w)
                if (w != v && o.has_arc(s, v, w) && --indeg[w] == 0) ready.push(w);
        }
        if (static_cast<int>(order.size()) != n)
            throw std::invalid_argument("orderings_from_orientation: orientation is cyclic");
        (s == Side::X ? ord.x_order : ord.y_order) = std::move(order);
    }
    return ord;
}

// Orient a->b exactly when the pair (a,b) has color 0; complete because the
// two orders of a pair are auxiliary-adjacent and so differ in color.
// Acyclicity is not guaranteed.
inline MixedOrientation orientation_from_coloring(const Bigraph& g, const AuxColoring& col) {
    PairSpace space(g);
    if (col.space.x_count != space.x_count || col.space.y_count != space.y_count)
        throw std::invalid_argument("orientation_from_coloring: coloring for a different graph");
    // proper-coloring validation over the whole auxiliary graph
    bool improper = false;
    space.for_each([&](const SidePair& p) {
        int cp = col.of(p);
        if (cp != 0 && cp != 1) improper = true;
        if (improper) return;
        for (const SidePair& q : aux_neighbors(g, p))
            if (col.of(q) == cp) improper = true;
    });
    if (improper)
        throw std::invalid_argument("orientation_from_coloring: improper coloring");
    MixedOrientation o(g);
    space.for_each([&](const SidePair& p) {
        if (col.of(p) == 0) o.orient(p.side, p.first, p.second);
    });
    if (!o.complete())
        throw internal_error("orientation_from_coloring: incomplete orientation");
    return o;
}

namespace detail {

// Orients every pair of the class of `seed` as written; rejects classes that
// contain a pair together with its reversal.
inline void orient_class(MixedOrientation& o, const ImplicationPartition& part,
                         const SidePair& seed) {
    for (const SidePair& p : part.classes[part.class_id(seed)]) {
        if (o.direction(p.side, p.first, p.second) < 0)
            throw internal_error(
                "class orientation conflict: an invertible pair was discovered mid-run");
        o.orient(p.side, p.first, p.second);
    }
}

}  // namespace detail

// Two-stage construction of a complete acyclic orientation without the
// forbidden configuration. Requires the absence of invertible pairs.
//
// Stage one keeps the partial orientation closed (whole implication classes
// at a time): while an unoriented relevant pair remains, either the current
// orientation is transitive and the lexicographically smallest unoriented
// relevant pair's class is oriented as written, or some u->v->w lacks the
// pair {u,w}, in which case the class of (u,w) is oriented. Stage two fills
// the rest from a per-side linear extension. A final check of both
// verifiers guards the construction.
inline MixedOrientation acyclic_t_free_orientation(const Bigraph& g) {
    ImplicationPartition part = implication_partition(g);
    if (has_invertible_pair(part))
        throw std::invalid_argument(
            "acyclic_t_free_orientation: graph contains an invertible pair");

    std::vector<SidePair> relevant = relevant_pairs(part);
    MixedOrientation o(g);

    auto find_transitivity_violation = [&]() -> std::optional<SidePair> {
        for (Side s : {Side::X, Side::Y}) {
            const int n = o.side_count(s);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v || !o.has_arc(s, u, v)) continue;
                    for (int w = 0; w < n; ++w) {
                        if (w == u || w == v || !o.has_arc(s, v, w)) continue;
                        if (!o.oriented(s, u, w)) return SidePair{s, u, w};
                        if (o.direction(s, u, w) < 0)
                            throw internal_error(
                                "stage one produced u->v->w with w->u oriented");
                    }
                }
        }
        return std::nullopt;
    };

    const std::size_t class_count = part.classes.size();
    for (std::size_t iterations = 0;; ++iterations) {
        if (iterations > class_count + 1)
            throw internal_error("stage one failed to terminate");
        if (auto violation = find_transitivity_violation()) {
            // the violating pair is relevant here; orient its whole class
            if (part.class_size(*violation) < 2)
                throw internal_error("transitivity violation on a non-relevant pair");
            detail::orient_class(o, part, *violation);
            continue;
        }
        auto next = std::find_if(relevant.begin(), relevant.end(), [&](const SidePair& p) {
            return !o.oriented(p.side, p.first, p.second);
        });
        if (next == relevant.end()) break;
        detail::orient_class(o, part, *next);
    }

    // stage two: linear extension of the stage-one digraph, ties by index
    for (Side s : {Side::X, Side::Y}) {
        const int n = o.side_count(s);
        std::vector<int> indeg(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && o.has_arc(s, a, b)) ++indeg[b];
        std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) ready.push(v);
        std::vector<int> position(n, -1);
        int placed = 0;
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            position[v] = placed++;
            for (int w = 0; w < n; ++w)
                if (w != v && o.has_arc(s, v, w) && --indeg[w] == 0) ready.push(w);
        }
        if (placed != n) throw internal_error("stage one left a directed cycle");
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!o.oriented(s, a, b)) {
                    if (position[a] < position[b])
                        o.orient(s, a, b);
                    else
                        o.orient(s, b, a);
                }
    }

    if (auto w = find_t_witness(g, o))
        throw internal_error("acyclic_t_free_orientation: output contains the forbidden configuration");
    if (auto c = find_directed_cycle(o))
        throw internal_error("acyclic_t_free_orientation: output contains a directed cycle");
    return o;
}

}  // namespace bigraph

#endif  // BIGRAPH_ORIENTATION_HPP
