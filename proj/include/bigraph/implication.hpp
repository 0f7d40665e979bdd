#ifndef BIGRAPH_IMPLICATION_HPP
#define BIGRAPH_IMPLICATION_HPP

// Implication machinery on ordered same-side vertex pairs. A single step
// relates (a,b) to (a',b') on the opposite side when aa' and bb' are
// independent edges; reachability under steps partitions the pair set into
// implication classes. A vertex pair u,v is invertible when (u,v) and (v,u)
// share a class, witnessed by a pair of congruent walks.

#include <deque>
#include <map>
#include <optional>

#include "bigraph/core.hpp"

namespace bigraph {

// Ordered pair of distinct vertices on one side.
struct SidePair {
    Side side = Side::X;
    int first = 0;
    int second = 0;

    SidePair reversed() const { return SidePair{side, second, first}; }

    friend bool operator==(const SidePair&, const SidePair&) = default;
    friend auto operator<=>(const SidePair&, const SidePair&) = default;
};

inline bool valid_side_pair(const Bigraph& g, const SidePair& p) {
    int n = g.side_count(p.side);
    return p.first != p.second && p.first >= 0 && p.first < n && p.second >= 0 && p.second < n;
}

// Dense id space over all ordered same-side pairs; ids ascend in
// (side, first, second) order so id order is lexicographic pair order.
struct PairSpace {
    int x_count = 0;
    int y_count = 0;

    explicit PairSpace(const Bigraph& g) : x_count(g.x_count()), y_count(g.y_count()) {}

    int size() const { return x_count * x_count + y_count * y_count; }

    int id(const SidePair& p) const {
        int base = p.side == Side::X ? 0 : x_count * x_count;
        int n = p.side == Side::X ? x_count : y_count;
        return base + p.first * n + p.second;
    }

    SidePair pair(int id) const {
        if (id < x_count * x_count)
            return SidePair{Side::X, id / x_count, id % x_count};
        id -= x_count * x_count;
        return SidePair{Side::Y, id / y_count, id % y_count};
    }

    bool is_diagonal(int id) const {
        SidePair p = pair(id);
        return p.first == p.second;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int id = 0; id < size(); ++id)
            if (!is_diagonal(id)) f(pair(id));
    }
};

// One implication step: all (a',b') on the opposite side with edges (a,a'),
// (b,b') present and independent. Lexicographic in (a',b').
inline std::vector<SidePair> pair_step_neighbors(const Bigraph& g, const SidePair& p) {
    if (!valid_side_pair(g, p))
        throw std::invalid_argument("pair_step_neighbors: invalid side pair");
    const Side os = opposite(p.side);
    const int n = g.side_count(os);
    std::vector<SidePair> out;
    auto edge = [&](int same, int opp) {
        return p.side == Side::X ? g.has_edge(same, opp) : g.has_edge(opp, same);
    };
    for (int a = 0; a < n; ++a) {
        if (!edge(p.first, a)) continue;
        for (int b = 0; b < n; ++b) {
            if (b == a || !edge(p.second, b)) continue;
            // independence of the step edges: cross pairs must be absent
            if (edge(p.first, b) || edge(p.second, a)) continue;
            out.push_back(SidePair{os, a, b});
        }
    }
    return out;
}

struct ImplicationPartition {
    PairSpace space;
    std::vector<int> class_of;                   // by pair id; -1 on diagonal slots
    std::vector<std::vector<SidePair>> classes;  // class id -> sorted members

    explicit ImplicationPartition(const PairSpace& s) : space(s) {}

    int class_id(const SidePair& p) const { return class_of[space.id(p)]; }
    int class_size(const SidePair& p) const {
        return static_cast<int>(classes[class_id(p)].size());
    }
};

// Connected components of the step graph; class ids ordered by each class's
// lexicographically smallest member.
inline ImplicationPartition implication_partition(const Bigraph& g) {
    PairSpace space(g);
    ImplicationPartition part(space);
    part.class_of.assign(space.size(), -1);
    std::vector<std::uint8_t> seen(space.size(), 0);

    for (int root = 0; root < space.size(); ++root) {
        if (space.is_diagonal(root) || seen[root]) continue;
        std::vector<SidePair> members;
        std::deque<int> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop_front();
            SidePair p = space.pair(id);
            members.push_back(p);
            for (const SidePair& q : pair_step_neighbors(g, p)) {
                int qid = space.id(q);
                if (!seen[qid]) {
                    seen[qid] = 1;
                    queue.push_back(qid);
                }
            }
        }
        std::sort(members.begin(), members.end());
        int cid = static_cast<int>(part.classes.size());
        for (const SidePair& p : members) part.class_of[space.id(p)] = cid;
        part.classes.push_back(std::move(members));
    }
    // roots were visited in id order = lexicographic order, so class ids are
    // already sorted by smallest member
    return part;
}

// Pairs whose implication class has at least two members; closed under
// reversal. Sorted lexicographically.
inline std::vector<SidePair> relevant_pairs(const ImplicationPartition& part) {
    std::vector<SidePair> out;
    part.space.for_each([&](const SidePair& p) {
        if (part.class_size(p) >= 2) out.push_back(p);
    });
    return out;
}

// --------------------------------------------------------------- walk pairs

// Two walks of equal length whose i-th edges are independent at every i.
struct WalkPair {
    std::vector<Vertex> walk_a;
    std::vector<Vertex> walk_b;

    friend bool operator==(const WalkPair&, const WalkPair&) = default;
};

// Invariant checker; absent when the pair is a valid congruent walk pair.
inline std::optional<std::string> check_walk_pair(const Bigraph& g, const WalkPair& wp) {
    const auto& a = wp.walk_a;
    const auto& b = wp.walk_b;
    if (a.size() != b.size()) return "walks differ in length";
    if (a.empty()) return "walks are empty";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!g.valid_vertex(a[i]) || !g.valid_vertex(b[i]))
            return "walk vertex out of range at position " + std::to_string(i);
        if (a[i].side != b[i].side)
            return "walk vertices on different sides at position " + std::to_string(i);
    }
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (!g.adjacent(a[i], a[i + 1]))
            return "first walk not a walk at step " + std::to_string(i);
        if (!g.adjacent(b[i], b[i + 1]))
            return "second walk not a walk at step " + std::to_string(i);
        if (a[i] == b[i] || a[i + 1] == b[i + 1])
            return "step edges share an endpoint at step " + std::to_string(i);
        if (g.adjacent(a[i], b[i + 1]) || g.adjacent(b[i], a[i + 1]))
            return "step edges not independent at step " + std::to_string(i);
    }
    return std::nullopt;
}

// Standard walks repeat a vertex at distance two on at least one side at
// every position. A defect (a_i != a_{i+2} and b_i != b_{i+2}) is repaired by
// splicing a backtrack into both walks; each splice removes the leftmost
// defect, so at most (length - 2) splices happen and the result is at most
// three times the input length.
inline WalkPair standardize_walks(const Bigraph& g, const WalkPair& input) {
    if (auto err = check_walk_pair(g, input))
        throw std::invalid_argument("standardize_walks: " + *err);
    std::vector<Vertex> a = input.walk_a, b = input.walk_b;
    std::size_t i = 0;
    while (a.size() >= 3 && i + 2 < a.size()) {
        if (a[i] == a[i + 2] || b[i] == b[i + 2]) {
            ++i;
            continue;
        }
        a.insert(a.begin() + i + 2, {a[i], a[i + 1]});
        b.insert(b.begin() + i + 2, {b[i + 2], b[i + 1]});
        i += 2;
    }
    WalkPair out{std::move(a), std::move(b)};
    if (auto err = check_walk_pair(g, out))
        throw internal_error("standardize_walks produced invalid walks: " + *err);
    return out;
}

inline bool walks_standard(const WalkPair& wp) {
    for (std::size_t i = 0; i + 2 < wp.walk_a.size(); ++i)
        if (wp.walk_a[i] != wp.walk_a[i + 2] && wp.walk_b[i] != wp.walk_b[i + 2]) return false;
    return true;
}

// ----------------------------------------------------------- invertibility

inline Vertex pair_first_vertex(const SidePair& p) { return Vertex{p.side, p.first}; }
inline Vertex pair_second_vertex(const SidePair& p) { return Vertex{p.side, p.second}; }

// Shortest step path between two pairs in the same implication class;
// deterministic BFS in id order. Returns the pair sequence including both
// endpoints, or nullopt when unreachable.
inline std::optional<std::vector<SidePair>> pair_step_path(const Bigraph& g,
                                                           const SidePair& from,
                                                           const SidePair& to) {
    PairSpace space(g);
    std::vector<int> parent(space.size(), -2);
    std::deque<int> queue{space.id(from)};
    parent[space.id(from)] = -1;
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (id == space.id(to)) break;
        for (const SidePair& q : pair_step_neighbors(g, space.pair(id))) {
            int qid = space.id(q);
            if (parent[qid] == -2) {
                parent[qid] = id;
                queue.push_back(qid);
            }
        }
    }
    if (parent[space.id(to)] == -2) return std::nullopt;
    std::vector<SidePair> path;
    for (int id = space.id(to); id != -1; id = parent[id]) path.push_back(space.pair(id));
    std::reverse(path.begin(), path.end());
    return path;
}

struct InvertiblePair {
    Vertex u;
    Vertex v;
    WalkPair walks;  // congruent (u,v)-walk and (v,u)-walk, standardized
};

// The walk pair read off a step path: first components form one walk, second
// components the other; step independence is exactly walk-pair congruence.
inline WalkPair walk_pair_from_step_path(const std::vector<SidePair>& path) {
    WalkPair wp;
    for (const SidePair& p : path) {
        wp.walk_a.push_back(pair_first_vertex(p));
        wp.walk_b.push_back(pair_second_vertex(p));
    }
    return wp;
}

// Present iff some (u,v) shares an implication class with (v,u); picks the
// lexicographically smallest such pair and returns standardized witness walks.
inline std::optional<InvertiblePair> find_invertible_pair(const Bigraph& g) {
    ImplicationPartition part = implication_partition(g);
    std::optional<SidePair> hit;
    part.space.for_each([&](const SidePair& p) {
        if (hit) return;
        if (part.class_id(p) == part.class_id(p.reversed())) hit = p;
    });
    if (!hit) return std::nullopt;
    auto path = pair_step_path(g, *hit, hit->reversed());
    if (!path)
        throw internal_error("find_invertible_pair: class members not connected by steps");
    WalkPair walks = standardize_walks(g, walk_pair_from_step_path(*path));
    return InvertiblePair{pair_first_vertex(*hit), pair_second_vertex(*hit), std::move(walks)};
}

inline bool has_invertible_pair(const ImplicationPartition& part) {
    bool found = false;
    part.space.for_each([&](const SidePair& p) {
        if (!found && part.class_id(p) == part.class_id(p.reversed())) found = true;
    });
    return found;
}

}  // namespace bigraph

#endif  // BIGRAPH_IMPLICATION_HPP
