#ifndef BIGRAPH_PATTERNS_HPP
#define BIGRAPH_PATTERNS_HPP

// Forbidden 2x2 submatrix engine. A bi-adjacency matrix reordered by an
// ordering pair avoids
//   Gamma = [[1,1],[1,0]]   (chordal bigraphs)
//   Slash = [[0,1],[1,0]]   (cocomparability bigraphs)
//   I2    = [[1,0],[0,1]]   (comparability bigraphs)
// iff the graph admits the corresponding vertex ordering. The S-free
// verifier below is the edge-level formulation of Slash avoidance.

#include <array>
#include <optional>

#include "bigraph/core.hpp"

namespace bigraph {

enum class PatternKind : std::uint8_t { Gamma = 0, Slash = 1, I2 = 2 };

inline const char* pattern_name(PatternKind k) {
    switch (k) {
        case PatternKind::Gamma: return "gamma";
        case PatternKind::Slash: return "slash";
        case PatternKind::I2: return "i2";
    }
    return "?";
}

inline std::optional<PatternKind> pattern_from_name(const std::string& s) {
    if (s == "gamma") return PatternKind::Gamma;
    if (s == "slash") return PatternKind::Slash;
    if (s == "i2") return PatternKind::I2;
    return std::nullopt;
}

// entries[r][c] of the fixed 2x2 pattern.
inline bool pattern_entry(PatternKind k, int r, int c) {
    static constexpr std::array<std::array<bool, 2>, 2> gamma{{{true, true}, {true, false}}};
    static constexpr std::array<std::array<bool, 2>, 2> slash{{{false, true}, {true, false}}};
    static constexpr std::array<std::array<bool, 2>, 2> i2{{{true, false}, {false, true}}};
    switch (k) {
        case PatternKind::Gamma: return gamma[r][c];
        case PatternKind::Slash: return slash[r][c];
        case PatternKind::I2: return i2[r][c];
    }
    return false;
}

// Row/column indices are original matrix indices; r1 comes before r2 in the
// row order and c1 before c2 in the column order.
struct PatternWitness {
    PatternKind kind = PatternKind::Slash;
    int r1 = 0, r2 = 0;
    int c1 = 0, c2 = 0;

    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// First occurrence of the pattern in m reordered by ord, scanning ordered row
// position pairs lexicographically, then column position pairs.
inline std::optional<PatternWitness> find_pattern(const BiAdjacencyMatrix& m,
                                                  const OrderingPair& ord,
                                                  PatternKind kind) {
    if (static_cast<int>(ord.x_order.size()) != m.rows ||
        static_cast<int>(ord.y_order.size()) != m.cols)
        throw std::invalid_argument("find_pattern: ordering dimensions do not match matrix");
    const bool p00 = pattern_entry(kind, 0, 0), p01 = pattern_entry(kind, 0, 1);
    const bool p10 = pattern_entry(kind, 1, 0), p11 = pattern_entry(kind, 1, 1);
    for (int pr1 = 0; pr1 < m.rows; ++pr1) {
        const int r1 = ord.x_order[pr1];
        for (int pr2 = pr1 + 1; pr2 < m.rows; ++pr2) {
            const int r2 = ord.x_order[pr2];
            for (int pc1 = 0; pc1 < m.cols; ++pc1) {
                const int c1 = ord.y_order[pc1];
                if (m.at(r1, c1) != p00 || m.at(r2, c1) != p10) continue;
                for (int pc2 = pc1 + 1; pc2 < m.cols; ++pc2) {
                    const int c2 = ord.y_order[pc2];
                    if (m.at(r1, c2) == p01 && m.at(r2, c2) == p11)
                        return PatternWitness{kind, r1, r2, c1, c2};
                }
            }
        }
    }
    return std::nullopt;
}

// Re-reads the four addressed entries; true when they reproduce the pattern.
inline bool pattern_witness_holds(const BiAdjacencyMatrix& m, const PatternWitness& w) {
    if (w.r1 < 0 || w.r1 >= m.rows || w.r2 < 0 || w.r2 >= m.rows) return false;
    if (w.c1 < 0 || w.c1 >= m.cols || w.c2 < 0 || w.c2 >= m.cols) return false;
    if (w.r1 == w.r2 || w.c1 == w.c2) return false;
    return m.at(w.r1, w.c1) == pattern_entry(w.kind, 0, 0) &&
           m.at(w.r1, w.c2) == pattern_entry(w.kind, 0, 1) &&
           m.at(w.r2, w.c1) == pattern_entry(w.kind, 1, 0) &&
           m.at(w.r2, w.c2) == pattern_entry(w.kind, 1, 1);
}

// u before v in X, w before z in Y, uz and vw edges, uw and vz non-edges;
// the edges uz, vw are independent and cross.
struct SViolation {
    int u = 0, v = 0;  // X indices, u before v
    int w = 0, z = 0;  // Y indices, w before z

    friend bool operator==(const SViolation&, const SViolation&) = default;
};

// Absent iff no two independent edges cross under ord. Scans edge pairs in
// canonical order and normalizes the first crossing pair.
inline std::optional<SViolation> verify_s_free(const Bigraph& g, const OrderingPair& ord) {
    if (!valid_orderings(g, ord))
        throw std::invalid_argument("verify_s_free: invalid ordering pair");
    OrderingPositions pos(ord);
    const auto& es = g.edges();
    const int m = g.edge_count();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!edges_independent_unchecked(g, es[i], es[j])) continue;
            if (!edges_cross(pos, es[i], es[j])) continue;
            Edge a = es[i], b = es[j];  // a = uz, b = vw with u before v
            if (pos.x_pos[a.x] > pos.x_pos[b.x]) std::swap(a, b);
            return SViolation{a.x, b.x, b.y, a.y};
        }
    }
    return std::nullopt;
}

inline bool s_violation_holds(const Bigraph& g, const OrderingPair& ord, const SViolation& v) {
    if (v.u < 0 || v.u >= g.x_count() || v.v < 0 || v.v >= g.x_count()) return false;
    if (v.w < 0 || v.w >= g.y_count() || v.z < 0 || v.z >= g.y_count()) return false;
    if (v.u == v.v || v.w == v.z) return false;
    OrderingPositions pos(ord);
    if (pos.x_pos[v.u] >= pos.x_pos[v.v]) return false;
    if (pos.y_pos[v.w] >= pos.y_pos[v.z]) return false;
    return g.has_edge(v.u, v.z) && g.has_edge(v.v, v.w) &&
           !g.has_edge(v.u, v.w) && !g.has_edge(v.v, v.z);
}

// Permutes rows by x_order and columns by y_order.
inline BiAdjacencyMatrix reorder(const BiAdjacencyMatrix& m, const OrderingPair& ord) {
    if (static_cast<int>(ord.x_order.size()) != m.rows ||
        static_cast<int>(ord.y_order.size()) != m.cols)
        throw std::invalid_argument("reorder: ordering dimensions do not match matrix");
    BiAdjacencyMatrix out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            out.set(r, c, m.at(ord.x_order[r], ord.y_order[c]));
    return out;
}

// Reversing the rows of a matrix without I2 yields one without Slash.
inline OrderingPair reverse_rows(OrderingPair ord) {
    std::reverse(ord.x_order.begin(), ord.x_order.end());
    return ord;
}

}  // namespace bigraph

#endif  // BIGRAPH_PATTERNS_HPP
