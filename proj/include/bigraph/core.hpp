#ifndef BIGRAPH_CORE_HPP
#define BIGRAPH_CORE_HPP

// Bipartite graph data model with a fixed bipartition (X, Y), text formats,
// instance generators, and the basic edge predicates (independence, crossing)
// that the rest of the toolkit builds on.
//
// Conventions used throughout:
//   - vertex indices are 0-based internally, 1-based in the text formats
//   - the canonical edge order is lexicographic by (x, y)
//   - all types are immutable values after construction

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigraph {

// ---------------------------------------------------------------- errors

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configured size/work bound was exceeded (exhaustive searches only).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A self-check on a pipeline's own output failed. Never a verdict.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------- vertices

enum class Side : std::uint8_t { X = 0, Y = 1 };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

struct Vertex {
    Side side = Side::X;
    int index = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;

    // "x3" / "y1" style, 1-based, as used in the text formats.
    std::string label() const {
        return (side == Side::X ? "x" : "y") + std::to_string(index + 1);
    }
};

inline Vertex x_vertex(int i) { return Vertex{Side::X, i}; }
inline Vertex y_vertex(int i) { return Vertex{Side::Y, i}; }

// Parses "x3"/"y1" labels; returns nullopt on malformed input.
inline std::optional<Vertex> parse_vertex_label(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y')) return std::nullopt;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    long v = std::strtol(s.c_str() + 1, nullptr, 10);
    if (v < 1) return std::nullopt;
    return Vertex{s[0] == 'x' ? Side::X : Side::Y, static_cast<int>(v - 1)};
}

struct Edge {
    int x = 0;  // index into X
    int y = 0;  // index into Y

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// ---------------------------------------------------------------- Bigraph

class Bigraph {
public:
    Bigraph() = default;

    // Validates ranges, rejects duplicates, stores edges in canonical order.
    Bigraph(int x_count, int y_count, std::vector<Edge> edges)
        : x_count_(x_count), y_count_(y_count), edges_(std::move(edges)) {
        if (x_count_ < 0 || y_count_ < 0)
            throw std::invalid_argument("negative side size");
        std::sort(edges_.begin(), edges_.end());
        adj_.assign(static_cast<std::size_t>(x_count_) * y_count_, 0);
        const Edge* prev = nullptr;
        for (const Edge& e : edges_) {
            if (e.x < 0 || e.x >= x_count_ || e.y < 0 || e.y >= y_count_)
                throw std::invalid_argument("edge index out of range");
            if (prev && *prev == e)
                throw std::invalid_argument("duplicate edge");
            adj_[static_cast<std::size_t>(e.x) * y_count_ + e.y] = 1;
            prev = &e;
        }
    }

    int x_count() const { return x_count_; }
    int y_count() const { return y_count_; }
    int side_count(Side s) const { return s == Side::X ? x_count_ : y_count_; }
    int vertex_count() const { return x_count_ + y_count_; }

    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int x, int y) const {
        return adj_[static_cast<std::size_t>(x) * y_count_ + y] != 0;
    }
    bool has_edge(Edge e) const { return has_edge(e.x, e.y); }

    // Cross-side adjacency; same-side vertices are never adjacent.
    bool adjacent(Vertex a, Vertex b) const {
        if (a.side == b.side) return false;
        return a.side == Side::X ? has_edge(a.index, b.index)
                                 : has_edge(b.index, a.index);
    }

    bool valid_vertex(Vertex v) const {
        return v.index >= 0 && v.index < side_count(v.side);
    }

    // Position in the canonical (x, y)-lexicographic edge order.
    std::optional<int> edge_index(Edge e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<int>(it - edges_.begin());
    }

    friend bool operator==(const Bigraph&, const Bigraph&) = default;

private:
    int x_count_ = 0;
    int y_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
};

// ------------------------------------------------------------- orderings

// A permutation of each side; x_order[p] is the vertex at position p.
struct OrderingPair {
    std::vector<int> x_order;
    std::vector<int> y_order;

    friend bool operator==(const OrderingPair&, const OrderingPair&) = default;
};

inline bool is_permutation_of_range(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<std::uint8_t> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline bool valid_orderings(const Bigraph& g, const OrderingPair& ord) {
    return is_permutation_of_range(ord.x_order, g.x_count()) &&
           is_permutation_of_range(ord.y_order, g.y_count());
}

inline OrderingPair identity_orderings(const Bigraph& g) {
    OrderingPair ord;
    ord.x_order.resize(g.x_count());
    ord.y_order.resize(g.y_count());
    for (int i = 0; i < g.x_count(); ++i) ord.x_order[i] = i;
    for (int i = 0; i < g.y_count(); ++i) ord.y_order[i] = i;
    return ord;
}

// Inverse permutations: position of each vertex in its side's order.
struct OrderingPositions {
    std::vector<int> x_pos;
    std::vector<int> y_pos;

    OrderingPositions() = default;
    explicit OrderingPositions(const OrderingPair& ord) {
        x_pos.resize(ord.x_order.size());
        y_pos.resize(ord.y_order.size());
        for (std::size_t p = 0; p < ord.x_order.size(); ++p) x_pos[ord.x_order[p]] = static_cast<int>(p);
        for (std::size_t p = 0; p < ord.y_order.size(); ++p) y_pos[ord.y_order[p]] = static_cast<int>(p);
    }
};

// --------------------------------------------------------------- matrices

struct BiAdjacencyMatrix {
    int rows = 0;  // = x_count
    int cols = 0;  // = y_count
    std::vector<std::uint8_t> bits;

    BiAdjacencyMatrix() = default;
    BiAdjacencyMatrix(int r, int c) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0) {}

    bool at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c] != 0; }
    void set(int r, int c, bool v) { bits[static_cast<std::size_t>(r) * cols + c] = v ? 1 : 0; }

    friend bool operator==(const BiAdjacencyMatrix&, const BiAdjacencyMatrix&) = default;
};

inline BiAdjacencyMatrix matrix_of(const Bigraph& g) {
    BiAdjacencyMatrix m(g.x_count(), g.y_count());
    for (const Edge& e : g.edges()) m.set(e.x, e.y, true);
    return m;
}

inline Bigraph bigraph_of(const BiAdjacencyMatrix& m) {
    std::vector<Edge> edges;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c)) edges.push_back({r, c});
    return Bigraph(m.rows, m.cols, std::move(edges));
}

// ------------------------------------------------------------ general graph

// Plain undirected graph, used for independence graphs I(G) and the
// transitive-orientation oracle.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographic
    std::vector<std::uint8_t> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_) * n_, 0) {}

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop");
        if (u > v) std::swap(u, v);
        if (adjacent(u, v)) return;
        edges.push_back({u, v});
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
    }

    bool adjacent(int u, int v) const {
        return adj[static_cast<std::size_t>(u) * n + v] != 0;
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    void canonicalize() { std::sort(edges.begin(), edges.end()); }
};

// ------------------------------------------------------------- predicates

inline void require_edge(const Bigraph& g, Edge e, const char* who) {
    if (!g.has_edge(e))
        throw std::invalid_argument(std::string(who) + ": edge (" +
                                    std::to_string(e.x + 1) + "," +
                                    std::to_string(e.y + 1) + ") not in graph");
}

// Edges xy, x'y' are independent when they are disjoint and neither cross
// pair xy', x'y is an edge.
inline bool edges_independent(const Bigraph& g, Edge e1, Edge e2) {
    require_edge(g, e1, "edges_independent");
    require_edge(g, e2, "edges_independent");
    if (e1.x == e2.x || e1.y == e2.y) return false;
    return !g.has_edge(e1.x, e2.y) && !g.has_edge(e2.x, e1.y);
}

// Raw form without membership validation, for hot loops.
inline bool edges_independent_unchecked(const Bigraph& g, Edge e1, Edge e2) {
    if (e1.x == e2.x || e1.y == e2.y) return false;
    return !g.has_edge(e1.x, e2.y) && !g.has_edge(e2.x, e1.y);
}

// Under (prec_X, prec_Y): xy and x'y' cross when the x-order of their X ends
// is opposite to the y-order of the corresponding Y ends. Crossing is defined
// as false for edges sharing an endpoint.
inline bool edges_cross(const OrderingPositions& pos, Edge e1, Edge e2) {
    if (e1.x == e2.x || e1.y == e2.y) return false;
    return (pos.x_pos[e1.x] < pos.x_pos[e2.x]) != (pos.y_pos[e1.y] < pos.y_pos[e2.y]);
}

inline bool edges_cross(const Bigraph& g, const OrderingPair& ord, Edge e1, Edge e2) {
    (void)g;
    return edges_cross(OrderingPositions(ord), e1, e2);
}

// ------------------------------------------------------------- complement

// Flips exactly the X-Y pairs; involutive.
inline Bigraph bipartite_complement(const Bigraph& g) {
    std::vector<Edge> edges;
    for (int x = 0; x < g.x_count(); ++x)
        for (int y = 0; y < g.y_count(); ++y)
            if (!g.has_edge(x, y)) edges.push_back({x, y});
    return Bigraph(g.x_count(), g.y_count(), std::move(edges));
}

// Vertex i of I(G) is the i-th edge of g in canonical order; two edge-vertices
// are adjacent just if the edges are independent.
inline Graph independence_graph(const Bigraph& g) {
    Graph h(g.edge_count());
    const auto& es = g.edges();
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (edges_independent_unchecked(g, es[i], es[j])) h.add_edge(i, j);
    h.canonicalize();
    return h;
}

// ------------------------------------------------------------- generators

// C_n with X = {x1..x_{n/2}}, Y = {y1..y_{n/2}}, cycle x1 y1 x2 y2 ... x_{n/2} y_{n/2} x1.
inline Bigraph even_cycle(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("even_cycle: length must be even and at least 4");
    int half = n / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < half; ++i) {
        edges.push_back({i, i});
        edges.push_back({(i + 1) % half, i});
    }
    return Bigraph(half, half, std::move(edges));
}

inline Bigraph complete_bigraph(int x, int y) {
    std::vector<Edge> edges;
    for (int i = 0; i < x; ++i)
        for (int j = 0; j < y; ++j) edges.push_back({i, j});
    return Bigraph(x, y, std::move(edges));
}

// Path on n vertices x1 y1 x2 y2 ..., starting in X.
inline Bigraph path_bigraph(int n) {
    if (n < 1) throw std::invalid_argument("path_bigraph: need at least one vertex");
    int x = (n + 1) / 2, y = n / 2;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        // vertex i is x_{i/2} when even, y_{i/2} when odd
        if (i % 2 == 0)
            edges.push_back({i / 2, i / 2});
        else
            edges.push_back({i / 2 + 1, i / 2});
    }
    return Bigraph(x, y, std::move(edges));
}

// Reproducible from seed: cells sampled row-major with a fixed generator.
inline Bigraph random_bigraph(int x, int y, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_bigraph: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < x; ++i)
        for (int j = 0; j < y; ++j)
            if (dist(rng) < p) edges.push_back({i, j});
    return Bigraph(x, y, std::move(edges));
}

// ------------------------------------------------------------ text formats

enum class TextFormat { Matrix, EdgeList };

namespace detail {

inline bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next line that is not blank or a '#' comment; false at EOF.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!comment_or_blank(line)) {
                out = line;
                return true;
            }
        }
        return false;
    }
};

}  // namespace detail

// Matrix format: header "R C", then R rows of C characters from {0,1}.
// Edge-list format: header "bigraph NX NY", then lines "e i j", 1-based.
// '#' starts a comment; blank lines are ignored.
inline Bigraph parse_bigraph(std::istream& in, std::optional<TextFormat> format = std::nullopt) {
    detail::LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw parse_error(reader.line_no + 1, "empty input");

    std::istringstream header(line);
    std::string first;
    header >> first;

    bool edge_list = false;
    if (format.has_value())
        edge_list = *format == TextFormat::EdgeList;
    else
        edge_list = first == "bigraph";

    if (edge_list) {
        if (first != "bigraph")
            throw parse_error(reader.line_no, "expected header \"bigraph NX NY\"");
        long long nx = -1, ny = -1;
        std::string extra;
        if (!(header >> nx >> ny) || (header >> extra) || nx < 0 || ny < 0)
            throw parse_error(reader.line_no, "malformed header \"bigraph NX NY\"");
        std::vector<Edge> edges;
        while (reader.next(line)) {
            std::istringstream ls(line);
            std::string tag;
            ls >> tag;
            if (tag != "e") throw parse_error(reader.line_no, "expected edge line \"e i j\"");
            long long i = 0, j = 0;
            if (!(ls >> i >> j) || (ls >> extra))
                throw parse_error(reader.line_no, "malformed edge line \"e i j\"");
            if (i < 1 || i > nx || j < 1 || j > ny)
                throw parse_error(reader.line_no, "edge index out of range");
            Edge e{static_cast<int>(i - 1), static_cast<int>(j - 1)};
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
                throw parse_error(reader.line_no, "duplicate edge");
            edges.push_back(e);
        }
        return Bigraph(static_cast<int>(nx), static_cast<int>(ny), std::move(edges));
    }

    long long rows = -1, cols = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> rows >> cols) || (hs >> extra) || rows < 0 || cols < 0)
            throw parse_error(reader.line_no, "malformed header \"R C\"");
    }
    std::vector<Edge> edges;
    for (long long r = 0; r < rows; ++r) {
        if (!reader.next(line))
            throw parse_error(reader.line_no + 1, "unexpected end of input: expected " +
                                                      std::to_string(rows) + " matrix rows");
        std::string row = line;
        while (!row.empty() && std::isspace(static_cast<unsigned char>(row.back()))) row.pop_back();
        std::size_t start = 0;
        while (start < row.size() && std::isspace(static_cast<unsigned char>(row[start]))) ++start;
        row = row.substr(start);
        if (static_cast<long long>(row.size()) != cols)
            throw parse_error(reader.line_no, "expected " + std::to_string(cols) +
                                                  " entries, got " + std::to_string(row.size()));
        for (long long c = 0; c < cols; ++c) {
            if (row[c] == '1')
                edges.push_back({static_cast<int>(r), static_cast<int>(c)});
            else if (row[c] != '0')
                throw parse_error(reader.line_no, std::string("non-binary entry '") + row[c] + "'");
        }
    }
    if (reader.next(line)) throw parse_error(reader.line_no, "trailing content after matrix rows");
    return Bigraph(static_cast<int>(rows), static_cast<int>(cols), std::move(edges));
}

inline Bigraph parse_bigraph(const std::string& text, std::optional<TextFormat> format = std::nullopt) {
    std::istringstream in(text);
    return parse_bigraph(in, format);
}

inline std::string serialize_matrix(const Bigraph& g) {
    std::string out = std::to_string(g.x_count()) + " " + std::to_string(g.y_count()) + "\n";
    for (int r = 0; r < g.x_count(); ++r) {
        for (int c = 0; c < g.y_count(); ++c) out += g.has_edge(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline std::string serialize_edge_list(const Bigraph& g) {
    std::string out = "bigraph " + std::to_string(g.x_count()) + " " + std::to_string(g.y_count()) + "\n";
    for (const Edge& e : g.edges())
        out += "e " + std::to_string(e.x + 1) + " " + std::to_string(e.y + 1) + "\n";
    return out;
}

inline std::string serialize_bigraph(const Bigraph& g, TextFormat format) {
    return format == TextFormat::Matrix ? serialize_matrix(g) : serialize_edge_list(g);
}

}  // namespace bigraph

#endif  // BIGRAPH_CORE_HPP
