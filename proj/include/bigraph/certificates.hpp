#ifndef BIGRAPH_CERTIFICATES_HPP
#define BIGRAPH_CERTIFICATES_HPP

// JSON serialization for verdicts and certificates, plus the independent
// verifier behind the `verify` subcommand. The schema is deliberately small
// so third parties can re-check certificates with little code:
//
//   {"class": ..., "member": ..., "certificate": {"type": ..., ...}}
//
// Orderings are 1-based index arrays; vertices appear as "x3"/"y1" labels.

#include <string>

#include <json.hpp>

#include "bigraph/recognizers.hpp"

namespace bigraph {

using nlohmann::json;

namespace detail {

inline json orderings_to_json(const OrderingPair& ord) {
    json jx = json::array(), jy = json::array();
    for (int v : ord.x_order) jx.push_back(v + 1);
    for (int v : ord.y_order) jy.push_back(v + 1);
    return json{{"x_order", jx}, {"y_order", jy}};
}

inline json vertices_to_json(const std::vector<Vertex>& vs) {
    json out = json::array();
    for (const Vertex& v : vs) out.push_back(v.label());
    return out;
}

inline json edge_to_json(const Edge& e) {
    return json::array({x_vertex(e.x).label(), y_vertex(e.y).label()});
}

inline OrderingPair orderings_from_json(const json& j) {
    OrderingPair ord;
    for (const auto& v : j.at("x_order")) ord.x_order.push_back(v.get<int>() - 1);
    for (const auto& v : j.at("y_order")) ord.y_order.push_back(v.get<int>() - 1);
    return ord;
}

inline Vertex vertex_from_json(const json& j) {
    auto v = parse_vertex_label(j.get<std::string>());
    if (!v) throw std::runtime_error("bad vertex label: " + j.get<std::string>());
    return *v;
}

inline std::vector<Vertex> vertices_from_json(const json& j) {
    std::vector<Vertex> out;
    for (const auto& e : j) out.push_back(vertex_from_json(e));
    return out;
}

inline Edge edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::runtime_error("bad edge");
    Vertex a = vertex_from_json(j[0]), b = vertex_from_json(j[1]);
    if (a.side == b.side) throw std::runtime_error("edge endpoints on one side");
    if (a.side == Side::Y) std::swap(a, b);
    return Edge{a.index, b.index};
}

}  // namespace detail

inline json certificate_to_json(const Certificate& c) {
    switch (c.kind) {
        case Certificate::Kind::SFreeOrderings: {
            json j = detail::orderings_to_json(c.orderings);
            j["type"] = "s_free_orderings";
            json arcs = json::array();
            if (c.orientation)
                for (const auto& [from, to] : c.orientation->arcs())
                    arcs.push_back(json::array({from.label(), to.label()}));
            j["orientation"] = arcs;
            return j;
        }
        case Certificate::Kind::GammaFreeOrderings: {
            json j = detail::orderings_to_json(c.orderings);
            j["type"] = "gamma_free_orderings";
            return j;
        }
        case Certificate::Kind::WeakAsteroid: {
            json edges = json::array(), walks = json::array();
            for (const Edge& e : c.asteroid.edges) edges.push_back(detail::edge_to_json(e));
            for (const auto& walk : c.asteroid.walks) walks.push_back(detail::vertices_to_json(walk));
            return json{{"type", "weak_edge_asteroid"}, {"edges", edges}, {"walks", walks}};
        }
        case Certificate::Kind::InvertiblePair: {
            const InvertiblePair& ip = *c.invertible;
            return json{{"type", "invertible_pair"},
                        {"u", ip.u.label()},
                        {"v", ip.v.label()},
                        {"walk_a", detail::vertices_to_json(ip.walks.walk_a)},
                        {"walk_b", detail::vertices_to_json(ip.walks.walk_b)}};
        }
        case Certificate::Kind::InducedCycle:
            return json{{"type", "induced_cycle"}, {"cycle", detail::vertices_to_json(c.cycle)}};
        case Certificate::Kind::PatternWitness: {
            const PatternWitness& w = *c.pattern;
            return json{{"type", "pattern_witness"},
                        {"pattern", pattern_name(w.kind)},
                        {"row_pair", json::array({w.r1 + 1, w.r2 + 1})},
                        {"col_pair", json::array({w.c1 + 1, w.c2 + 1})}};
        }
        case Certificate::Kind::Pair: {
            json parts = json::array();
            for (const Certificate& p : c.parts) parts.push_back(certificate_to_json(p));
            return json{{"type", "certificate_pair"}, {"parts", parts}};
        }
    }
    throw std::logic_error("unreachable");
}

inline json verdict_to_json(const Verdict& v) {
    return json{{"class", graph_class_name(v.graph_class)},
                {"member", v.member},
                {"certificate", certificate_to_json(v.certificate)}};
}

// Rebuilds a certificate against a concrete graph (needed to size the
// orientation grid); structural problems throw std::runtime_error.
inline Certificate certificate_from_json(const Bigraph& g, const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "s_free_orderings") {
        Certificate c;
        c.kind = Certificate::Kind::SFreeOrderings;
        c.orderings = detail::orderings_from_json(j);
        MixedOrientation o(g);
        for (const auto& arc : j.at("orientation")) {
            if (!arc.is_array() || arc.size() != 2) throw std::runtime_error("bad arc");
            Vertex from = detail::vertex_from_json(arc[0]);
            Vertex to = detail::vertex_from_json(arc[1]);
            if (from.side != to.side) throw std::runtime_error("arc endpoints on different sides");
            if (!g.valid_vertex(from) || !g.valid_vertex(to))
                throw std::runtime_error("arc vertex out of range");
            o.orient(from.side, from.index, to.index);  // throws on conflicting arcs
        }
        c.orientation = std::move(o);
        return c;
    }
    if (type == "gamma_free_orderings") {
        Certificate c;
        c.kind = Certificate::Kind::GammaFreeOrderings;
        c.orderings = detail::orderings_from_json(j);
        return c;
    }
    if (type == "weak_edge_asteroid") {
        Certificate c;
        c.kind = Certificate::Kind::WeakAsteroid;
        for (const auto& e : j.at("edges")) c.asteroid.edges.push_back(detail::edge_from_json(e));
        for (const auto& w : j.at("walks")) c.asteroid.walks.push_back(detail::vertices_from_json(w));
        return c;
    }
    if (type == "invertible_pair") {
        InvertiblePair ip;
        ip.u = detail::vertex_from_json(j.at("u"));
        ip.v = detail::vertex_from_json(j.at("v"));
        ip.walks.walk_a = detail::vertices_from_json(j.at("walk_a"));
        ip.walks.walk_b = detail::vertices_from_json(j.at("walk_b"));
        return Certificate::invertible_pair(std::move(ip));
    }
    if (type == "induced_cycle")
        return Certificate::induced_cycle(detail::vertices_from_json(j.at("cycle")));
    if (type == "pattern_witness") {
        auto kind = pattern_from_name(j.at("pattern").get<std::string>());
        if (!kind) throw std::runtime_error("unknown pattern kind");
        const auto& rp = j.at("row_pair");
        const auto& cp = j.at("col_pair");
        if (!rp.is_array() || rp.size() != 2 || !cp.is_array() || cp.size() != 2)
            throw std::runtime_error("bad pattern witness indices");
        PatternWitness w{*kind, rp[0].get<int>() - 1, rp[1].get<int>() - 1,
                         cp[0].get<int>() - 1, cp[1].get<int>() - 1};
        return Certificate::pattern_witness(w);
    }
    if (type == "certificate_pair") {
        Certificate c;
        c.kind = Certificate::Kind::Pair;
        for (const auto& p : j.at("parts")) c.parts.push_back(certificate_from_json(g, p));
        return c;
    }
    throw std::runtime_error("unknown certificate type: " + type);
}

inline Verdict verdict_from_json(const Bigraph& g, const json& j) {
    Verdict v;
    auto cls = graph_class_from_name(j.at("class").get<std::string>());
    if (!cls) throw std::runtime_error("unknown class: " + j.at("class").get<std::string>());
    v.graph_class = *cls;
    v.member = j.at("member").get<bool>();
    v.certificate = certificate_from_json(g, j.at("certificate"));
    return v;
}

// ---------------------------------------------------------------- verifier

namespace detail {

inline std::optional<std::string> verify_s_free_certificate(const Bigraph& g,
                                                            const Certificate& c) {
    if (!valid_orderings(g, c.orderings)) return std::string("orderings are not permutations");
    if (auto violation = verify_s_free(g, c.orderings))
        return "independent edges " + x_vertex(violation->u).label() + y_vertex(violation->z).label() +
               " and " + x_vertex(violation->v).label() + y_vertex(violation->w).label() +
               " cross under the orderings";
    if (c.orientation) {
        if (*c.orientation != orientation_from_orderings(g, c.orderings))
            return std::string("orientation does not match the orderings");
        if (find_t_witness(g, *c.orientation))
            return std::string("orientation contains the forbidden configuration");
        if (find_directed_cycle(*c.orientation))
            return std::string("orientation contains a directed cycle");
    }
    return std::nullopt;
}

inline std::optional<std::string> verify_gamma_free_certificate(const Bigraph& g,
                                                                const Certificate& c) {
    if (!valid_orderings(g, c.orderings)) return std::string("orderings are not permutations");
    if (find_pattern(matrix_of(g), c.orderings, PatternKind::Gamma))
        return std::string("reordered matrix contains the Gamma pattern");
    return std::nullopt;
}

inline std::optional<std::string> verify_invertible_certificate(const Bigraph& g,
                                                                const Certificate& c) {
    const InvertiblePair& ip = *c.invertible;
    if (ip.u.side != ip.v.side || ip.u == ip.v) return std::string("u, v must be distinct same-side vertices");
    if (!g.valid_vertex(ip.u) || !g.valid_vertex(ip.v)) return std::string("u or v out of range");
    if (auto err = check_walk_pair(g, ip.walks)) return err;
    const auto& a = ip.walks.walk_a;
    const auto& b = ip.walks.walk_b;
    if (a.front() != ip.u || a.back() != ip.v) return std::string("first walk does not join u to v");
    if (b.front() != ip.v || b.back() != ip.u) return std::string("second walk does not join v to u");
    return std::nullopt;
}

}  // namespace detail

// Re-runs the matching verifier for a verdict's certificate; absent when the
// certificate is accepted. Never consults the recognizer pipeline.
inline std::optional<std::string> verify_verdict(const Bigraph& g, const Verdict& v) {
    using Kind = Certificate::Kind;
    const Certificate& c = v.certificate;
    auto wrong_kind = [&]() -> std::optional<std::string> {
        return std::string("certificate kind does not match the verdict");
    };
    switch (v.graph_class) {
        case GraphClass::Cocomparability:
            if (v.member) {
                if (c.kind != Kind::SFreeOrderings) return wrong_kind();
                return detail::verify_s_free_certificate(g, c);
            }
            if (c.kind == Kind::WeakAsteroid) return verify_weak_edge_asteroid(g, c.asteroid);
            if (c.kind == Kind::InvertiblePair) return detail::verify_invertible_certificate(g, c);
            return wrong_kind();
        case GraphClass::Chordal:
            if (v.member) {
                if (c.kind != Kind::GammaFreeOrderings) return wrong_kind();
                return detail::verify_gamma_free_certificate(g, c);
            }
            if (c.kind != Kind::InducedCycle) return wrong_kind();
            return induced_cycle_holds(g, c.cycle, 6);
        case GraphClass::IntervalContainment:
            if (v.member) {
                if (c.kind != Kind::Pair || c.parts.size() != 2) return wrong_kind();
                if (c.parts[0].kind != Kind::GammaFreeOrderings ||
                    c.parts[1].kind != Kind::SFreeOrderings)
                    return wrong_kind();
                if (auto err = detail::verify_gamma_free_certificate(g, c.parts[0])) return err;
                return detail::verify_s_free_certificate(g, c.parts[1]);
            }
            if (c.kind == Kind::InducedCycle) return induced_cycle_holds(g, c.cycle, 6);
            if (c.kind == Kind::WeakAsteroid) return verify_weak_edge_asteroid(g, c.asteroid);
            if (c.kind == Kind::InvertiblePair) return detail::verify_invertible_certificate(g, c);
            return wrong_kind();
    }
    return std::string("unknown class");
}

}  // namespace bigraph

#endif  // BIGRAPH_CERTIFICATES_HPP
