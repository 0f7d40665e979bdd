#include <catch2/catch_amalgamated.hpp>

#include "bigraph/certificates.hpp"
#include "test_helpers.hpp"

using namespace bigraph;
using bigraph::testing::all_bigraphs;
using bigraph::testing::two_k2;

namespace {

Verdict recognize(const Bigraph& g, GraphClass cls) {
    switch (cls) {
        case GraphClass::Cocomparability: return recognize_cocomparability(g);
        case GraphClass::Chordal: return recognize_chordal_bigraph(g);
        case GraphClass::IntervalContainment: return recognize_interval_containment(g);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("verdicts round-trip through JSON") {
    for (GraphClass cls : {GraphClass::Cocomparability, GraphClass::Chordal,
                           GraphClass::IntervalContainment}) {
        for (const Bigraph& g : {two_k2(), even_cycle(6), even_cycle(8), complete_bigraph(2, 3)}) {
            Verdict v = recognize(g, cls);
            json j = verdict_to_json(v);
            Verdict back = verdict_from_json(g, json::parse(j.dump()));
            CHECK(verdict_to_json(back) == j);
            CHECK_FALSE(verify_verdict(g, back).has_value());
        }
    }
}

TEST_CASE("emitted certificates verify on the small suite") {
    int checked = 0;
    for (const Bigraph& g : all_bigraphs(3, 3)) {
        Verdict v = recognize_cocomparability(g);
        CHECK_FALSE(verify_verdict(g, v).has_value());
        Verdict c = recognize_chordal_bigraph(g);
        CHECK_FALSE(verify_verdict(g, c).has_value());
        Verdict ic = recognize_interval_containment(g);
        CHECK_FALSE(verify_verdict(g, ic).has_value());
        ++checked;
    }
    CHECK(checked == 512);
}

TEST_CASE("verification reports the expected JSON shape") {
    Verdict v = recognize_cocomparability(even_cycle(6));
    json j = verdict_to_json(v);
    CHECK(j["class"] == "cocomparability");
    CHECK(j["member"] == true);
    CHECK(j["certificate"]["type"] == "s_free_orderings");
    CHECK(j["certificate"]["x_order"].size() == 3);
    CHECK(j["certificate"]["y_order"].size() == 3);
    CHECK(j["certificate"]["orientation"].is_array());

    Verdict no = recognize_cocomparability(even_cycle(8));
    json jn = verdict_to_json(no);
    CHECK(jn["certificate"]["type"] == "weak_edge_asteroid");
    CHECK(jn["certificate"]["edges"].is_array());
    CHECK(jn["certificate"]["walks"].is_array());
    // labels are 1-based side-tagged strings
    CHECK(jn["certificate"]["edges"][0][0].get<std::string>().front() == 'x');
}

TEST_CASE("tampered certificates are rejected") {
    Bigraph c6 = even_cycle(6);
    Verdict v = recognize_cocomparability(c6);
    json j = verdict_to_json(v);

    {
        json bad = j;
        std::swap(bad["certificate"]["y_order"][0], bad["certificate"]["y_order"][1]);
        Verdict parsed = verdict_from_json(c6, bad);
        CHECK(verify_verdict(c6, parsed).has_value());
    }
    {
        json bad = j;
        bad["certificate"]["x_order"][0] = 3;  // duplicate index
        bad["certificate"]["x_order"][1] = 3;
        Verdict parsed = verdict_from_json(c6, bad);
        CHECK(verify_verdict(c6, parsed).has_value());
    }

    Bigraph c8 = even_cycle(8);
    Verdict no = recognize_cocomparability(c8);
    json jn = verdict_to_json(no);
    {
        json bad = jn;
        bad["certificate"]["walks"][0][0] = "y1";
        Verdict parsed = verdict_from_json(c8, bad);
        CHECK(verify_verdict(c8, parsed).has_value());
    }
    {
        json bad = jn;
        bad["member"] = true;  // wrong certificate kind for a member claim
        Verdict parsed = verdict_from_json(c8, bad);
        CHECK(verify_verdict(c8, parsed).has_value());
    }
}

TEST_CASE("malformed certificates fail to parse") {
    Bigraph g = two_k2();
    CHECK_THROWS(verdict_from_json(g, json::parse(R"({"class":"nope","member":true,
        "certificate":{"type":"induced_cycle","cycle":[]}})")));
    CHECK_THROWS(verdict_from_json(g, json::parse(R"({"class":"chordal","member":true,
        "certificate":{"type":"mystery"}})")));
    CHECK_THROWS(verdict_from_json(g, json::parse(R"({"class":"chordal","member":false,
        "certificate":{"type":"induced_cycle","cycle":["q9"]}})")));
}

TEST_CASE("invertible pair certificates verify") {
    Bigraph c8 = even_cycle(8);
    auto ip = find_invertible_pair(c8);
    REQUIRE(ip.has_value());
    Verdict v{GraphClass::Cocomparability, false, Certificate::invertible_pair(*ip)};
    CHECK_FALSE(verify_verdict(c8, v).has_value());

    json j = verdict_to_json(v);
    Verdict back = verdict_from_json(c8, j);
    CHECK_FALSE(verify_verdict(c8, back).has_value());

    json bad = j;
    bad["certificate"]["u"] = bad["certificate"]["v"];
    CHECK(verify_verdict(c8, verdict_from_json(c8, bad)).has_value());
}

TEST_CASE("pattern witnesses round-trip") {
    Bigraph m = two_k2();
    auto w = find_pattern(matrix_of(m), OrderingPair{{0, 1}, {1, 0}}, PatternKind::Slash);
    REQUIRE(w.has_value());
    Certificate c = Certificate::pattern_witness(*w);
    json j = certificate_to_json(c);
    CHECK(j["type"] == "pattern_witness");
    Certificate back = certificate_from_json(m, j);
    REQUIRE(back.pattern.has_value());
    CHECK(*back.pattern == *w);
    CHECK(pattern_witness_holds(matrix_of(m), *back.pattern));
}
