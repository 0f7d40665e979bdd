// Command-line front end.
//
//   bigraph recognize --class CLASS [--input FILE] [--format matrix|edges]
//                     [--certificate OUT.json]
//   bigraph verify    [--input FILE] --certificate CERT.json
//   bigraph oracle    [--input FILE] --patterns slash|gamma|i2[,...]
//   bigraph harness   [--input FILE]
//   bigraph gen       --family cycle|complete|random [params] [--out FILE]
//
// Graphs are read from standard input when --input is absent. Exit codes:
// 0 member/verified, 1 non-member/refuted, 2 usage or I/O error, 3 internal
// guard failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bigraph/bigraph.hpp"

namespace {

using namespace bigraph;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFault = 3;

struct Options {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

Options parse_options(int argc, char** argv, int start) {
    Options opts;
    for (int i = start; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--", 0) != 0) throw std::runtime_error("unexpected argument: " + arg);
        if (i + 1 >= argc) throw std::runtime_error("missing value for " + arg);
        opts.values[arg.substr(2)] = argv[++i];
    }
    return opts;
}

Bigraph read_graph(const Options& opts) {
    std::optional<TextFormat> format;
    if (opts.has("format")) {
        std::string f = opts.get("format");
        if (f == "matrix")
            format = TextFormat::Matrix;
        else if (f == "edges")
            format = TextFormat::EdgeList;
        else
            throw std::runtime_error("unknown format: " + f);
    }
    if (opts.has("input")) {
        std::ifstream in(opts.get("input"));
        if (!in) throw std::runtime_error("cannot open " + opts.get("input"));
        return parse_bigraph(in, format);
    }
    return parse_bigraph(std::cin, format);
}

int cmd_recognize(const Options& opts) {
    auto cls = graph_class_from_name(opts.get("class"));
    if (!cls) throw std::runtime_error("unknown or missing --class");
    Bigraph g = read_graph(opts);
    OracleBudget budget = OracleBudget::from_env();

    Verdict verdict;
    switch (*cls) {
        case GraphClass::Cocomparability: verdict = recognize_cocomparability(g); break;
        case GraphClass::Chordal: verdict = recognize_chordal_bigraph(g, budget); break;
        case GraphClass::IntervalContainment:
            verdict = recognize_interval_containment(g, budget);
            break;
    }
    if (auto err = verify_verdict(g, verdict))
        throw internal_error("emitted certificate failed re-verification: " + *err);

    if (opts.has("certificate")) {
        std::ofstream out(opts.get("certificate"));
        if (!out) throw std::runtime_error("cannot write " + opts.get("certificate"));
        out << verdict_to_json(verdict).dump(2) << "\n";
    }
    std::cout << graph_class_name(verdict.graph_class) << ": "
              << (verdict.member ? "member" : "non-member") << "\n";
    std::cout << verdict_to_json(verdict)["certificate"].dump() << "\n";
    return verdict.member ? kExitYes : kExitNo;
}

int cmd_verify(const Options& opts) {
    if (!opts.has("certificate")) throw std::runtime_error("missing --certificate");
    Bigraph g = read_graph(opts);
    std::ifstream in(opts.get("certificate"));
    if (!in) throw std::runtime_error("cannot open " + opts.get("certificate"));
    json j;
    in >> j;

    Verdict verdict;
    try {
        verdict = verdict_from_json(g, j);
    } catch (const std::exception& e) {
        std::cout << "refuted: malformed certificate: " << e.what() << "\n";
        return kExitNo;
    }
    if (auto err = verify_verdict(g, verdict)) {
        std::cout << "refuted: " << *err << "\n";
        return kExitNo;
    }
    std::cout << "verified: " << graph_class_name(verdict.graph_class) << " "
              << (verdict.member ? "member" : "non-member") << " certificate\n";
    return kExitYes;
}

int cmd_oracle(const Options& opts) {
    if (!opts.has("patterns")) throw std::runtime_error("missing --patterns");
    std::set<PatternKind> kinds;
    std::stringstream ss(opts.get("patterns"));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto kind = pattern_from_name(item);
        if (!kind) throw std::runtime_error("unknown pattern: " + item);
        kinds.insert(*kind);
    }
    if (kinds.empty()) throw std::runtime_error("empty pattern list");
    Bigraph g = read_graph(opts);
    auto ord = oracle_orderings(g, kinds, OracleBudget::from_env());
    if (!ord) {
        std::cout << "no ordering pair avoids the given patterns\n";
        return kExitNo;
    }
    json jx = json::array(), jy = json::array();
    for (int v : ord->x_order) jx.push_back(v + 1);
    for (int v : ord->y_order) jy.push_back(v + 1);
    std::cout << json{{"x_order", jx}, {"y_order", jy}}.dump() << "\n";
    return kExitYes;
}

int cmd_harness(const Options& opts) {
    Bigraph g = read_graph(opts);
    HarnessReport report = equivalence_harness(g, OracleBudget::from_env());
    json statements = json::array();
    for (const auto& st : report.statements) {
        json js{{"name", st.name}};
        if (st.value)
            js["value"] = *st.value;
        else
            js["value"] = nullptr;
        if (!st.note.empty()) js["note"] = st.note;
        statements.push_back(js);
        std::cout << st.name << ": " << (st.value ? (*st.value ? "true" : "false") : "skipped");
        if (!st.note.empty()) std::cout << "  [" << st.note << "]";
        std::cout << "\n";
    }
    json summary{{"statements", statements},
                 {"consistent", report.consistent}};
    if (report.consensus) summary["consensus"] = *report.consensus;
    std::cout << summary.dump() << "\n";
    if (!report.consistent) {
        std::cerr << "statement disagreement detected\n";
        return kExitFault;
    }
    if (!report.consensus) {
        std::cerr << "no statement could be computed\n";
        return kExitFault;
    }
    return *report.consensus ? kExitYes : kExitNo;
}

int cmd_gen(const Options& opts) {
    const std::string family = opts.get("family");
    Bigraph g;
    if (family == "cycle") {
        if (!opts.has("n")) throw std::runtime_error("cycle needs --n LENGTH");
        g = even_cycle(std::stoi(opts.get("n")));
    } else if (family == "complete") {
        if (!opts.has("x") || !opts.has("y")) throw std::runtime_error("complete needs --x and --y");
        g = complete_bigraph(std::stoi(opts.get("x")), std::stoi(opts.get("y")));
    } else if (family == "random") {
        if (!opts.has("x") || !opts.has("y") || !opts.has("p"))
            throw std::runtime_error("random needs --x, --y, --p [--seed]");
        g = random_bigraph(std::stoi(opts.get("x")), std::stoi(opts.get("y")),
                           std::stod(opts.get("p")),
                           opts.has("seed") ? std::stoull(opts.get("seed")) : 1);
    } else {
        throw std::runtime_error("unknown or missing --family (cycle|complete|random)");
    }
    TextFormat format = opts.get("format", "matrix") == "edges" ? TextFormat::EdgeList
                                                                : TextFormat::Matrix;
    std::string text = serialize_bigraph(g, format);
    if (opts.has("out")) {
        std::ofstream out(opts.get("out"));
        if (!out) throw std::runtime_error("cannot write " + opts.get("out"));
        out << text;
    } else {
        std::cout << text;
    }
    return kExitYes;
}

void usage(std::ostream& os) {
    os << "usage: bigraph <recognize|verify|oracle|harness|gen> [options]\n"
          "  recognize --class cocomparability|chordal|interval-containment\n"
          "            [--input FILE] [--format matrix|edges] [--certificate OUT.json]\n"
          "  verify    [--input FILE] --certificate CERT.json\n"
          "  oracle    [--input FILE] --patterns slash|gamma|i2[,...]\n"
          "  harness   [--input FILE]\n"
          "  gen       --family cycle|complete|random [--n N] [--x X --y Y]\n"
          "            [--p P --seed S] [--format matrix|edges] [--out FILE]\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(std::cerr);
        return kExitUsage;
    }
    std::string command = argv[1];
    try {
        Options opts = parse_options(argc, argv, 2);
        if (command == "recognize") return cmd_recognize(opts);
        if (command == "verify") return cmd_verify(opts);
        if (command == "oracle") return cmd_oracle(opts);
        if (command == "harness") return cmd_harness(opts);
        if (command == "gen") return cmd_gen(opts);
        usage(std::cerr);
        return kExitUsage;
    } catch (const bigraph::internal_error& e) {
        std::cerr << "internal guard failure: " << e.what() << "\n";
        return kExitFault;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
