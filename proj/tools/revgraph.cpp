// Command-line driver for the revgraph library.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "revgraph/io/dot.hpp"
#include "revgraph/io/json.hpp"
#include "revgraph/revgraph.hpp"

namespace rg = revgraph;
using rg::io::json;

namespace {

/// An argument naming a readable file is replaced by the file's contents.
std::string load(const std::string& arg) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg);
    if (!in) throw rg::Error("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw rg::Error("cannot write '" + path + "'");
    out << text;
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

void print_report(std::ostream& os, const rg::DistanceReport& r, const std::string& indent = "") {
    os << indent << "permutation " << to_string(r.permutation) << '\n'
       << indent << "n " << r.n() << '\n'
       << indent << "cycles " << r.cycles << '\n'
       << indent << "lower_bound " << r.lower_bound << '\n'
       << indent << "exact " << (r.exact ? std::to_string(*r.exact) : "unknown") << '\n'
       << indent << "method " << to_string(r.method) << '\n';
}

std::string set_text(const rg::SetSystem& d, rg::Subset x) { return "{" + join(d.labels_of(x), ",") + "}"; }

struct Options {
    bool json = false;
    std::string dot;
    bool both = false;
    std::size_t oracle_cap = 0;
    std::string policy = "auto";
    std::uint64_t seed = 1;
};

int run_distance(const std::string& input, const Options& o) {
    rg::DistanceOptions opt;
    opt.policy = rg::parse_policy(o.policy);
    opt.both_orientations = o.both;
    if (o.oracle_cap) opt.oracle_cap = o.oracle_cap;
    const auto r = rg::reversal_distance(rg::parse_permutation(load(input)), opt);
    if (o.json) {
        std::cout << rg::io::to_json(r).dump(2) << '\n';
        return 0;
    }
    print_report(std::cout, r);
    if (!r.orientations.empty()) {
        std::cout << "forward:\n";
        print_report(std::cout, r.orientations[0], "  ");
        std::cout << "reverse complement:\n";
        print_report(std::cout, r.orientations[1], "  ");
        const auto best = r.best_exact();
        std::cout << "best_exact " << (best ? std::to_string(*best) : "unknown") << '\n';
    }
    return 0;
}

int run_sort(const std::string& input, const Options& o) {
    const auto p = rg::parse_permutation(load(input));
    const auto script = rg::sort_by_reversals(p);
    if (!script) throw rg::Error("the circle graph of " + to_string(p) + " has a loopless component of size > 1");
    if (o.json) std::cout << rg::io::to_json(*script).dump(2) << '\n';
    else std::cout << rg::format_script(*script);
    return 0;
}

int run_circle_graph(const std::string& input, const Options& o) {
    const auto p = rg::parse_permutation(load(input));
    const auto enc = rg::encode_permutation(p);
    const auto h = rg::circle_graph(enc);
    if (!o.dot.empty()) write_file(o.dot, rg::io::to_dot(h));
    if (o.json) {
        json j = rg::io::to_json(h);
        j["cycles"] = enc.cycles();
        j["rank"] = rg::rank(rg::adjacency_matrix(h));
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::vector<std::string> oriented;
    for (rg::Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.has_loop(v)) oriented.push_back(h.label(v));
    const auto a = rg::adjacency_matrix(h);
    std::cout << "permutation " << to_string(p) << '\n'
              << rg::format_matrix(a, h.labels()) << "oriented {" << join(oriented, ",") << "}\n"
              << "cycles " << enc.cycles() << '\n'
              << "rank " << rg::rank(a) << '\n'
              << "nullity " << rg::nullity(a) << '\n'
              << "full_lc_sequence " << (rg::has_full_lc_sequence(h) ? "yes" : "no") << '\n';
    return 0;
}

int run_fourreg(const std::vector<std::string>& inputs, std::size_t random_n, const Options& o) {
    rg::Encoding enc;
    if (random_n) {
        enc.graph = rg::random_four_regular(random_n, o.seed);
        enc.pa = rg::random_euler_system(enc.graph, o.seed);
        enc.pb = rg::random_supplementary(enc.pa, o.seed + 1);
    } else if (inputs.size() == 1) {
        enc = rg::encode_permutation(rg::parse_permutation(load(inputs[0])));
    } else if (inputs.size() == 2) {
        enc = rg::encode_circular_genomes(rg::parse_genome(load(inputs[0])), rg::parse_genome(load(inputs[1])));
    } else {
        throw CLI::ValidationError("fourreg", "expects a permutation, two genomes, or --random");
    }
    if (!o.dot.empty()) write_file(o.dot, rg::io::to_dot(enc.graph, enc.pa));
    if (o.json) {
        std::cout << rg::io::to_json(enc).dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices " << enc.graph.vertex_count() << '\n'
              << "edges " << enc.graph.edge_count() << '\n'
              << "components " << enc.graph.component_count() << '\n'
              << "pa_circuits " << rg::circuit_count(enc.graph, enc.pa) << '\n'
              << "pb_circuits " << rg::circuit_count(enc.graph, enc.pb) << '\n'
              << "pa_euler " << (rg::is_euler_system(enc.graph, enc.pa) ? "yes" : "no") << '\n';
    return 0;
}

int run_dm(const std::string& input, const Options& o) {
    const std::string text = load(input);
    rg::SetSystem d;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw rg::Error(std::string("malformed JSON: ") + e.what());
        }
        d = j.contains("family") ? rg::io::set_system_from_json(j)
                                 : rg::from_graph(rg::io::looped_graph_from_json(j));
    } else {
        d = rg::from_graph(rg::circle_graph(rg::encode_permutation(rg::parse_permutation(text))));
    }
    const bool dm = rg::is_delta_matroid(d);
    const bool even = rg::is_even(d);
    const auto grounds = rg::summand_grounds(d);
    const bool full = rg::has_full_lc_sequence_dm(d);
    if (o.json) {
        json j = rg::io::to_json(d);
        j["delta_matroid"] = dm;
        j["even"] = even;
        json s = json::array();
        for (auto t : grounds) s.push_back(d.labels_of(t));
        j["summands"] = s;
        j["binary_normal"] = d.provenance() == rg::Provenance::binary_normal;
        j["full_lc_sequence"] = full;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "ground {" << join(d.ground(), ",") << "}\n"
              << "members " << d.family().size() << '\n'
              << "delta_matroid " << (dm ? "yes" : "no") << '\n'
              << "even " << (even ? "yes" : "no") << '\n'
              << "summands";
    for (auto t : grounds) std::cout << ' ' << set_text(d, t);
    std::cout << '\n' << "max_sets";
    for (auto x : rg::max_sets(d)) std::cout << ' ' << set_text(d, x);
    std::cout << '\n'
              << "binary_normal " << (d.provenance() == rg::Provenance::binary_normal ? "yes" : "no") << '\n'
              << "full_lc_sequence " << (full ? "yes" : "no") << '\n';
    return 0;
}

int run_dcj(const std::string& a, const std::string& b, const Options& o) {
    const auto ga = rg::parse_genome(load(a));
    const auto gb = rg::parse_genome(load(b));
    const auto g = rg::adjacency_graph(ga, gb);
    if (!o.dot.empty()) write_file(o.dot, rg::io::to_dot(g));
    std::optional<rg::DcjOracleResult> check;
    try {
        check = rg::brute_dcj_distance(ga, gb, o.oracle_cap ? o.oracle_cap : rg::kDcjOracleCap);
    } catch (const rg::CapExceeded&) {
    }
    if (o.json) {
        json j = rg::io::to_json(g);
        j["oracle"] = check ? json(check->distance) : json(nullptr);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "n " << g.marker_count() << '\n'
              << "cycles " << g.cycles() << '\n'
              << "odd_paths " << g.odd_paths() << '\n'
              << "distance " << rg::dcj_distance(g) << '\n'
              << "oracle " << (check ? std::to_string(check->distance) : "beyond cap") << '\n';
    return 0;
}

int run_oracle_rev(const std::string& input, const Options& o) {
    const auto r = rg::brute_reversal_distance(rg::parse_permutation(load(input)),
                                               o.oracle_cap ? o.oracle_cap : rg::kReversalOracleCap);
    if (o.json) {
        std::cout << rg::io::to_json(r).dump(2) << '\n';
        return 0;
    }
    std::cout << "distance " << r.distance << "\nwitness";
    for (const auto& iv : r.witness) std::cout << ' ' << iv;
    std::cout << "\nstates_explored " << r.states_explored << '\n';
    return 0;
}

int run_oracle_dcj(const std::string& a, const std::string& b, const Options& o) {
    const auto r = rg::brute_dcj_distance(rg::parse_genome(load(a)), rg::parse_genome(load(b)),
                                          o.oracle_cap ? o.oracle_cap : rg::kDcjOracleCap);
    if (o.json) {
        std::cout << rg::io::to_json(r).dump(2) << '\n';
        return 0;
    }
    std::cout << "distance " << r.distance << '\n';
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        std::istringstream lines(to_string(r.witness[i]));
        std::string line;
        std::cout << "step " << i + 1 << '\n';
        while (std::getline(lines, line)) std::cout << "  " << line << '\n';
    }
    std::cout << "states_explored " << r.states_explored << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversal and DCJ distances via 4-regular graphs, circle graphs and delta-matroids"};
    app.require_subcommand(1);
    Options o;

    auto* distance = app.add_subcommand("distance", "reversal distance report for a signed permutation");
    std::string perm;
    distance->add_option("permutation", perm, "e.g. \"1,-6,7,4,-2,-5,3\" or a file")->required();
    distance->add_flag("--both-orientations", o.both, "also report the reverse complement");
    distance->add_option("--policy", o.policy, "auto, bound_only or oracle_only")
        ->check(CLI::IsMember({"auto", "bound_only", "oracle_only"}));
    distance->add_option("--oracle-cap", o.oracle_cap, "longest permutation handed to the oracle");

    auto* sort = app.add_subcommand("sort", "optimal reversal script when the criterion holds");
    sort->add_option("permutation", perm)->required();

    auto* circle = app.add_subcommand("circle-graph", "circle graph of a permutation's encoding");
    circle->add_option("permutation", perm)->required();
    circle->add_option("--dot", o.dot, "write the graph as DOT");

    auto* fourreg = app.add_subcommand("fourreg", "4-regular encoding of a permutation or two circular genomes");
    std::vector<std::string> inputs;
    std::size_t random_n = 0;
    fourreg->add_option("inputs", inputs, "permutation, or two genome files/strings");
    fourreg->add_option("--random", random_n, "random graph on this many vertices instead");
    fourreg->add_option("--seed", o.seed, "seed for --random");
    fourreg->add_option("--dot", o.dot, "write the graph, coloured by P_A circuits, as DOT");

    auto* dm = app.add_subcommand("dm", "set system of a permutation, graph JSON or set-system JSON");
    std::string dm_input;
    dm->add_option("input", dm_input)->required();

    auto* dcj = app.add_subcommand("dcj", "DCJ distance between two genomes");
    std::string ga, gb;
    dcj->add_option("genome_a", ga)->required();
    dcj->add_option("genome_b", gb)->required();
    dcj->add_option("--dot", o.dot, "write the adjacency graph as DOT");
    dcj->add_option("--oracle-cap", o.oracle_cap, "marker cap for the exhaustive cross-check");

    auto* oracle = app.add_subcommand("oracle", "exhaustive search");
    oracle->require_subcommand(1);
    oracle->add_option("--oracle-cap", o.oracle_cap, "size cap (n for rev, markers for dcj)");
    auto* orev = oracle->add_subcommand("rev", "reversal distance by search");
    orev->add_option("permutation", perm)->required();
    auto* odcj = oracle->add_subcommand("dcj", "DCJ distance by search");
    odcj->add_option("genome_a", ga)->required();
    odcj->add_option("genome_b", gb)->required();

    for (auto* sub : {distance, sort, circle, fourreg, dm, dcj, orev, odcj})
        sub->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*distance) return run_distance(perm, o);
        if (*sort) return run_sort(perm, o);
        if (*circle) return run_circle_graph(perm, o);
        if (*fourreg) return run_fourreg(inputs, random_n, o);
        if (*dm) return run_dm(dm_input, o);
        if (*dcj) return run_dcj(ga, gb, o);
        if (*orev) return run_oracle_rev(perm, o);
        if (*odcj) return run_oracle_dcj(ga, gb, o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
