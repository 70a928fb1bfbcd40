#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revgraph/dcj.hpp"
#include "revgraph/dm.hpp"
#include "revgraph/error.hpp"
#include "revgraph/fourreg.hpp"
#include "revgraph/genome.hpp"
#include "revgraph/graphs.hpp"
#include "revgraph/oracle.hpp"
#include "revgraph/perm.hpp"
#include "revgraph/sorter.hpp"

namespace revgraph::io {

using json = nlohmann::ordered_json;

namespace detail {
template <class Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw Error(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

inline std::size_t index_of(const std::vector<std::string>& labels, const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return i;
    revgraph::detail::fail("unknown label '" + l + "'");
}
}  // namespace detail

// permutations ---------------------------------------------------------------

inline json to_json(const SignedPermutation& p) {
    return {{"values", std::vector<int>(p.values().begin(), p.values().end())}};
}

/// Accepts {"values": [...]} or a bare array.
inline SignedPermutation permutation_from_json(const json& j) {
    return detail::guarded("permutation", [&] {
        const json& v = j.is_object() ? j.at("values") : j;
        return SignedPermutation(v.get<std::vector<int>>());
    });
}

inline json to_json(const ReversalInterval& r) { return json::array({r.start, r.end}); }

inline ReversalInterval interval_from_json(const json& j) {
    return detail::guarded("interval", [&] {
        revgraph::detail::require(j.is_array() && j.size() == 2, "interval must be [start, end]");
        return ReversalInterval{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
    });
}

// genomes --------------------------------------------------------------------

inline json to_json(const Genome& g) {
    json chroms = json::array();
    for (const auto& c : g.chromosomes()) {
        json markers = json::array();
        for (int m : c.markers) markers.push_back(g.marker_label(m));
        chroms.push_back({{"shape", to_string(c.shape)}, {"markers", markers}});
    }
    return {{"markers", g.names()}, {"chromosomes", chroms}};
}

inline Genome genome_from_json(const json& j) {
    return detail::guarded("genome", [&] {
        const auto names = j.at("markers").get<std::vector<std::string>>();
        std::vector<Chromosome> chroms;
        for (const auto& c : j.at("chromosomes")) {
            const auto shape = c.at("shape").get<std::string>();
            revgraph::detail::require(shape == "linear" || shape == "circular", "unknown shape '" + shape + "'");
            Chromosome out{shape == "linear" ? Shape::linear : Shape::circular, {}};
            for (const auto& tok : c.at("markers").get<std::vector<std::string>>()) {
                const bool neg = !tok.empty() && tok.front() == '-';
                const auto id = static_cast<int>(detail::index_of(names, neg ? tok.substr(1) : tok)) + 1;
                out.markers.push_back(neg ? -id : id);
            }
            chroms.push_back(std::move(out));
        }
        return Genome(names, std::move(chroms));
    });
}

// set systems ----------------------------------------------------------------

inline json to_json(const SetSystem& d) {
    json family = json::array();
    for (Subset x : canonical_order(d)) family.push_back(d.labels_of(x));
    return {{"ground", d.ground()}, {"family", family}};
}

inline SetSystem set_system_from_json(const json& j, Provenance prov = Provenance::generic) {
    return detail::guarded("set system", [&] {
        const auto ground = j.at("ground").get<std::vector<std::string>>();
        SetSystem probe(ground, {});
        std::vector<Subset> family;
        for (const auto& m : j.at("family")) family.push_back(probe.subset_of(m.get<std::vector<std::string>>()));
        return SetSystem(ground, std::move(family), prov);
    });
}

// graphs ---------------------------------------------------------------------

inline json to_json(const LoopedGraph& h) {
    json loops = json::array(), edges = json::array();
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
        if (h.has_loop(u)) loops.push_back(h.label(u));
        for (Vertex w = u + 1; w < h.vertex_count(); ++w)
            if (h.has_edge(u, w)) edges.push_back({h.label(u), h.label(w)});
    }
    return {{"vertices", h.labels()}, {"loops", loops}, {"edges", edges}};
}

inline LoopedGraph looped_graph_from_json(const json& j) {
    return detail::guarded("graph", [&] {
        const auto labels = j.at("vertices").get<std::vector<std::string>>();
        LoopedGraph h(labels.size(), labels);
        for (const auto& l : j.at("loops")) h.add_loop(detail::index_of(labels, l.get<std::string>()));
        for (const auto& e : j.at("edges")) {
            revgraph::detail::require(e.is_array() && e.size() == 2, "edge must be a pair of labels");
            h.add_edge(detail::index_of(labels, e[0].get<std::string>()), detail::index_of(labels, e[1].get<std::string>()));
        }
        return h;
    });
}

/// Half-edge dump: each edge as [[vertex, slot], [vertex, slot]].
inline json to_json(const FourRegularGraph& g) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.ends(e);
        edges.push_back({{"label", g.edge_label(e)},
                         {"ends", {{g.vertex_label(vertex_of(a)), slot_of(a)}, {g.vertex_label(vertex_of(b)), slot_of(b)}}}});
    }
    return {{"vertices", g.vertex_labels()}, {"edges", edges}};
}

inline json to_json(const FourRegularGraph& g, const CircuitPartition& p) {
    json routes = json::array();
    for (Vertex v = 0; v < p.size(); ++v) routes.push_back(to_string(p.route(v)));
    json circs = json::array();
    for (const auto& c : circuits(g, p)) {
        json labels = json::array();
        for (EdgeId e : c.edges) labels.push_back(g.edge_label(e));
        circs.push_back(labels);
    }
    return {{"routes", routes}, {"circuits", circs}, {"euler", is_euler_system(g, p)}};
}

inline json to_json(const Encoding& enc) {
    json j = to_json(enc.graph);
    j["pa"] = to_json(enc.graph, enc.pa);
    j["pb"] = to_json(enc.graph, enc.pb);
    return j;
}

// reports --------------------------------------------------------------------

inline json to_json(const DistanceReport& r) {
    json j = {{"permutation", to_json(r.permutation)},
              {"n", r.n()},
              {"cycles", r.cycles},
              {"lower_bound", r.lower_bound},
              {"exact", r.exact ? json(*r.exact) : json(nullptr)},
              {"method", to_string(r.method)}};
    if (!r.orientations.empty()) {
        json o = json::array();
        for (const auto& sub : r.orientations) o.push_back(to_json(sub));
        j["orientations"] = o;
        const auto best = r.best_exact();
        j["best_exact"] = best ? json(*best) : json(nullptr);
    }
    return j;
}

inline DistanceReport distance_report_from_json(const json& j) {
    return detail::guarded("distance report", [&] {
        DistanceReport r;
        r.permutation = permutation_from_json(j.at("permutation"));
        r.cycles = j.at("cycles").get<std::size_t>();
        r.lower_bound = j.at("lower_bound").get<std::size_t>();
        if (!j.at("exact").is_null()) r.exact = j.at("exact").get<std::size_t>();
        r.method = parse_method(j.at("method").get<std::string>());
        if (j.contains("orientations"))
            for (const auto& sub : j.at("orientations")) r.orientations.push_back(distance_report_from_json(sub));
        return r;
    });
}

inline json to_json(const ReversalScript& s) {
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"vertex", "v" + std::to_string(st.vertex)},
                         {"interval", to_json(st.interval)},
                         {"result", to_json(st.result)}});
    return {{"start", to_json(s.start)}, {"steps", steps}, {"distance", s.claimed_distance}};
}

inline ReversalScript script_from_json(const json& j) {
    return detail::guarded("script", [&] {
        ReversalScript s;
        s.start = permutation_from_json(j.at("start"));
        for (const auto& st : j.at("steps")) {
            const auto v = st.at("vertex").get<std::string>();
            revgraph::detail::require(v.size() > 1 && v.front() == 'v', "vertex must look like v<k>");
            s.steps.push_back({static_cast<Vertex>(std::stoul(v.substr(1))), interval_from_json(st.at("interval")),
                               permutation_from_json(st.at("result"))});
        }
        s.claimed_distance = j.at("distance").get<std::size_t>();
        return s;
    });
}

inline json to_json(const ReversalOracleResult& r) {
    json w = json::array();
    for (const auto& iv : r.witness) w.push_back(to_json(iv));
    return {{"distance", r.distance}, {"witness", w}, {"states_explored", r.states_explored}};
}

inline json to_json(const DcjOracleResult& r) {
    json w = json::array();
    for (const auto& g : r.witness) w.push_back(to_string(g));
    return {{"distance", r.distance}, {"witness", w}, {"states_explored", r.states_explored}};
}

inline json to_json(const AdjacencyGraph& g) {
    json comps = json::array();
    for (const auto& c : g.components) comps.push_back({{"kind", to_string(c.kind)}, {"edges", c.edge_count}});
    return {{"n", g.marker_count()},
            {"cycles", g.cycles()},
            {"odd_paths", g.odd_paths()},
            {"distance", dcj_distance(g)},
            {"components", comps}};
}

}  // namespace revgraph::io
