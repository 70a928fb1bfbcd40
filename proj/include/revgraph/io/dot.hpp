#pragma once

#include <array>
#include <sstream>
#include <string>

#include "revgraph/dcj.hpp"
#include "revgraph/fourreg.hpp"
#include "revgraph/graphs.hpp"

namespace revgraph::io {

namespace detail {
inline const char* palette(std::size_t i) {
    static constexpr std::array<const char*, 10> colors{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return colors[i % colors.size()];
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace detail

/// The multigraph with edges coloured by the circuit of p they belong to.
/// Edge labels carry the slot numbers at both ends.
inline std::string to_dot(const FourRegularGraph& g, const CircuitPartition& p) {
    std::vector<std::size_t> circuit_of(g.edge_count(), 0);
    std::size_t k = 0;
    revgraph::detail::for_each_circuit(g, p, [&](const std::vector<revgraph::detail::Step>& steps) {
        for (const auto& s : steps) circuit_of[s.edge] = k;
        ++k;
    });
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << detail::quote(g.vertex_label(v)) << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.ends(e);
        os << "  " << detail::quote(g.vertex_label(vertex_of(a))) << " -- " << detail::quote(g.vertex_label(vertex_of(b)))
           << " [label=" << detail::quote(g.edge_label(e)) << ", taillabel=\"" << slot_of(a) << "\", headlabel=\""
           << slot_of(b) << "\", color=\"" << detail::palette(circuit_of[e]) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const LoopedGraph& h) {
    std::ostringstream os;
    os << "graph H {\n";
    for (Vertex v = 0; v < h.vertex_count(); ++v) os << "  " << detail::quote(h.label(v)) << ";\n";
    for (Vertex u = 0; u < h.vertex_count(); ++u)
        for (Vertex w = u; w < h.vertex_count(); ++w)
            if (h.has_edge(u, w)) os << "  " << detail::quote(h.label(u)) << " -- " << detail::quote(h.label(w)) << ";\n";
    os << "}\n";
    return os.str();
}

/// Genome A nodes on the left, genome B nodes on the right; components
/// coloured by class.
inline std::string to_dot(const AdjacencyGraph& g) {
    auto node_label = [&](const AdjacencyNode& n) {
        std::string s;
        for (std::size_t i = 0; i < n.extremities.size(); ++i) {
            if (i) s += "|";
            s += extremity_label(g.ga, n.extremities[i]);
        }
        return s;
    };
    auto color = [](ComponentKind k) {
        switch (k) {
            case ComponentKind::cycle: return "#1f77b4";
            case ComponentKind::even_path: return "#2ca02c";
            case ComponentKind::odd_path: return "#d62728";
        }
        return "black";
    };
    std::vector<ComponentKind> kind_a(g.a_nodes.size()), kind_b(g.b_nodes.size());
    for (const auto& c : g.components) {
        for (auto i : c.a_nodes) kind_a[i] = c.kind;
        for (auto i : c.b_nodes) kind_b[i] = c.kind;
    }
    std::ostringstream os;
    os << "graph AG {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.a_nodes.size(); ++i)
        os << "  a" << i << " [label=" << detail::quote(node_label(g.a_nodes[i])) << ", color=\"" << color(kind_a[i])
           << "\"];\n";
    for (std::size_t i = 0; i < g.b_nodes.size(); ++i)
        os << "  b" << i << " [label=" << detail::quote(node_label(g.b_nodes[i])) << ", color=\"" << color(kind_b[i])
           << "\"];\n";
    for (std::size_t x = 0; x < g.a_node_of.size(); ++x) {
        const std::size_t a = g.a_node_of[x];
        os << "  a" << a << " -- b" << g.b_node_of[x] << " [label="
           << detail::quote(extremity_label(g.ga, Extremity::from_index(x))) << ", color=\"" << color(kind_a[a])
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace revgraph::io
