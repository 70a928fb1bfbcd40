#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revgraph/error.hpp"
#include "revgraph/genome.hpp"

namespace revgraph {

/// One end of a marker. The tail is the left end in forward orientation.
struct Extremity {
    int marker = 1;  ///< 1-based marker id
    bool head = false;

    [[nodiscard]] std::size_t index() const { return 2 * (static_cast<std::size_t>(marker) - 1) + (head ? 1 : 0); }
    static Extremity from_index(std::size_t i) { return {static_cast<int>(i / 2) + 1, (i % 2) == 1}; }

    friend bool operator==(const Extremity&, const Extremity&) = default;
    friend auto operator<=>(const Extremity&, const Extremity&) = default;
};

inline Extremity left_end(int signed_marker) { return {std::abs(signed_marker), signed_marker < 0}; }
inline Extremity right_end(int signed_marker) { return {std::abs(signed_marker), signed_marker > 0}; }

inline std::string extremity_label(const Genome& g, Extremity x) {
    return g.names().at(static_cast<std::size_t>(x.marker) - 1) + (x.head ? "h" : "t");
}

/// A genome's boundary structure: each extremity is either glued to exactly
/// one other extremity (an adjacency) or is a telomere. The partner table
/// is a canonical form: two genomes over the same names are equal iff
/// their tables are.
class AdjacencySet {
public:
    static constexpr int kTelomere = -1;

    AdjacencySet() = default;
    explicit AdjacencySet(std::vector<int> partner) : partner_(std::move(partner)) {
        detail::require(partner_.size() % 2 == 0, "extremity count must be even");
        for (std::size_t x = 0; x < partner_.size(); ++x) {
            const int p = partner_[x];
            if (p == kTelomere) continue;
            detail::require(p >= 0 && static_cast<std::size_t>(p) < partner_.size() && static_cast<std::size_t>(p) != x &&
                                partner_[static_cast<std::size_t>(p)] == static_cast<int>(x),
                            "adjacency table is not an involution");
        }
    }

    static AdjacencySet from_genome(const Genome& g) {
        std::vector<int> partner(2 * g.marker_count(), kTelomere);
        auto glue = [&](Extremity a, Extremity b) {
            partner[a.index()] = static_cast<int>(b.index());
            partner[b.index()] = static_cast<int>(a.index());
        };
        for (const auto& c : g.chromosomes()) {
            for (std::size_t j = 0; j + 1 < c.markers.size(); ++j) glue(right_end(c.markers[j]), left_end(c.markers[j + 1]));
            if (c.shape == Shape::circular) glue(right_end(c.markers.back()), left_end(c.markers.front()));
        }
        return AdjacencySet(std::move(partner));
    }

    /// Rebuilds chromosomes: linear ones from telomeres in extremity order,
    /// then circular ones from the lowest unvisited extremity.
    [[nodiscard]] Genome to_genome(const std::vector<std::string>& names) const {
        detail::require(names.size() * 2 == partner_.size(), "name table does not match the adjacency set");
        std::vector<bool> seen(partner_.size(), false);
        std::vector<Chromosome> chroms;
        auto trace = [&](std::size_t entry, Shape shape) {
            Chromosome c{shape, {}};
            std::size_t x = entry;
            for (;;) {
                const Extremity e = Extremity::from_index(x);
                c.markers.push_back(e.head ? -e.marker : e.marker);
                const std::size_t exit = x ^ 1U;
                seen[x] = seen[exit] = true;
                const int next = partner_[exit];
                if (next == kTelomere || static_cast<std::size_t>(next) == entry) break;
                x = static_cast<std::size_t>(next);
            }
            chroms.push_back(std::move(c));
        };
        for (std::size_t x = 0; x < partner_.size(); ++x)
            if (!seen[x] && partner_[x] == kTelomere) trace(x, Shape::linear);
        for (std::size_t x = 0; x < partner_.size(); ++x)
            if (!seen[x]) trace(x, Shape::circular);
        return Genome(names, std::move(chroms));
    }

    [[nodiscard]] std::size_t marker_count() const noexcept { return partner_.size() / 2; }
    [[nodiscard]] const std::vector<int>& partners() const noexcept { return partner_; }
    [[nodiscard]] bool is_telomere(Extremity x) const { return partner_.at(x.index()) == kTelomere; }
    [[nodiscard]] std::optional<Extremity> partner(Extremity x) const {
        const int p = partner_.at(x.index());
        if (p == kTelomere) return std::nullopt;
        return Extremity::from_index(static_cast<std::size_t>(p));
    }

    [[nodiscard]] std::vector<std::pair<Extremity, Extremity>> adjacencies() const {
        std::vector<std::pair<Extremity, Extremity>> out;
        for (std::size_t x = 0; x < partner_.size(); ++x)
            if (partner_[x] > static_cast<int>(x))
                out.emplace_back(Extremity::from_index(x), Extremity::from_index(static_cast<std::size_t>(partner_[x])));
        return out;
    }
    [[nodiscard]] std::vector<Extremity> telomeres() const {
        std::vector<Extremity> out;
        for (std::size_t x = 0; x < partner_.size(); ++x)
            if (partner_[x] == kTelomere) out.push_back(Extremity::from_index(x));
        return out;
    }

    friend bool operator==(const AdjacencySet&, const AdjacencySet&) = default;
    friend auto operator<=>(const AdjacencySet&, const AdjacencySet&) = default;

private:
    std::vector<int> partner_;
};

// ---------------------------------------------------------------------------
// DCJ operation

/// A cut site: an adjacency (both ends), a telomere (one end) or the empty
/// site (no ends), which lets a single adjacency be cut open on its own.
struct Breakpoint {
    std::optional<Extremity> first;
    std::optional<Extremity> second;

    static Breakpoint adjacency(Extremity a, Extremity b) { return {a, b}; }
    static Breakpoint telomere(Extremity a) { return {a, std::nullopt}; }
    static Breakpoint empty() { return {}; }

    [[nodiscard]] bool is_empty() const { return !first && !second; }

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// With cut ends (a1, a2) and (b1, b2): straight glues {a1,b1},{a2,b2};
/// crossed glues {a1,b2},{a2,b1}. Missing ends leave telomeres.
enum class Rejoin { straight, crossed };

namespace detail {

inline bool same_site(const Breakpoint& a, const Breakpoint& b) {
    return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

inline void require_site(const AdjacencySet& s, const Breakpoint& bp, std::size_t n) {
    auto valid = [&](const std::optional<Extremity>& x) {
        return !x || (x->marker >= 1 && static_cast<std::size_t>(x->marker) <= n);
    };
    require(valid(bp.first) && valid(bp.second), "breakpoint refers to an unknown marker");
    if (bp.first && bp.second) {
        require(s.partner(*bp.first) == bp.second, "breakpoint is not an adjacency of the genome");
    } else if (bp.first || bp.second) {
        require(s.is_telomere(bp.first ? *bp.first : *bp.second), "breakpoint is not a telomere of the genome");
    }
}

/// In-place DCJ on a partner table; ends given as extremity indices or -1.
inline void rejoin(std::vector<int>& partner, int a1, int a2, int b1, int b2, Rejoin how) {
    for (int x : {a1, a2, b1, b2})
        if (x >= 0) partner[static_cast<std::size_t>(x)] = AdjacencySet::kTelomere;
    auto glue = [&](int x, int y) {
        if (x >= 0 && y >= 0) {
            partner[static_cast<std::size_t>(x)] = y;
            partner[static_cast<std::size_t>(y)] = x;
        }
    };
    if (how == Rejoin::straight) {
        glue(a1, b1);
        glue(a2, b2);
    } else {
        glue(a1, b2);
        glue(a2, b1);
    }
}

/// Every table reachable by one DCJ (excluding p itself), sorted, unique.
inline std::vector<std::vector<int>> dcj_neighbors(const std::vector<int>& partner) {
    struct Site {
        int a, b;
    };
    std::vector<Site> sites;
    for (std::size_t x = 0; x < partner.size(); ++x) {
        if (partner[x] == AdjacencySet::kTelomere) sites.push_back({static_cast<int>(x), -1});
        else if (partner[x] > static_cast<int>(x)) sites.push_back({static_cast<int>(x), partner[x]});
    }
    sites.push_back({-1, -1});
    std::set<std::vector<int>> out;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            for (Rejoin how : {Rejoin::straight, Rejoin::crossed}) {
                std::vector<int> next = partner;
                rejoin(next, sites[i].a, sites[i].b, sites[j].a, sites[j].b, how);
                if (next != partner) out.insert(std::move(next));
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace detail

/// Cuts the two sites and glues the four ends by the chosen pattern.
inline Genome apply_dcj(const Genome& g, const Breakpoint& cut1, const Breakpoint& cut2, Rejoin how) {
    detail::require(!detail::same_site(cut1, cut2), "DCJ needs two distinct breakpoints");
    const AdjacencySet s = AdjacencySet::from_genome(g);
    detail::require_site(s, cut1, g.marker_count());
    detail::require(!cut1.is_empty() || !cut2.is_empty(), "DCJ needs at least one non-empty breakpoint");
    detail::require_site(s, cut2, g.marker_count());
    auto idx = [](const std::optional<Extremity>& x) { return x ? static_cast<int>(x->index()) : -1; };
    std::vector<int> partner = s.partners();
    detail::rejoin(partner, idx(cut1.first), idx(cut1.second), idx(cut2.first), idx(cut2.second), how);
    return AdjacencySet(std::move(partner)).to_genome(g.names());
}

/// All distinct genomes one DCJ away from g (g itself excluded), in the
/// order of their canonical adjacency tables.
inline std::vector<Genome> enumerate_dcj_moves(const Genome& g) {
    std::vector<Genome> out;
    if (g.marker_count() == 0) return out;
    for (auto& p : detail::dcj_neighbors(AdjacencySet::from_genome(g).partners()))
        out.push_back(AdjacencySet(std::move(p)).to_genome(g.names()));
    return out;
}

// ---------------------------------------------------------------------------
// Adjacency graph

enum class ComponentKind { cycle, even_path, odd_path };

inline const char* to_string(ComponentKind k) noexcept {
    switch (k) {
        case ComponentKind::cycle: return "cycle";
        case ComponentKind::even_path: return "even_path";
        case ComponentKind::odd_path: return "odd_path";
    }
    return "?";
}

/// Node = an adjacency (two extremities) or telomere (one) of one genome.
struct AdjacencyNode {
    std::vector<Extremity> extremities;
};

struct AdjacencyComponent {
    ComponentKind kind = ComponentKind::cycle;
    std::size_t edge_count = 0;
    std::vector<std::size_t> a_nodes;
    std::vector<std::size_t> b_nodes;
};

/// Bipartite graph on the adjacencies/telomeres of two genomes, one edge
/// per shared extremity.
struct AdjacencyGraph {
    Genome ga;
    Genome gb;  ///< relabelled onto ga's names
    std::vector<AdjacencyNode> a_nodes;
    std::vector<AdjacencyNode> b_nodes;
    std::vector<std::size_t> a_node_of;  ///< per extremity index
    std::vector<std::size_t> b_node_of;
    std::vector<AdjacencyComponent> components;

    [[nodiscard]] std::size_t count(ComponentKind k) const {
        return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                      [k](const AdjacencyComponent& c) { return c.kind == k; }));
    }
    [[nodiscard]] std::size_t cycles() const { return count(ComponentKind::cycle); }
    [[nodiscard]] std::size_t odd_paths() const { return count(ComponentKind::odd_path); }
    [[nodiscard]] std::size_t marker_count() const { return ga.marker_count(); }
};

namespace detail {
inline void build_nodes(const AdjacencySet& s, std::vector<AdjacencyNode>& nodes, std::vector<std::size_t>& node_of) {
    node_of.assign(s.partners().size(), 0);
    std::vector<bool> done(s.partners().size(), false);
    for (std::size_t x = 0; x < s.partners().size(); ++x) {
        if (done[x]) continue;
        AdjacencyNode node;
        node.extremities.push_back(Extremity::from_index(x));
        done[x] = true;
        node_of[x] = nodes.size();
        if (auto p = s.partner(Extremity::from_index(x))) {
            node.extremities.push_back(*p);
            done[p->index()] = true;
            node_of[p->index()] = nodes.size();
        }
        nodes.push_back(std::move(node));
    }
}
}  // namespace detail

inline AdjacencyGraph adjacency_graph(const Genome& ga, const Genome& gb) {
    AdjacencyGraph g;
    g.ga = ga;
    g.gb = relabel(gb, ga.names());
    const AdjacencySet sa = AdjacencySet::from_genome(g.ga);
    const AdjacencySet sb = AdjacencySet::from_genome(g.gb);
    detail::build_nodes(sa, g.a_nodes, g.a_node_of);
    detail::build_nodes(sb, g.b_nodes, g.b_node_of);

    std::vector<bool> seen_a(g.a_nodes.size(), false), seen_b(g.b_nodes.size(), false);
    for (std::size_t start = 0; start < g.a_nodes.size() + g.b_nodes.size(); ++start) {
        const bool start_in_a = start < g.a_nodes.size();
        const std::size_t start_id = start_in_a ? start : start - g.a_nodes.size();
        if ((start_in_a ? seen_a : seen_b)[start_id]) continue;

        AdjacencyComponent comp;
        bool all_degree_two = true;
        std::size_t extremity_total = 0;
        std::vector<std::pair<bool, std::size_t>> stack{{start_in_a, start_id}};
        (start_in_a ? seen_a : seen_b)[start_id] = true;
        while (!stack.empty()) {
            auto [in_a, id] = stack.back();
            stack.pop_back();
            const auto& node = (in_a ? g.a_nodes : g.b_nodes)[id];
            (in_a ? comp.a_nodes : comp.b_nodes).push_back(id);
            all_degree_two = all_degree_two && node.extremities.size() == 2;
            if (in_a) extremity_total += node.extremities.size();
            for (const Extremity& x : node.extremities) {
                const std::size_t other = (in_a ? g.b_node_of : g.a_node_of)[x.index()];
                auto& seen = in_a ? seen_b : seen_a;
                if (!seen[other]) {
                    seen[other] = true;
                    stack.emplace_back(!in_a, other);
                }
            }
        }
        std::sort(comp.a_nodes.begin(), comp.a_nodes.end());
        std::sort(comp.b_nodes.begin(), comp.b_nodes.end());
        comp.edge_count = extremity_total;
        comp.kind = all_degree_two ? ComponentKind::cycle
                    : (extremity_total % 2 == 1) ? ComponentKind::odd_path
                                                 : ComponentKind::even_path;
        g.components.push_back(std::move(comp));
    }
    return g;
}

/// n - (c + i/2) from the adjacency graph.
inline std::size_t dcj_distance(const AdjacencyGraph& g) {
    const std::size_t i = g.odd_paths();
    if (i % 2 != 0) throw std::logic_error("odd number of odd paths in an adjacency graph");
    return g.marker_count() - (g.cycles() + i / 2);
}

inline std::size_t dcj_distance(const Genome& ga, const Genome& gb) { return dcj_distance(adjacency_graph(ga, gb)); }

}  // namespace revgraph
