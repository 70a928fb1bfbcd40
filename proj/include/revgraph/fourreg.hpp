#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "revgraph/error.hpp"
#include "revgraph/genome.hpp"
#include "revgraph/perm.hpp"

namespace revgraph {

using Vertex = std::size_t;
using HalfEdge = std::size_t;  ///< 4 * vertex + slot
using EdgeId = std::size_t;

inline constexpr Vertex vertex_of(HalfEdge h) noexcept { return h / 4; }
inline constexpr unsigned slot_of(HalfEdge h) noexcept { return static_cast<unsigned>(h % 4); }
inline constexpr HalfEdge half_edge(Vertex v, unsigned slot) noexcept { return 4 * v + slot; }

/// 4-regular multigraph with explicit half-edge slots. Every vertex owns
/// slots 0..3; the edge set is a perfect matching on all 4n slots, so a
/// loop is an edge whose two slots sit on the same vertex.
class FourRegularGraph {
public:
    FourRegularGraph() = default;

    FourRegularGraph(std::size_t vertex_count, const std::vector<std::pair<HalfEdge, HalfEdge>>& edges,
                     std::vector<std::string> vertex_labels = {}, std::vector<std::string> edge_labels = {})
        : n_(vertex_count),
          mate_(4 * vertex_count, kUnset),
          edge_of_(4 * vertex_count, kUnset),
          vertex_labels_(std::move(vertex_labels)),
          edge_labels_(std::move(edge_labels)) {
        detail::require(edges.size() == 2 * n_, "a 4-regular multigraph on " + std::to_string(n_) +
                                                    " vertices has exactly " + std::to_string(2 * n_) +
                                                    " edges");
        for (const auto& [a, b] : edges) {
            detail::require(a < 4 * n_ && b < 4 * n_ && a != b, "invalid half-edge pair");
            detail::require(mate_[a] == kUnset && mate_[b] == kUnset, "half-edge matched twice");
            mate_[a] = b;
            mate_[b] = a;
            edge_of_[a] = edge_of_[b] = ends_.size();
            ends_.push_back({a, b});
        }
        if (vertex_labels_.empty())
            for (Vertex v = 0; v < n_; ++v) vertex_labels_.push_back("v" + std::to_string(v));
        if (edge_labels_.empty())
            for (EdgeId e = 0; e < ends_.size(); ++e) edge_labels_.push_back("e" + std::to_string(e));
        detail::require(vertex_labels_.size() == n_ && edge_labels_.size() == ends_.size(),
                        "label count mismatch");
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return ends_.size(); }
    [[nodiscard]] HalfEdge mate(HalfEdge h) const { return mate_.at(h); }
    [[nodiscard]] EdgeId edge_of(HalfEdge h) const { return edge_of_.at(h); }
    [[nodiscard]] const std::array<HalfEdge, 2>& ends(EdgeId e) const { return ends_.at(e); }
    [[nodiscard]] bool is_loop(EdgeId e) const { return vertex_of(ends_[e][0]) == vertex_of(ends_[e][1]); }
    [[nodiscard]] const std::string& vertex_label(Vertex v) const { return vertex_labels_.at(v); }
    [[nodiscard]] const std::string& edge_label(EdgeId e) const { return edge_labels_.at(e); }
    [[nodiscard]] const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }
    [[nodiscard]] const std::vector<std::string>& edge_labels() const noexcept { return edge_labels_; }

    /// Degree counting a loop twice; always 4 by construction.
    [[nodiscard]] unsigned degree(Vertex v) const {
        unsigned d = 0;
        for (unsigned s = 0; s < 4; ++s) d += mate_.at(half_edge(v, s)) != kUnset;
        return d;
    }

    /// Component id per vertex, numbered in order of lowest vertex.
    [[nodiscard]] std::vector<std::size_t> component_ids() const {
        std::vector<std::size_t> comp(n_, kUnset);
        std::size_t next = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n_; ++s) {
            if (comp[s] != kUnset) continue;
            comp[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                for (unsigned k = 0; k < 4; ++k) {
                    Vertex w = vertex_of(mate_[half_edge(u, k)]);
                    if (comp[w] == kUnset) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return comp;
    }

    [[nodiscard]] std::size_t component_count() const {
        auto ids = component_ids();
        return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    }

    friend bool operator==(const FourRegularGraph& a, const FourRegularGraph& b) {
        return a.n_ == b.n_ && a.mate_ == b.mate_;
    }

    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

private:
    std::size_t n_ = 0;
    std::vector<HalfEdge> mate_;
    std::vector<EdgeId> edge_of_;
    std::vector<std::array<HalfEdge, 2>> ends_;
    std::vector<std::string> vertex_labels_;
    std::vector<std::string> edge_labels_;
};

/// The three perfect matchings of the slots {0,1,2,3}.
enum class Route : std::uint8_t { pair01_23 = 0, pair02_13 = 1, pair03_12 = 2 };

inline constexpr unsigned route_partner(Route r, unsigned slot) noexcept {
    constexpr unsigned table[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return table[static_cast<unsigned>(r)][slot];
}

/// The route containing the pair {a, b} of distinct slots.
inline constexpr Route route_pairing(unsigned a, unsigned b) noexcept {
    const unsigned other = a == 0 ? b : b == 0 ? a : 6 - a - b;  // the slot paired with 0
    return static_cast<Route>(other - 1);
}

inline const char* to_string(Route r) noexcept {
    switch (r) {
        case Route::pair01_23: return "{0,1}{2,3}";
        case Route::pair02_13: return "{0,2}{1,3}";
        case Route::pair03_12: return "{0,3}{1,2}";
    }
    return "?";
}

/// A route per vertex. Together with the graph this determines a set of
/// edge-disjoint circuits covering every edge.
class CircuitPartition {
public:
    CircuitPartition() = default;
    explicit CircuitPartition(std::vector<Route> routes) : routes_(std::move(routes)) {}
    static CircuitPartition uniform(std::size_t n, Route r) { return CircuitPartition(std::vector<Route>(n, r)); }

    [[nodiscard]] std::size_t size() const noexcept { return routes_.size(); }
    [[nodiscard]] Route route(Vertex v) const { return routes_.at(v); }
    [[nodiscard]] const std::vector<Route>& routes() const noexcept { return routes_; }
    [[nodiscard]] HalfEdge partner(HalfEdge h) const {
        return half_edge(vertex_of(h), route_partner(routes_.at(vertex_of(h)), slot_of(h)));
    }
    void set_route(Vertex v, Route r) { routes_.at(v) = r; }

    friend bool operator==(const CircuitPartition&, const CircuitPartition&) = default;

private:
    std::vector<Route> routes_;
};

/// Closed walk without distinguished start or orientation, stored as the
/// lexicographically least rotation/reflection of its edge-id cycle.
struct Circuit {
    std::vector<EdgeId> edges;

    friend bool operator==(const Circuit&, const Circuit&) = default;
    friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

namespace detail {

inline void require_compatible(const FourRegularGraph& g, const CircuitPartition& p) {
    require(p.size() == g.vertex_count(), "circuit partition does not match the graph's vertex count");
}

/// One step of a circuit: the edge traversed and the half-edge by which the
/// walk arrived at the next vertex.
struct Step {
    EdgeId edge;
    HalfEdge arrival;
};

/// Walks the circuit leaving through half-edge `start`.
inline std::vector<Step> walk(const FourRegularGraph& g, const CircuitPartition& p, HalfEdge start) {
    std::vector<Step> steps;
    HalfEdge h = start;
    do {
        const HalfEdge m = g.mate(h);
        steps.push_back({g.edge_of(h), m});
        h = p.partner(m);
    } while (h != start);
    return steps;
}

/// Invokes fn(steps) once per circuit, starting each circuit at the
/// lowest unvisited half-edge.
template <class Fn>
void for_each_circuit(const FourRegularGraph& g, const CircuitPartition& p, Fn&& fn) {
    require_compatible(g, p);
    std::vector<bool> seen(4 * g.vertex_count(), false);
    for (HalfEdge h = 0; h < seen.size(); ++h) {
        if (seen[h]) continue;
        auto steps = walk(g, p, h);
        for (const auto& s : steps) {
            seen[s.arrival] = true;
            seen[g.mate(s.arrival)] = true;
        }
        fn(steps);
    }
}

inline Circuit canonical_circuit(std::vector<EdgeId> cycle) {
    std::vector<EdgeId> best = cycle;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (cycle < best) best = cycle;
            std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
        }
        std::reverse(cycle.begin(), cycle.end());
    }
    return Circuit{std::move(best)};
}

}  // namespace detail

inline std::vector<Circuit> circuits(const FourRegularGraph& g, const CircuitPartition& p) {
    std::vector<Circuit> out;
    detail::for_each_circuit(g, p, [&](const std::vector<detail::Step>& steps) {
        std::vector<EdgeId> cycle;
        cycle.reserve(steps.size());
        for (const auto& s : steps) cycle.push_back(s.edge);
        out.push_back(detail::canonical_circuit(std::move(cycle)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t circuit_count(const FourRegularGraph& g, const CircuitPartition& p) {
    std::size_t count = 0;
    detail::for_each_circuit(g, p, [&](const auto&) { ++count; });
    return count;
}

inline bool is_euler_system(const FourRegularGraph& g, const CircuitPartition& p) {
    return circuit_count(g, p) == g.component_count();
}

inline bool supplementary(const CircuitPartition& p1, const CircuitPartition& p2) {
    detail::require(p1.size() == p2.size(), "partitions belong to different graphs");
    for (Vertex v = 0; v < p1.size(); ++v)
        if (p1.route(v) == p2.route(v)) return false;
    return true;
}

/// p with its route at v replaced by target's route at v.
inline CircuitPartition switch_route(const CircuitPartition& p, Vertex v, const CircuitPartition& target) {
    detail::require(v < p.size() && v < target.size(), "unknown vertex " + std::to_string(v));
    CircuitPartition out = p;
    out.set_route(v, target.route(v));
    return out;
}

/// p with routes replaced by target's at every vertex in `vertices`.
template <class Range>
CircuitPartition switch_routes(const CircuitPartition& p, const Range& vertices, const CircuitPartition& target) {
    CircuitPartition out = p;
    for (Vertex v : vertices) out = switch_route(out, v, target);
    return out;
}

/// The two partitions that differ from p only at v.
inline std::array<CircuitPartition, 2> other_routes(const CircuitPartition& p, Vertex v) {
    std::array<CircuitPartition, 2> out{p, p};
    unsigned k = 0;
    for (unsigned r = 0; r < 3; ++r)
        if (static_cast<Route>(r) != p.route(v)) out[k++].set_route(v, static_cast<Route>(r));
    return out;
}

// ---------------------------------------------------------------------------
// Encodings of genome pairs

/// A 4-regular multigraph together with the circuit partitions of two
/// genomes: pa follows the first genome's chromosomes, pb is the
/// supplementary partition whose real-segment circuits spell the second.
struct Encoding {
    FourRegularGraph graph;
    CircuitPartition pa;
    CircuitPartition pb;
    std::vector<bool> intermediate;  ///< per edge: inserted between segments
    std::size_t n = 0;               ///< segment count

    /// Circuits of pb made of intermediate segments.
    [[nodiscard]] std::size_t intermediate_circuits() const {
        std::size_t count = 0;
        detail::for_each_circuit(graph, pb, [&](const std::vector<detail::Step>& steps) {
            count += intermediate[steps.front().edge];
        });
        return count;
    }
};

/// Encoding of a framed signed permutation; vertex v_i joins segments i
/// and i+1 (v_0 and v_n meet the anchor).
struct PermEncoding : Encoding {
    /// c(pi) = |P_B| - 1
    [[nodiscard]] std::size_t cycles() const { return circuit_count(graph, pb) - 1; }
};

namespace detail {

inline std::size_t extremity(int marker, bool head) {
    return 2 * (static_cast<std::size_t>(std::abs(marker)) - 1) + (head ? 1 : 0);
}
inline std::size_t left_extremity(int m) { return extremity(m, m < 0); }
inline std::size_t right_extremity(int m) { return extremity(m, m > 0); }

/// Expands every (circular) chromosome of `chromosomes` with one
/// intermediate segment per adjacency and merges segment ends that share
/// a vertex under `vertex_of_extremity`.
inline Encoding build_encoding(const std::vector<std::vector<int>>& chromosomes,
                               const std::vector<Vertex>& vertex_of_extremity, std::size_t vertex_count,
                               const std::vector<std::string>& segment_labels,
                               std::vector<std::string> vertex_labels) {
    struct Half {
        Vertex v;
        bool real;
    };
    std::vector<Half> halves;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;  // indices into halves
    std::vector<std::string> labels;
    std::vector<bool> intermediate;
    std::vector<std::pair<std::size_t, std::size_t>> pa_pairs;  // consecutive halves in traversal

    std::size_t n_segments = 0;
    std::size_t next_intermediate = 1;
    for (const auto& chrom : chromosomes) {
        const std::size_t first_half = halves.size();
        for (std::size_t j = 0; j < chrom.size(); ++j) {
            const int x = chrom[j];
            const int y = chrom[(j + 1) % chrom.size()];
            const std::size_t tail = halves.size();
            halves.push_back({vertex_of_extremity[left_extremity(x)], true});
            halves.push_back({vertex_of_extremity[right_extremity(x)], true});
            arcs.emplace_back(tail, tail + 1);
            labels.push_back(segment_labels[static_cast<std::size_t>(std::abs(x)) - 1]);
            intermediate.push_back(false);
            const std::size_t itail = halves.size();
            halves.push_back({vertex_of_extremity[right_extremity(x)], false});
            halves.push_back({vertex_of_extremity[left_extremity(y)], false});
            arcs.emplace_back(itail, itail + 1);
            labels.push_back("I_" + std::to_string(next_intermediate++));
            intermediate.push_back(true);
            pa_pairs.emplace_back(tail + 1, itail);
            ++n_segments;
        }
        // close each intermediate's head against the following segment's tail
        for (std::size_t j = 0; j < chrom.size(); ++j) {
            const std::size_t ihead = first_half + 4 * j + 3;
            const std::size_t next_tail = first_half + 4 * ((j + 1) % chrom.size());
            pa_pairs.emplace_back(ihead, next_tail);
        }
    }

    // slots are handed out per vertex in creation order
    std::vector<unsigned> used(vertex_count, 0);
    std::vector<HalfEdge> slot(halves.size());
    for (std::size_t k = 0; k < halves.size(); ++k) {
        const Vertex v = halves[k].v;
        require(v < vertex_count && used[v] < 4, "extremity-to-vertex map is not 4-regular");
        slot[k] = half_edge(v, used[v]++);
    }

    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    for (const auto& [a, b] : arcs) edges.emplace_back(slot[a], slot[b]);

    std::vector<Route> pa(vertex_count), pb(vertex_count);
    for (const auto& [a, b] : pa_pairs) pa[halves[a].v] = route_pairing(slot_of(slot[a]), slot_of(slot[b]));

    std::vector<std::vector<unsigned>> real_slots(vertex_count);
    for (std::size_t k = 0; k < halves.size(); ++k)
        if (halves[k].real) real_slots[halves[k].v].push_back(slot_of(slot[k]));
    for (Vertex v = 0; v < vertex_count; ++v) {
        require(real_slots[v].size() == 2, "vertex does not join exactly two segment ends");
        pb[v] = route_pairing(real_slots[v][0], real_slots[v][1]);
    }

    Encoding enc;
    enc.graph = FourRegularGraph(vertex_count, edges, std::move(vertex_labels), std::move(labels));
    enc.pa = CircuitPartition(std::move(pa));
    enc.pb = CircuitPartition(std::move(pb));
    enc.intermediate = std::move(intermediate);
    enc.n = n_segments;
    return enc;
}

}  // namespace detail

/// Frames p with the anchor segment $ (running from v_n to v_0), inserts
/// intermediates I_1..I_{n+1} and merges equally labelled breakpoints.
inline PermEncoding encode_permutation(const SignedPermutation& p) {
    const std::size_t n = p.size();
    const int anchor = static_cast<int>(n + 1);
    std::vector<int> chrom{anchor};
    chrom.insert(chrom.end(), p.values().begin(), p.values().end());

    // the sorted chromosome (1, ..., n, $) names the breakpoints
    std::vector<Vertex> vertex_of_ext(2 * (n + 1));
    for (std::size_t i = 1; i <= n + 1; ++i) {
        const int m = static_cast<int>(i);
        vertex_of_ext[detail::extremity(m, true)] = i % (n + 1);
        vertex_of_ext[detail::extremity(m, false)] = i - 1;
    }
    std::vector<std::string> seg_labels;
    for (std::size_t i = 1; i <= n; ++i) seg_labels.push_back(std::to_string(i));
    seg_labels.push_back("$");
    std::vector<std::string> vlabels;
    for (std::size_t i = 0; i <= n; ++i) vlabels.push_back("v" + std::to_string(i));

    PermEncoding enc;
    static_cast<Encoding&>(enc) = detail::build_encoding({chrom}, vertex_of_ext, n + 1, seg_labels, std::move(vlabels));
    enc.n = n;
    return enc;
}

/// Both genomes circular-only over the same markers. Vertices are the
/// adjacencies of gb, numbered in chromosome order.
inline Encoding encode_circular_genomes(const Genome& ga, const Genome& gb_in) {
    detail::require(ga.all_circular() && gb_in.all_circular(),
                    "4-regular encoding requires circular chromosomes only");
    const Genome gb = relabel(gb_in, ga.names());
    const std::size_t n = ga.marker_count();
    std::vector<Vertex> vertex_of_ext(2 * n);
    std::vector<std::string> vlabels;
    Vertex next = 0;
    for (const auto& c : gb.chromosomes()) {
        for (std::size_t j = 0; j < c.markers.size(); ++j) {
            const int x = c.markers[j];
            const int y = c.markers[(j + 1) % c.markers.size()];
            vertex_of_ext[detail::right_extremity(x)] = next;
            vertex_of_ext[detail::left_extremity(y)] = next;
            vlabels.push_back(gb.marker_label(x) + "|" + gb.marker_label(y));
            ++next;
        }
    }
    std::vector<std::vector<int>> chroms;
    for (const auto& c : ga.chromosomes()) chroms.push_back(c.markers);
    return detail::build_encoding(chroms, vertex_of_ext, n, ga.names(), std::move(vlabels));
}

// ---------------------------------------------------------------------------
// Random instances

/// Configuration-model multigraph: the 4n slots are shuffled and paired.
inline FourRegularGraph random_four_regular(std::size_t n_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<HalfEdge> slots(4 * n_vertices);
    std::iota(slots.begin(), slots.end(), HalfEdge{0});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) edges.emplace_back(slots[i], slots[i + 1]);
    return FourRegularGraph(n_vertices, edges);
}

inline CircuitPartition random_circuit_partition(const FourRegularGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Route> routes(g.vertex_count());
    for (auto& r : routes) r = static_cast<Route>(rng() % 3);
    return CircuitPartition(std::move(routes));
}

/// Starts from random routes and merges circuits at shared vertices until
/// one circuit per component remains.
inline CircuitPartition random_euler_system(const FourRegularGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CircuitPartition p = random_circuit_partition(g, rng());
    const std::size_t target = g.component_count();
    for (;;) {
        std::vector<std::size_t> circuit_of(4 * g.vertex_count());
        std::size_t count = 0;
        detail::for_each_circuit(g, p, [&](const std::vector<detail::Step>& steps) {
            for (const auto& s : steps) circuit_of[s.arrival] = circuit_of[g.mate(s.arrival)] = count;
            ++count;
        });
        if (count == target) return p;
        std::vector<Vertex> joints;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const HalfEdge a = half_edge(v, 0);
            const HalfEdge b = half_edge(v, route_partner(p.route(v), 0) == 1 ? 2 : 1);
            if (circuit_of[a] != circuit_of[b]) joints.push_back(v);
        }
        const Vertex v = joints[rng() % joints.size()];
        p = other_routes(p, v)[rng() % 2];
    }
}

/// A partition taking, at every vertex, one of the two routes p does not.
inline CircuitPartition random_supplementary(const CircuitPartition& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CircuitPartition out = p;
    for (Vertex v = 0; v < p.size(); ++v) {
        const unsigned skip = 1 + static_cast<unsigned>(rng() % 2);
        out.set_route(v, static_cast<Route>((static_cast<unsigned>(p.route(v)) + skip) % 3));
    }
    return out;
}

}  // namespace revgraph
