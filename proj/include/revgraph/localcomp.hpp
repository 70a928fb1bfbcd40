#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "revgraph/error.hpp"
#include "revgraph/graphs.hpp"

namespace revgraph {

/// Ordered, repetition-free vertex sequence naming successive *_c steps.
using LcSequence = std::vector<Vertex>;

namespace detail {
inline void require_looped(const LoopedGraph& h, Vertex v) {
    require(v < h.vertex_count(), "unknown vertex " + std::to_string(v));
    require(h.has_loop(v), "local complementation requires a looped vertex, " + h.label(v) + " is unlooped");
}
}  // namespace detail

/// H*v: complements the subgraph induced by N(v), toggling the loops of
/// v's neighbours. Edges at v are untouched.
inline LoopedGraph local_complement(const LoopedGraph& h, Vertex v) {
    detail::require_looped(h, v);
    LoopedGraph out = h;
    const Bits nb = h.neighbors(v);
    for (auto u = nb.find_first(); u != Bits::npos; u = nb.find_next(u))
        for (auto w = u; w != Bits::npos; w = nb.find_next(w))
            out.toggle_edge(u, w);
    return out;
}

/// H *_c v: H*v with v isolated (loop removed).
inline LoopedGraph lc_strip(const LoopedGraph& h, Vertex v) {
    LoopedGraph out = local_complement(h, v);
    out.isolate(v);
    return out;
}

/// H|v: H *_c v with v deleted.
inline LoopedGraph lc_contract(const LoopedGraph& h, Vertex v) {
    const LoopedGraph stripped = lc_strip(h, v);
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < h.vertex_count(); ++w)
        if (w != v) keep.push_back(w);
    return induced_subgraph(stripped, keep);
}

/// Applies *_c along s; nullopt as soon as a vertex is unlooped at its turn
/// or repeats.
inline std::optional<LoopedGraph> apply_lc_sequence(const LoopedGraph& h, const LcSequence& s) {
    std::vector<bool> used(h.vertex_count(), false);
    LoopedGraph cur = h;
    for (Vertex v : s) {
        if (v >= h.vertex_count() || used[v] || !cur.has_loop(v)) return std::nullopt;
        used[v] = true;
        cur = lc_strip(cur, v);
    }
    return cur;
}

inline bool is_lc_sequence(const LoopedGraph& h, const LcSequence& s) {
    return apply_lc_sequence(h, s).has_value();
}

inline bool is_full(const LoopedGraph& h, const LcSequence& s) {
    auto end = apply_lc_sequence(h, s);
    return end && end->is_edgeless();
}

struct NeighborhoodSplit {
    std::vector<Vertex> looped_neighbors;
    std::vector<Vertex> unlooped_neighbors;
    int score = 0;  ///< |unlooped| - |looped|
};

inline NeighborhoodSplit neighborhood_split(const LoopedGraph& h, Vertex v) {
    NeighborhoodSplit s;
    const Bits nb = h.neighbors(v);
    for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w))
        (h.has_loop(w) ? s.looped_neighbors : s.unlooped_neighbors).push_back(w);
    s.score = static_cast<int>(s.unlooped_neighbors.size()) - static_cast<int>(s.looped_neighbors.size());
    return s;
}

/// MS(H): looped vertices whose score is at least that of each looped
/// neighbour. Sorted ascending.
inline std::vector<Vertex> ms_set(const LoopedGraph& h) {
    std::vector<int> score(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) score[v] = neighborhood_split(h, v).score;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (!h.has_loop(v)) continue;
        const auto split = neighborhood_split(h, v);
        if (std::all_of(split.looped_neighbors.begin(), split.looped_neighbors.end(),
                        [&](Vertex w) { return score[w] <= score[v]; }))
            out.push_back(v);
    }
    return out;
}

/// True iff every loopless connected component is a single isolated vertex.
inline bool has_full_lc_sequence(const LoopedGraph& h) {
    for (const auto& comp : connected_components(h)) {
        if (comp.size() == 1) continue;
        if (std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return h.has_loop(v); })) return false;
    }
    return true;
}

/// The vertex the greedy strategy strips next: the lowest MS member inside
/// the first component that still has an edge or loop. nullopt once H is
/// edgeless.
inline std::optional<Vertex> next_greedy_vertex(const LoopedGraph& h) {
    const auto ms = ms_set(h);
    for (const auto& comp : connected_components(h)) {
        if (comp.size() == 1 && h.is_isolated(comp.front())) continue;
        for (Vertex v : comp)
            if (std::binary_search(ms.begin(), ms.end(), v)) return v;
        throw Error("component of " + h.label(comp.front()) + " has no MS vertex; the criterion does not hold");
    }
    return std::nullopt;
}

/// A full lc-sequence built greedily from MS choices, or nullopt when some
/// loopless component has more than one vertex.
inline std::optional<LcSequence> find_full_lc_sequence(const LoopedGraph& h) {
    if (!has_full_lc_sequence(h)) return std::nullopt;
    LcSequence seq;
    LoopedGraph cur = h;
    while (auto v = next_greedy_vertex(cur)) {
        seq.push_back(*v);
        cur = lc_strip(cur, *v);
    }
    return seq;
}

}  // namespace revgraph
