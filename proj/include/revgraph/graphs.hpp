#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "revgraph/error.hpp"
#include "revgraph/fourreg.hpp"

namespace revgraph {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Matrix over GF(2) with rows and columns indexed by labelled sets.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, Bits(cols)), cols_(cols) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }
    [[nodiscard]] const Bits& row(std::size_t r) const { return rows_.at(r); }

    [[nodiscard]] bool is_symmetric() const {
        if (rows() != cols()) return false;
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (get(r, c) != get(c, r)) return false;
        return true;
    }

    /// Gaussian elimination on a private copy, pivoting on the lowest
    /// nonzero column.
    [[nodiscard]] std::size_t rank() const {
        std::vector<Bits> work = rows_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < work.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
            if (pivot == work.size()) continue;
            std::swap(work[rank], work[pivot]);
            for (std::size_t r = 0; r < work.size(); ++r)
                if (r != rank && work[r].test(col)) work[r] ^= work[rank];
            ++rank;
        }
        return rank;
    }

    /// Dimension of the kernel (columns minus rank).
    [[nodiscard]] std::size_t nullity() const { return cols_ - rank(); }

    [[nodiscard]] bool invertible() const { return rows() == cols_ && rank() == cols_; }

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::vector<Bits> rows_;
    std::size_t cols_ = 0;
};

inline std::size_t rank(const Gf2Matrix& m) { return m.rank(); }
inline std::size_t nullity(const Gf2Matrix& m) { return m.nullity(); }

/// Simple graph that may carry loops: one symmetric bit row per vertex,
/// the diagonal marking loops.
class LoopedGraph {
public:
    LoopedGraph() = default;

    explicit LoopedGraph(std::size_t n, std::vector<std::string> labels = {})
        : adj_(n, Bits(n)), labels_(std::move(labels)) {
        if (labels_.empty())
            for (std::size_t v = 0; v < n; ++v) labels_.push_back("v" + std::to_string(v));
        detail::require(labels_.size() == n, "label count mismatch");
    }

    /// Builds the graph whose adjacency matrix is m (must be symmetric).
    static LoopedGraph from_matrix(const Gf2Matrix& m, std::vector<std::string> labels = {}) {
        detail::require(m.is_symmetric(), "adjacency matrix must be square and symmetric");
        LoopedGraph h(m.rows(), std::move(labels));
        for (std::size_t r = 0; r < m.rows(); ++r) h.adj_[r] = m.row(r);
        return h;
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size(); }
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_.at(v); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    [[nodiscard]] bool has_edge(Vertex u, Vertex w) const { return adj_.at(u).test(w); }
    [[nodiscard]] bool has_loop(Vertex v) const { return has_edge(v, v); }

    void set_edge(Vertex u, Vertex w, bool present = true) {
        check(u);
        check(w);
        adj_[u].set(w, present);
        adj_[w].set(u, present);
    }
    void add_edge(Vertex u, Vertex w) { set_edge(u, w, true); }
    void add_loop(Vertex v) { set_edge(v, v, true); }
    void toggle_edge(Vertex u, Vertex w) { set_edge(u, w, !has_edge(u, w)); }

    /// Open neighbourhood N(v): adjacent vertices other than v itself.
    [[nodiscard]] Bits neighbors(Vertex v) const {
        check(v);
        Bits n = adj_[v];
        n.reset(v);
        return n;
    }
    [[nodiscard]] const Bits& row(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] Bits loops() const {
        Bits l(vertex_count());
        for (Vertex v = 0; v < vertex_count(); ++v) l.set(v, has_loop(v));
        return l;
    }

    /// No edges and no loops.
    [[nodiscard]] bool is_edgeless() const {
        return std::all_of(adj_.begin(), adj_.end(), [](const Bits& b) { return b.none(); });
    }
    [[nodiscard]] bool is_isolated(Vertex v) const { return adj_.at(v).none(); }

    /// Loops plus non-loop edges.
    [[nodiscard]] std::size_t edge_count() const {
        std::size_t twice = 0, loops = 0;
        for (Vertex v = 0; v < vertex_count(); ++v) {
            twice += adj_[v].count();
            loops += has_loop(v);
        }
        return (twice - loops) / 2 + loops;
    }

    /// Removes every edge at v, including its loop.
    void isolate(Vertex v) {
        check(v);
        for (Vertex w = 0; w < vertex_count(); ++w) adj_[w].reset(v);
        adj_[v].reset();
    }

    friend bool operator==(const LoopedGraph&, const LoopedGraph&) = default;

private:
    void check(Vertex v) const {
        detail::require(v < adj_.size(), "unknown vertex " + std::to_string(v));
    }

    std::vector<Bits> adj_;
    std::vector<std::string> labels_;
};

inline Gf2Matrix adjacency_matrix(const LoopedGraph& h) {
    Gf2Matrix m(h.vertex_count(), h.vertex_count());
    for (Vertex r = 0; r < h.vertex_count(); ++r)
        for (Vertex c = 0; c < h.vertex_count(); ++c)
            if (h.has_edge(r, c)) m.set(r, c);
    return m;
}

/// Keeps the vertices in `keep` (in the given order) and every edge among them.
inline LoopedGraph induced_subgraph(const LoopedGraph& h, const std::vector<Vertex>& keep) {
    std::vector<std::string> labels;
    for (Vertex v : keep) {
        detail::require(v < h.vertex_count(), "unknown vertex " + std::to_string(v));
        labels.push_back(h.label(v));
    }
    LoopedGraph out(keep.size(), std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i; j < keep.size(); ++j)
            if (h.has_edge(keep[i], keep[j])) out.add_edge(i, j);
    return out;
}

/// Components in order of their lowest vertex; loops connect nothing.
inline std::vector<std::vector<Vertex>> connected_components(const LoopedGraph& h) {
    const std::size_t n = h.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            const Bits nb = h.neighbors(comp[k]);
            for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Matrix display with a row and column border of labels.
inline std::string format_matrix(const Gf2Matrix& m, const std::vector<std::string>& labels) {
    std::size_t w = 1;
    for (const auto& l : labels) w = std::max(w, l.size());
    std::ostringstream os;
    os << std::setw(static_cast<int>(w)) << "";
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << std::setw(static_cast<int>(w)) << labels.at(c);
    os << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << std::setw(static_cast<int>(w)) << labels.at(r);
        for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << std::setw(static_cast<int>(w)) << m.get(r, c);
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Circle graphs

/// One cyclic word per connected component of the 4-regular graph, listing
/// the vertex visits of the Euler circuit; every vertex occurs twice.
struct ChordDiagram {
    std::vector<std::vector<Vertex>> words;
};

inline ChordDiagram chord_diagram(const FourRegularGraph& g, const CircuitPartition& euler) {
    detail::require(is_euler_system(g, euler), "chord diagram requires an Euler system");
    ChordDiagram d;
    detail::for_each_circuit(g, euler, [&](const std::vector<detail::Step>& steps) {
        std::vector<Vertex> word;
        word.reserve(steps.size());
        for (const auto& s : steps) word.push_back(vertex_of(s.arrival));
        d.words.push_back(std::move(word));
    });
    return d;
}

/// Chords u and w interlace iff exactly one occurrence of w lies strictly
/// between the two occurrences of u.
inline bool interlaced(const std::vector<Vertex>& word, Vertex u, Vertex w) {
    bool inside = false;
    int between = 0;
    for (Vertex x : word) {
        if (x == u) inside = !inside;
        else if (x == w && inside) ++between;
    }
    return between == 1;
}

/// Vertex v is oriented for p1 with respect to p2 when adopting p2's route
/// at v alone keeps p1 an Euler system.
inline bool is_oriented(const FourRegularGraph& g, const CircuitPartition& p1, const CircuitPartition& p2, Vertex v) {
    return is_euler_system(g, switch_route(p1, v, p2));
}

/// Interlacement graph of p1's Euler circuits, looped at oriented vertices.
inline LoopedGraph circle_graph(const FourRegularGraph& g, const CircuitPartition& p1, const CircuitPartition& p2) {
    detail::require_compatible(g, p1);
    detail::require_compatible(g, p2);
    detail::require(supplementary(p1, p2), "circuit partitions are not supplementary");
    detail::require(is_euler_system(g, p1), "first circuit partition is not an Euler system");

    LoopedGraph h(g.vertex_count(), g.vertex_labels());
    for (const auto& word : chord_diagram(g, p1).words) {
        std::vector<Vertex> verts(word);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (interlaced(word, verts[i], verts[j])) h.add_edge(verts[i], verts[j]);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (is_oriented(g, p1, p2, v)) h.add_loop(v);
    return h;
}

/// H_pi, the circle graph of G_pi with respect to P_A and P_B.
inline LoopedGraph circle_graph(const Encoding& enc) { return circle_graph(enc.graph, enc.pa, enc.pb); }

}  // namespace revgraph
