#pragma once

// Helpers shared by the unit tests and the acceptance runner. The matrix
// routines here are written against plain nested vectors so they do not
// share code with the library's bitset elimination.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "revgraph/revgraph.hpp"

namespace testsupport {

using Dense = std::vector<std::vector<int>>;

inline const revgraph::SignedPermutation& running_example() {
    static const revgraph::SignedPermutation p({1, -6, 7, 4, -2, -5, 3});
    return p;
}

/// A(H_pi) of the running example, row by row.
inline Dense running_example_matrix() {
    return {{0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0},
            {0, 1, 1, 0, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 0, 1, 0, 0}};
}

inline Dense dense(const revgraph::LoopedGraph& h) {
    Dense m(h.vertex_count(), std::vector<int>(h.vertex_count(), 0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) m[r][c] = h.has_edge(r, c) ? 1 : 0;
    return m;
}

/// Row reduction mod 2 on a copy.
inline std::size_t dense_rank(Dense m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r][c])
                for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

/// Principal pivot transform at {v} for a_vv = 1: with v's row b and the
/// rest C, the result is [[1, b^T], [b, C + b b^T]] in the original order.
inline Dense pivot_at(const Dense& a, std::size_t v) {
    Dense out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != v && j != v) out[i][j] = a[i][j] ^ (a[i][v] & a[v][j]);
    return out;
}

/// Schur complement C + b b^T of A at {v}, v removed.
inline Dense schur_at(const Dense& a, std::size_t v) {
    Dense out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == v) continue;
        std::vector<int> row;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != v) row.push_back(a[i][j] ^ (a[i][v] & a[v][j]));
        out.push_back(std::move(row));
    }
    return out;
}

/// Each pair is an edge with probability p, each vertex looped with probability q.
inline revgraph::LoopedGraph random_graph(std::size_t n, double p, double q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p), loop(q);
    revgraph::LoopedGraph h(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (loop(rng)) h.add_loop(u);
        for (std::size_t w = u + 1; w < n; ++w)
            if (edge(rng)) h.add_edge(u, w);
    }
    return h;
}

/// Random genome over markers 1..n with a random mix of chromosome shapes.
inline revgraph::Genome random_genome(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i + 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution flip(0.5), cut(0.35), circ(0.4);
    std::vector<revgraph::Chromosome> chroms;
    std::vector<int> cur;
    for (std::size_t i = 0; i < n; ++i) {
        cur.push_back(flip(rng) ? -order[i] : order[i]);
        if (i + 1 == n || cut(rng)) {
            chroms.push_back({circ(rng) ? revgraph::Shape::circular : revgraph::Shape::linear, cur});
            cur.clear();
        }
    }
    return revgraph::Genome::numbered(std::move(chroms));
}

/// Random genome built from circular chromosomes only.
inline revgraph::Genome random_circular_genome(std::size_t n, std::mt19937_64& rng) {
    revgraph::Genome g = random_genome(n, rng);
    std::vector<revgraph::Chromosome> chroms = g.chromosomes();
    for (auto& c : chroms) c.shape = revgraph::Shape::circular;
    return revgraph::Genome(g.names(), std::move(chroms));
}

/// Family of D_H by brute force over dense principal submatrices.
inline std::vector<std::uint32_t> dense_family(const revgraph::LoopedGraph& h) {
    const Dense a = dense(h);
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < (1U << a.size()); ++x) {
        Dense sub;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!(x & (1U << i))) continue;
            std::vector<int> row;
            for (std::size_t j = 0; j < a.size(); ++j)
                if (x & (1U << j)) row.push_back(a[i][j]);
            sub.push_back(std::move(row));
        }
        if (dense_rank(sub) == sub.size()) out.push_back(x);
    }
    return out;
}

}  // namespace testsupport
