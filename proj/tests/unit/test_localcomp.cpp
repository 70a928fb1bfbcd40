#include <algorithm>

#include <gtest/gtest.h>

#include "revgraph/localcomp.hpp"
#include "support.hpp"

using namespace revgraph;

namespace {

LoopedGraph running_graph() { return circle_graph(encode_permutation(testsupport::running_example())); }

/// Exhaustive search for a full lc-sequence, independent of the criterion.
bool full_sequence_exists(const LoopedGraph& h) {
    if (h.is_edgeless()) return true;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.has_loop(v) && full_sequence_exists(lc_strip(h, v))) return true;
    return false;
}

LoopedGraph graph_from_mask(std::size_t n, std::uint32_t mask) {
    LoopedGraph h(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u; w < n; ++w, ++bit)
            if (mask & (1U << bit)) h.add_edge(u, w);
    return h;
}

}  // namespace

TEST(LocalComplement, PendantExample) {
    LoopedGraph h(2);
    h.add_loop(0);
    h.add_edge(0, 1);
    const auto out = local_complement(h, 0);
    EXPECT_TRUE(out.has_loop(0));
    EXPECT_TRUE(out.has_loop(1));
    EXPECT_TRUE(out.has_edge(0, 1));
}

TEST(LocalComplement, RequiresLoop) {
    const auto h = running_graph();
    EXPECT_THROW(local_complement(h, 3), Error);
    EXPECT_THROW(lc_strip(h, 0), Error);
    EXPECT_THROW(lc_contract(h, 7), Error);
    EXPECT_THROW(local_complement(h, 8), Error);
}

TEST(LocalComplement, IsInvolution) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto h = testsupport::random_graph(1 + seed % 10, 0.45, 0.5, seed);
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (h.has_loop(v)) {
                ASSERT_EQ(local_complement(local_complement(h, v), v), h);
            }
    }
}

TEST(LocalComplement, MatchesPrincipalPivotTransform) {
    const auto h = running_graph();
    EXPECT_EQ(testsupport::dense(local_complement(h, 1)), testsupport::pivot_at(testsupport::running_example_matrix(), 1));
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto g = testsupport::random_graph(1 + seed % 10, 0.5, 0.5, seed);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.has_loop(v)) {
                ASSERT_EQ(testsupport::dense(local_complement(g, v)), testsupport::pivot_at(testsupport::dense(g), v));
            }
    }
}

TEST(LcContract, MatchesSchurComplement) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto g = testsupport::random_graph(1 + seed % 10, 0.5, 0.5, seed);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.has_loop(v)) {
                ASSERT_EQ(testsupport::dense(lc_contract(g, v)), testsupport::schur_at(testsupport::dense(g), v));
            }
    }
}

TEST(LcStrip, SingleLoop) {
    LoopedGraph h(1);
    h.add_loop(0);
    const auto s = lc_strip(h, 0);
    EXPECT_EQ(s.vertex_count(), 1U);
    EXPECT_TRUE(s.is_edgeless());
    EXPECT_EQ(lc_contract(h, 0).vertex_count(), 0U);
}

TEST(LcStrip, RankAndNullityLaws) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto g = testsupport::random_graph(1 + seed % 10, 0.4, 0.5, seed);
        const auto a = adjacency_matrix(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!g.has_loop(v)) continue;
            ASSERT_EQ(rank(adjacency_matrix(lc_strip(g, v))) + 1, rank(a));
            ASSERT_EQ(nullity(adjacency_matrix(lc_contract(g, v))), nullity(a));
        }
    }
}

TEST(LcSequence, RunningExample) {
    const auto h = running_graph();
    const auto seq = find_full_lc_sequence(h);
    ASSERT_TRUE(seq.has_value());
    EXPECT_EQ(seq->size(), 4U);
    EXPECT_TRUE(is_lc_sequence(h, *seq));
    EXPECT_TRUE(is_full(h, *seq));
    EXPECT_FALSE(is_lc_sequence(h, {3}));
    EXPECT_FALSE(is_lc_sequence(h, {1, 1}));
    EXPECT_TRUE(has_full_lc_sequence(h));
}

TEST(LcSequence, EveryFullSequenceOnRunningExampleHasLengthFour) {
    const auto h = running_graph();
    std::size_t found = 0;
    std::vector<Vertex> seq;
    std::function<void(const LoopedGraph&)> dfs = [&](const LoopedGraph& cur) {
        if (cur.is_edgeless()) {
            ++found;
            ASSERT_EQ(seq.size(), 4U);
            return;
        }
        for (Vertex v = 0; v < cur.vertex_count(); ++v) {
            if (!cur.has_loop(v)) continue;
            seq.push_back(v);
            dfs(lc_strip(cur, v));
            seq.pop_back();
        }
    };
    dfs(h);
    EXPECT_GT(found, 0U);
}

TEST(LcSequence, TrivialCases) {
    const LoopedGraph edgeless(3);
    EXPECT_TRUE(is_full(edgeless, {}));
    EXPECT_EQ(find_full_lc_sequence(edgeless), LcSequence{});
    LoopedGraph pair(2);
    pair.add_edge(0, 1);
    EXPECT_FALSE(find_full_lc_sequence(pair).has_value());
    EXPECT_FALSE(has_full_lc_sequence(pair));
    LoopedGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_FALSE(has_full_lc_sequence(path));
    EXPECT_TRUE(has_full_lc_sequence(LoopedGraph(1)));
}

TEST(MsSet, Examples) {
    LoopedGraph one(3);
    one.add_loop(1);
    one.add_edge(0, 1);
    EXPECT_EQ(ms_set(one), std::vector<Vertex>{1});

    // v0 looped with two unlooped neighbours (s = 2), v1 looped leaf next to v0 (s = -1)
    LoopedGraph two(4);
    two.add_loop(0);
    two.add_loop(1);
    two.add_edge(0, 1);
    two.add_edge(0, 2);
    two.add_edge(0, 3);
    const auto split = neighborhood_split(two, 0);
    EXPECT_EQ(split.looped_neighbors, std::vector<Vertex>{1});
    EXPECT_EQ(split.unlooped_neighbors, (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(split.score, 1);
    const auto ms = ms_set(two);
    EXPECT_TRUE(std::binary_search(ms.begin(), ms.end(), Vertex{0}));
    EXPECT_FALSE(std::binary_search(ms.begin(), ms.end(), Vertex{1}));
}

TEST(MsSet, RunningExample) {
    const auto ms = ms_set(running_graph());
    EXPECT_FALSE(ms.empty());
    for (Vertex v : ms) EXPECT_TRUE(v == 1 || v == 2 || v == 4 || v == 6) << v;
}

TEST(MsSet, NonemptyWheneverLoopsExist) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto g = testsupport::random_graph(1 + seed % 12, 0.4, 0.4, seed);
        if (!g.loops().none()) {
            ASSERT_FALSE(ms_set(g).empty());
        }
    }
}

TEST(Criterion, AgreesWithExhaustiveSearchUpToFourVertices) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t bits = n * (n + 1) / 2;
        for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
            const auto h = graph_from_mask(n, mask);
            const bool exists = full_sequence_exists(h);
            ASSERT_EQ(has_full_lc_sequence(h), exists) << n << " " << mask;
            const auto seq = find_full_lc_sequence(h);
            ASSERT_EQ(seq.has_value(), exists);
            if (seq) {
                ASSERT_TRUE(is_full(h, *seq));
                ASSERT_EQ(seq->size(), rank(adjacency_matrix(h)));
            }
        }
    }
}

TEST(Criterion, AgreesWithExhaustiveSearchOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const auto h = testsupport::random_graph(5 + seed % 4, 0.35, 0.3, seed);
        const bool exists = full_sequence_exists(h);
        ASSERT_EQ(has_full_lc_sequence(h), exists) << seed;
        const auto seq = find_full_lc_sequence(h);
        ASSERT_EQ(seq.has_value(), exists);
        if (seq) {
            ASSERT_TRUE(is_full(h, *seq));
            ASSERT_EQ(seq->size(), rank(adjacency_matrix(h)));
        }
    }
}

TEST(Criterion, GreedyOnLargerRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto h = testsupport::random_graph(10 + seed % 5, 0.3, 0.5, seed);
        const auto seq = find_full_lc_sequence(h);
        ASSERT_EQ(seq.has_value(), has_full_lc_sequence(h));
        if (seq) {
            ASSERT_TRUE(is_full(h, *seq));
            ASSERT_EQ(seq->size(), rank(adjacency_matrix(h)));
        }
    }
}

TEST(Criterion, ContractionComponentLemma) {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const auto h = testsupport::random_graph(3 + seed % 6, 0.5, 0.5, seed);
        if (connected_components(h).size() != 1) continue;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            if (!h.has_loop(v)) continue;
            const auto split_v = neighborhood_split(h, v);
            const auto contracted = lc_contract(h, v);
            // contracted vertex i is original vertex i (+1 past v)
            auto original = [&](Vertex i) { return i < v ? i : i + 1; };
            for (const auto& comp : connected_components(contracted)) {
                if (comp.size() == 1 && contracted.is_isolated(comp[0])) continue;
                if (std::any_of(comp.begin(), comp.end(), [&](Vertex i) { return contracted.has_loop(i); })) continue;
                std::vector<Vertex> meet;
                for (Vertex i : comp) {
                    const Vertex w = original(i);
                    if (std::find(split_v.looped_neighbors.begin(), split_v.looped_neighbors.end(), w) !=
                        split_v.looped_neighbors.end())
                        meet.push_back(w);
                }
                ASSERT_FALSE(meet.empty()) << seed;
                for (Vertex w : meet) {
                    const auto split_w = neighborhood_split(h, w);
                    for (Vertex x : split_v.unlooped_neighbors)
                        ASSERT_TRUE(std::count(split_w.unlooped_neighbors.begin(), split_w.unlooped_neighbors.end(), x))
                            << seed;
                    for (Vertex x : split_w.looped_neighbors) {
                        if (x == v || x == w) continue;
                        ASSERT_TRUE(std::count(split_v.looped_neighbors.begin(), split_v.looped_neighbors.end(), x))
                            << seed;
                    }
                }
            }
        }
    }
}
