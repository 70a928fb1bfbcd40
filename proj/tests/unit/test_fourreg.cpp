#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "revgraph/fourreg.hpp"
#include "revgraph/oracle.hpp"
#include "support.hpp"

using namespace revgraph;

namespace {

std::vector<std::string> labels_of(const FourRegularGraph& g, const Circuit& c) {
    std::vector<std::string> out;
    for (EdgeId e : c.edges) out.push_back(g.edge_label(e));
    return out;
}

bool is_cyclic_reading(std::vector<std::string> seq, const std::vector<std::string>& target) {
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq == target) return true;
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
        }
        std::reverse(seq.begin(), seq.end());
    }
    return false;
}

}  // namespace

TEST(Encoding, RunningExampleShape) {
    const auto enc = encode_permutation(testsupport::running_example());
    EXPECT_EQ(enc.graph.vertex_count(), 8U);
    EXPECT_EQ(enc.graph.edge_count(), 16U);
    EXPECT_EQ(circuit_count(enc.graph, enc.pa), 1U);
    EXPECT_EQ(circuit_count(enc.graph, enc.pb), 5U);
    EXPECT_EQ(enc.cycles(), 4U);
    EXPECT_EQ(enc.intermediate_circuits(), 4U);
    for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(enc.graph.degree(v), 4U);
    EXPECT_EQ(enc.graph.vertex_label(0), "v0");
    EXPECT_EQ(enc.graph.vertex_label(7), "v7");
}

TEST(Encoding, RunningExampleCircuits) {
    const auto enc = encode_permutation(testsupport::running_example());
    const auto pa = circuits(enc.graph, enc.pa);
    ASSERT_EQ(pa.size(), 1U);
    EXPECT_EQ(pa[0].edges.size(), 16U);

    const auto pb = circuits(enc.graph, enc.pb);
    std::size_t intermediate_only = 0, real = 0;
    for (const auto& c : pb) {
        const auto labels = labels_of(enc.graph, c);
        const bool all_i = std::all_of(labels.begin(), labels.end(), [](const std::string& s) { return s[0] == 'I'; });
        if (all_i) {
            ++intermediate_only;
        } else {
            ++real;
            EXPECT_TRUE(is_cyclic_reading(labels, {"1", "2", "3", "4", "5", "6", "7", "$"}));
        }
    }
    EXPECT_EQ(intermediate_only, 4U);
    EXPECT_EQ(real, 1U);
}

TEST(Encoding, EdgeLabelsCoverSegmentsAndIntermediates) {
    const auto enc = encode_permutation(testsupport::running_example());
    std::set<std::string> labels(enc.graph.edge_labels().begin(), enc.graph.edge_labels().end());
    for (int k = 1; k <= 7; ++k) EXPECT_TRUE(labels.count(std::to_string(k)));
    for (int k = 1; k <= 8; ++k) EXPECT_TRUE(labels.count("I_" + std::to_string(k)));
    EXPECT_TRUE(labels.count("$"));
}

TEST(Encoding, SingleSegment) {
    const auto enc = encode_permutation(SignedPermutation({1}));
    EXPECT_EQ(enc.graph.vertex_count(), 2U);
    EXPECT_EQ(enc.graph.edge_count(), 4U);
    EXPECT_EQ(circuit_count(enc.graph, enc.pb), 3U);
    EXPECT_EQ(enc.cycles(), 2U);
}

TEST(Encoding, EmptyPermutation) {
    const auto enc = encode_permutation(SignedPermutation());
    EXPECT_EQ(enc.graph.vertex_count(), 1U);
    EXPECT_EQ(enc.graph.edge_count(), 2U);
    EXPECT_EQ(circuit_count(enc.graph, enc.pb), 2U);
    EXPECT_EQ(enc.cycles(), 1U);
}

TEST(Encoding, InvariantsForAllSmallPermutations) {
    for (std::size_t n = 0; n <= 5; ++n) {
        for_each_signed_permutation(n, [&](const SignedPermutation& p) {
            const auto enc = encode_permutation(p);
            ASSERT_TRUE(is_euler_system(enc.graph, enc.pa)) << to_string(p);
            ASSERT_TRUE(supplementary(enc.pa, enc.pb)) << to_string(p);
            ASSERT_EQ(enc.cycles(), enc.intermediate_circuits()) << to_string(p);
        });
    }
}

TEST(Encoding, IdentityHasOneCyclePerIntermediate) {
    for (std::size_t n = 0; n <= 9; ++n) EXPECT_EQ(encode_permutation(SignedPermutation::identity(n)).cycles(), n + 1);
}

TEST(Encoding, ReversalChangesCyclesByAtMostOne) {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t k = 0;
        for_each_signed_permutation(n, [&](const SignedPermutation& p) {
            if (n == 6 && ++k % 7 != 0) return;  // n = 6 sampled
            const auto c = static_cast<long>(encode_permutation(p).cycles());
            for (const auto& r : all_intervals(n)) {
                const auto c2 = static_cast<long>(encode_permutation(apply_reversal(p, r)).cycles());
                ASSERT_LE(std::abs(c2 - c), 1) << to_string(p) << " " << r;
            }
        });
    }
}

TEST(Encoding, CircularGenomesEqual) {
    const Genome g = parse_genome("C: 1 2");
    const auto enc = encode_circular_genomes(g, g);
    EXPECT_EQ(enc.graph.vertex_count(), 2U);
    EXPECT_EQ(enc.intermediate_circuits(), 2U);
    EXPECT_TRUE(is_euler_system(enc.graph, enc.pa));
    EXPECT_TRUE(supplementary(enc.pa, enc.pb));
}

TEST(Encoding, CircularGenomesMatchOracle) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"C: 1 -2", "C: 1 2"}, {"C: 1 2 3", "C: 1 3 2"}, {"C: 1 2; C: 3", "C: 1 3 2"}, {"C: 1 -2 3 4", "C: 4 3; C: 2 1"}};
    for (const auto& [a, b] : pairs) {
        const Genome ga = parse_genome(a);
        const Genome gb = relabel(parse_genome(b), ga.names());
        const auto enc = encode_circular_genomes(ga, gb);
        EXPECT_EQ(ga.marker_count() - enc.intermediate_circuits(), brute_dcj_distance(ga, gb).distance) << a << " / " << b;
    }
}

TEST(Encoding, CircularGenomesRejectLinear) {
    EXPECT_THROW(encode_circular_genomes(parse_genome("L: 1 2"), parse_genome("C: 1 2")), Error);
    EXPECT_THROW(encode_circular_genomes(parse_genome("C: 1 2"), parse_genome("C: 1 3")), Error);
}

TEST(FourRegular, RejectsMalformedPairings) {
    EXPECT_THROW(FourRegularGraph(1, {{0, 1}}), Error);
    EXPECT_THROW(FourRegularGraph(1, {{0, 1}, {1, 2}}), Error);
    EXPECT_THROW(FourRegularGraph(1, {{0, 0}, {2, 3}}), Error);
    EXPECT_THROW(FourRegularGraph(1, {{0, 1}, {2, 4}}), Error);
}

TEST(FourRegular, SingleDoubleLoopVertex) {
    const FourRegularGraph g(1, {{0, 1}, {2, 3}});
    EXPECT_EQ(g.degree(0), 4U);
    EXPECT_EQ(circuits(g, CircuitPartition::uniform(1, Route::pair01_23)).size(), 2U);
    EXPECT_EQ(circuits(g, CircuitPartition::uniform(1, Route::pair02_13)).size(), 1U);
}

TEST(FourRegular, EmptyGraph) {
    const FourRegularGraph g(0, {});
    EXPECT_TRUE(is_euler_system(g, CircuitPartition::uniform(0, Route::pair01_23)));
    EXPECT_EQ(random_four_regular(0, 7).vertex_count(), 0U);
}

TEST(FourRegular, RandomIsDeterministicAndRegular) {
    const auto a = random_four_regular(5, 42);
    const auto b = random_four_regular(5, 42);
    EXPECT_EQ(a, b);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(a.degree(v), 4U);
}

TEST(FourRegular, RandomPartitionsSatisfyInvariants) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto g = random_four_regular(1 + seed % 8, seed);
        const auto p1 = random_euler_system(g, seed * 3);
        const auto p2 = random_supplementary(p1, seed * 5);
        ASSERT_TRUE(is_euler_system(g, p1));
        ASSERT_TRUE(supplementary(p1, p2));
    }
}

TEST(FourRegular, EveryEdgeInExactlyOneCircuit) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto g = random_four_regular(1 + seed % 8, seed);
        const auto p = random_circuit_partition(g, seed);
        std::vector<int> hits(g.edge_count(), 0);
        for (const auto& c : circuits(g, p))
            for (EdgeId e : c.edges) ++hits[e];
        for (int h : hits) ASSERT_EQ(h, 1);
    }
}

TEST(FourRegular, RouteSwitchLaw) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto g = random_four_regular(1 + seed % 8, seed);
        const auto p = random_circuit_partition(g, seed + 1000);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const auto others = other_routes(p, v);
            std::vector<std::size_t> sizes{circuit_count(g, p), circuit_count(g, others[0]), circuit_count(g, others[1])};
            std::sort(sizes.begin(), sizes.end());
            ASSERT_EQ(sizes[0], sizes[1]);
            ASSERT_EQ(sizes[2], sizes[0] + 1);
        }
    }
}

TEST(FourRegular, Supplementary) {
    const auto enc = encode_permutation(testsupport::running_example());
    EXPECT_TRUE(supplementary(enc.pa, enc.pb));
    EXPECT_FALSE(supplementary(enc.pa, enc.pa));
    CircuitPartition almost = enc.pb;
    almost.set_route(3, enc.pa.route(3));
    EXPECT_FALSE(supplementary(enc.pa, almost));
}

TEST(FourRegular, SwitchRouteOnRunningExample) {
    const auto enc = encode_permutation(testsupport::running_example());
    EXPECT_TRUE(is_euler_system(enc.graph, switch_route(enc.pa, 1, enc.pb)));
    EXPECT_FALSE(is_euler_system(enc.graph, switch_route(enc.pa, 3, enc.pb)));
    const auto once = switch_route(enc.pa, 2, enc.pb);
    EXPECT_EQ(switch_route(once, 2, enc.pb), once);
    EXPECT_THROW(switch_route(enc.pa, 8, enc.pb), Error);
    EXPECT_FALSE(is_euler_system(enc.graph, enc.pb));
}

TEST(FourRegular, CircuitsAreCanonical) {
    const auto enc = encode_permutation(testsupport::running_example());
    const auto c1 = circuits(enc.graph, enc.pb);
    auto c2 = c1;
    std::sort(c2.begin(), c2.end());
    EXPECT_EQ(c1, c2);
    for (const auto& c : c1) EXPECT_EQ(detail::canonical_circuit(c.edges), c);
}
