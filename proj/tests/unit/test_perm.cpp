#include <gtest/gtest.h>

#include "revgraph/genome.hpp"
#include "revgraph/oracle.hpp"
#include "revgraph/perm.hpp"
#include "support.hpp"

using namespace revgraph;

TEST(Permutation, ParsesRunningExample) {
    EXPECT_EQ(parse_permutation("1,-6,7,4,-2,-5,3"), testsupport::running_example());
    EXPECT_EQ(parse_permutation("(1, -6 7 +4,-2 -5, 3)"), testsupport::running_example());
}

TEST(Permutation, EmptyInputIsEmptyPermutation) {
    EXPECT_EQ(parse_permutation("").size(), 0U);
    EXPECT_EQ(parse_permutation("  ").size(), 0U);
}

TEST(Permutation, RejectsInvalidInput) {
    EXPECT_THROW(parse_permutation("1,1"), Error);
    EXPECT_THROW(parse_permutation("1,-1"), Error);
    EXPECT_THROW(parse_permutation("1,3"), Error);
    EXPECT_THROW(parse_permutation("0"), Error);
    EXPECT_THROW(parse_permutation("1,x"), Error);
    EXPECT_THROW(parse_permutation("1,--2"), Error);
}

TEST(Permutation, ApplyReversalFirstScriptStep) {
    // positions 2..5 hold -6,7,4,-2
    EXPECT_EQ(apply_reversal(testsupport::running_example(), {2, 5}), SignedPermutation({1, 2, -4, -7, 6, -5, 3}));
}

TEST(Permutation, ApplyReversalExamples) {
    EXPECT_EQ(apply_reversal(SignedPermutation({1, 2, 3}), {1, 3}), SignedPermutation({-3, -2, -1}));
    EXPECT_EQ(apply_reversal(SignedPermutation({1, 2, -4, -7, 6, -5, 3}), {3, 7}),
              SignedPermutation({1, 2, -3, 5, -6, 7, 4}));
    // inclusive [2,6] on the running example, recorded for comparison with [2,5]
    EXPECT_EQ(apply_reversal(testsupport::running_example(), {2, 6}), SignedPermutation({1, 5, 2, -4, -7, 6, 3}));
}

TEST(Permutation, ApplyReversalBounds) {
    const SignedPermutation p({1, 2, 3});
    EXPECT_THROW(apply_reversal(p, {0, 1}), Error);
    EXPECT_THROW(apply_reversal(p, {2, 4}), Error);
    EXPECT_THROW(apply_reversal(p, {3, 2}), Error);
    EXPECT_THROW(apply_reversal(SignedPermutation(), {1, 1}), Error);
}

TEST(Permutation, ReversalIsInvolutionUpToSeven) {
    for (std::size_t n = 0; n <= 7; ++n) {
        std::size_t checked = 0;
        for_each_signed_permutation(n, [&](const SignedPermutation& p) {
            if (n == 7 && ++checked % 97 != 0) return;  // sample n = 7
            for (const auto& r : all_intervals(n)) ASSERT_EQ(apply_reversal(apply_reversal(p, r), r), p);
        });
    }
}

TEST(Permutation, ReplayingRunningExampleScriptReachesIdentity) {
    SignedPermutation p = testsupport::running_example();
    for (ReversalInterval r : {ReversalInterval{2, 5}, ReversalInterval{4, 7}, ReversalInterval{3, 4},
                               ReversalInterval{6, 6}})
        p = apply_reversal(p, r);
    EXPECT_TRUE(is_identity(p));
}

TEST(Permutation, IsIdentity) {
    EXPECT_TRUE(is_identity(SignedPermutation::identity(7)));
    EXPECT_TRUE(is_identity(SignedPermutation()));
    EXPECT_FALSE(is_identity(testsupport::running_example()));
    EXPECT_FALSE(is_identity(SignedPermutation({-1})));
}

TEST(Permutation, ReverseComplement) {
    EXPECT_EQ(reverse_complement(testsupport::running_example()), SignedPermutation({-3, 5, 2, -4, -7, 6, -1}));
    EXPECT_EQ(reverse_complement(SignedPermutation()), SignedPermutation());
    EXPECT_EQ(reverse_complement(SignedPermutation({1})), SignedPermutation({-1}));
    for_each_signed_permutation(4, [](const SignedPermutation& p) {
        ASSERT_EQ(reverse_complement(reverse_complement(p)), p);
    });
}

TEST(Permutation, ToStringRoundTrip) {
    const auto& p = testsupport::running_example();
    EXPECT_EQ(to_string(p), "(1,-6,7,4,-2,-5,3)");
    EXPECT_EQ(parse_permutation(to_string(p)), p);
}

TEST(Permutation, IntervalCount) { EXPECT_EQ(all_intervals(7).size(), 28U); }

TEST(Genome, ParsesSpeciesA) {
    const Genome g = parse_genome("L: b -d c\nC: a -e f");
    ASSERT_EQ(g.chromosomes().size(), 2U);
    EXPECT_EQ(g.chromosomes()[0].shape, Shape::linear);
    EXPECT_EQ(g.chromosomes()[1].shape, Shape::circular);
    EXPECT_EQ(g.marker_count(), 6U);
    EXPECT_EQ(g.names(), (std::vector<std::string>{"b", "d", "c", "a", "e", "f"}));
    EXPECT_EQ(g.chromosomes()[0].markers, (std::vector<int>{1, -2, 3}));
}

TEST(Genome, ParsesSpeciesB) {
    const Genome g = parse_genome("L: a b c\nC: d e\nL: f");
    ASSERT_EQ(g.chromosomes().size(), 3U);
    EXPECT_EQ(g.chromosomes()[2].markers.size(), 1U);
    EXPECT_EQ(parse_genome("L: a b c; C: d e; L: f"), g);
}

TEST(Genome, RejectsInvalidInput) {
    EXPECT_THROW(parse_genome("L: a a"), Error);
    EXPECT_THROW(parse_genome("X: a b"), Error);
    EXPECT_THROW(parse_genome("L:"), Error);
    EXPECT_THROW(parse_genome("a b"), Error);
}

TEST(Genome, EqualityIgnoresRotationAndStrand) {
    const Genome a = parse_genome("C: 1 2 3\nL: 4 5");
    EXPECT_EQ(relabel(parse_genome("L: -5 -4\nC: -2 -1 -3"), a.names()), a);
    EXPECT_EQ(relabel(parse_genome("C: 2 3 1\nL: 4 5"), a.names()), a);
    EXPECT_NE(relabel(parse_genome("C: 1 3 2\nL: 4 5"), a.names()), a);
    EXPECT_NE(relabel(parse_genome("L: 1 2 3\nL: 4 5"), a.names()), a);
}

TEST(Genome, RelabelRequiresSameMarkers) {
    const Genome a = parse_genome("L: x y");
    EXPECT_THROW(relabel(parse_genome("L: x z"), a.names()), Error);
    EXPECT_THROW(relabel(parse_genome("L: x y z"), a.names()), Error);
}

TEST(Genome, ToStringRoundTrip) {
    const Genome g = parse_genome("L: b -d c\nC: a -e f");
    EXPECT_EQ(to_string(g), "L: b -d c\nC: a -e f\n");
    EXPECT_EQ(parse_genome(to_string(g)), g);
}
