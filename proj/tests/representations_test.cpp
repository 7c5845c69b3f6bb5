#include <gtest/gtest.h>

#include <ctmatch/representations.hpp>

#include "support/oracles.hpp"

namespace {

using namespace ctmatch;

TEST(CartesianTree, FiveElementExample) {
    const IntSeq s{11, 14, 13, 15, 12};
    const auto t = build_cartesian_tree(s);
    EXPECT_EQ(t.root, 1u);
    EXPECT_EQ(t.parent, (std::vector<Index>{1, 3, 5, 3, 1}));
    EXPECT_EQ(t.right[0], 5u);
    EXPECT_EQ(t.left[4], 3u);
    EXPECT_EQ(t.left[2], 2u);
    EXPECT_EQ(t.right[2], 4u);
}

TEST(CartesianTree, Empty) {
    const auto t = build_cartesian_tree(IntSeq{});
    EXPECT_TRUE(t.empty());
    EXPECT_EQ(t.root, 0u);
}

TEST(CartesianTree, EqualValuesChainToTheRight) {
    const IntSeq s{5, 5, 5};
    const auto t = build_cartesian_tree(s);
    EXPECT_EQ(t.root, 1u);
    EXPECT_EQ(t.parent, (std::vector<Index>{1, 1, 2}));
    EXPECT_EQ(t.right, (std::vector<Index>{2, 3, 0}));
    EXPECT_EQ(t.left, (std::vector<Index>{0, 0, 0}));
    EXPECT_EQ(t.parent, oracle::ct_parents(s));
}

// In-order traversal yields 1..n; heap order with ties only to the right.
TEST(CartesianTree, StructuralInvariantsOnRandomInputs) {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = oracle::random_seq(rng, rng.below(40), 1 + rng.below(6));
        const auto t = build_cartesian_tree(s);
        ASSERT_EQ(t.parent, oracle::ct_parents(s));
        if (s.empty()) {
            continue;
        }
        std::vector<Index> order;
        std::vector<std::pair<Index, bool>> stack{{t.root, false}};
        while (!stack.empty()) {
            auto [node, expanded] = stack.back();
            stack.pop_back();
            if (node == 0) {
                continue;
            }
            if (expanded) {
                order.push_back(node);
                continue;
            }
            stack.push_back({t.right[node - 1], false});
            stack.push_back({node, true});
            stack.push_back({t.left[node - 1], false});
        }
        ASSERT_EQ(order.size(), s.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            ASSERT_EQ(order[i], i + 1);
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Index p = t.parent[i];
            ASSERT_GE(s[i], s[p - 1]);
            if (p != i + 1 && s[i] == s[p - 1]) {
                ASSERT_GT(i + 1, p);
            }
        }
    }
}

TEST(ParentDistance, Examples) {
    EXPECT_EQ(parent_distance(IntSeq{11, 14, 13, 15, 12}), (ParentDistance{0, 1, 2, 1, 4}));
    EXPECT_EQ(parent_distance(IntSeq{7}), (ParentDistance{0}));
    EXPECT_EQ(parent_distance(IntSeq{1, 4, 3, 4, 1}), (ParentDistance{0, 1, 2, 1, 4}));
    EXPECT_EQ(parent_distance(IntSeq{1, 4, 3, 4, 1}), oracle::pd_direct(IntSeq{1, 4, 3, 4, 1}));
    EXPECT_TRUE(parent_distance(IntSeq{}).empty());
}

TEST(ParentDistance, MatchesDirectScanAndBounds) {
    Rng rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = oracle::random_seq(rng, 1 + rng.below(60), 1 + rng.below(20));
        const auto pd = parent_distance(s);
        ASSERT_EQ(pd, oracle::pd_direct(s));
        ASSERT_EQ(pd[0], 0u);
        for (std::size_t i = 0; i < pd.size(); ++i) {
            ASSERT_LE(pd[i], i);
        }
    }
}

TEST(ParentDistance, EqualIffSameCartesianTree) {
    Rng rng(13);
    int equal_seen = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto a = oracle::random_seq(rng, n, 3);
        const auto b = oracle::random_seq(rng, n, 3);
        const bool same_pd = parent_distance(a) == parent_distance(b);
        const bool same_tree = build_cartesian_tree(a).parent == build_cartesian_tree(b).parent;
        ASSERT_EQ(same_pd, same_tree);
        equal_seen += same_tree ? 1 : 0;
    }
    EXPECT_GT(equal_seen, 100);
}

TEST(BinaryRep, Examples) {
    EXPECT_EQ(binary_representation(IntSeq{1, 4, 3, 4, 1}), (BinaryRep{1, 0, 1, 0}));
    EXPECT_TRUE(binary_representation(IntSeq{5}).empty());
    EXPECT_TRUE(binary_representation(IntSeq{}).empty());
    EXPECT_EQ(binary_representation(IntSeq{2, 2}), (BinaryRep{1}));
}

TEST(BinaryRep, EqualTreesImplyEqualBits) {
    Rng rng(14);
    for (int trial = 0; trial < 20000; ++trial) {
        const std::size_t n = 1 + rng.below(7);
        const auto a = oracle::random_seq(rng, n, 3);
        const auto b = oracle::random_seq(rng, n, 3);
        ASSERT_EQ(binary_representation(a), oracle::bits_direct(a));
        if (oracle::same_ct(a, b)) {
            ASSERT_EQ(binary_representation(a), binary_representation(b));
        }
    }
}

// Equal bits do not force equal trees. Search all length-3 sequences over
// {1,2,3} for a witness and check the stored one.
TEST(BinaryRep, ConverseFailsWithStoredCounterexample) {
    bool found = false;
    std::vector<IntSeq> all;
    for (Value a = 1; a <= 3; ++a)
        for (Value b = 1; b <= 3; ++b)
            for (Value c = 1; c <= 3; ++c)
                all.push_back({a, b, c});
    for (const auto& x : all)
        for (const auto& y : all)
            if (binary_representation(x) == binary_representation(y) && !oracle::same_ct(x, y))
                found = true;
    EXPECT_TRUE(found);

    const IntSeq x{1, 3, 2};
    const IntSeq y{2, 3, 1};
    EXPECT_EQ(binary_representation(x), binary_representation(y));
    EXPECT_NE(parent_distance(x), parent_distance(y));
}

TEST(GlobalParent, Examples) {
    EXPECT_EQ(global_parent(IntSeq{11, 14, 13, 15, 12}), (GlobalParent{1, 3, 5, 3, 1}));
    EXPECT_EQ(global_parent(IntSeq{9}), (GlobalParent{1}));
    EXPECT_EQ(global_parent(IntSeq{3, 1, 2}), (GlobalParent{2, 2, 2}));
    EXPECT_EQ(global_parent(IntSeq{3, 1, 2}), oracle::ct_parents(IntSeq{3, 1, 2}));
}

TEST(GlobalParent, SingleFixedPointAndAcyclic) {
    Rng rng(15);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = oracle::random_seq(rng, 1 + rng.below(50), 1 + rng.below(10));
        const auto gp = global_parent(s);
        std::size_t fixed = 0;
        for (std::size_t i = 0; i < gp.size(); ++i) {
            fixed += gp[i] == i + 1 ? 1 : 0;
        }
        ASSERT_EQ(fixed, 1u);
        const Index root = build_cartesian_tree(s).root;
        for (std::size_t i = 0; i < gp.size(); ++i) {
            Index at = i + 1;
            std::size_t steps = 0;
            while (at != root) {
                at = gp[at - 1];
                ASSERT_LE(++steps, gp.size());
            }
        }
    }
}

TEST(VerifyMatch, Examples) {
    EXPECT_TRUE(verify_match(IntSeq{3, 6, 5, 7, 4}, global_parent(IntSeq{1, 4, 3, 4, 1})));
    EXPECT_FALSE(verify_match(IntSeq{1, 2, 3, 4, 5}, global_parent(IntSeq{5, 4, 3, 2, 1})));
    EXPECT_NE(parent_distance(IntSeq{1, 2, 3, 4, 5}), parent_distance(IntSeq{5, 4, 3, 2, 1}));
    const IntSeq p{4, 4, 2, 9, 2, 7};
    EXPECT_TRUE(verify_match(p, global_parent(p)));
    EXPECT_TRUE(verify_match(IntSeq{}, GlobalParent{}));
}

TEST(VerifyMatch, TieBreaks) {
    // (1,2) and (1,1) share a tree; (2,1) does not. (2,1) and (1,1) differ.
    EXPECT_TRUE(verify_match(IntSeq{1, 1}, global_parent(IntSeq{1, 2})));
    EXPECT_FALSE(verify_match(IntSeq{2, 1}, global_parent(IntSeq{1, 2})));
    EXPECT_FALSE(verify_match(IntSeq{1, 1}, global_parent(IntSeq{2, 1})));
}

TEST(VerifyMatch, AgreesWithParentDistanceEquality) {
    Rng rng(16);
    int positives = 0;
    for (int trial = 0; trial < 50000; ++trial) {
        const std::size_t n = 1 + rng.below(7);
        const std::uint64_t alphabet = 1 + rng.below(4);
        const auto w = oracle::random_seq(rng, n, alphabet);
        const auto p = oracle::random_seq(rng, n, alphabet);
        const bool expected = parent_distance(w) == parent_distance(p);
        ASSERT_EQ(verify_match(w, global_parent(p)), expected);
        positives += expected ? 1 : 0;
    }
    EXPECT_GT(positives, 1000);
}

TEST(MinIndex, Examples) {
    EXPECT_EQ(min_index(IntSeq{3, 6, 5, 7, 4}), 1u);
    EXPECT_EQ(min_index(IntSeq{5, 2, 2, 9}), 2u);
    EXPECT_EQ(min_index(IntSeq{9, 8, 7}), 3u);
    EXPECT_THROW((void)min_index(IntSeq{}), std::invalid_argument);
}

TEST(MinIndex, AgreesWithTreeRoot) {
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = oracle::random_seq(rng, 1 + rng.below(30), 1 + rng.below(5));
        ASSERT_EQ(min_index(s), build_cartesian_tree(s).root);
    }
}

} // namespace
