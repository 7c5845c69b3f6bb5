#include <gtest/gtest.h>

#include <ctmatch/ctmatch.hpp>

#include "support/oracles.hpp"
#include "support/variants.hpp"

namespace {

using namespace ctmatch;

struct Shape {
    std::size_t n;
    std::uint64_t alphabet;
    std::size_t k;
    std::size_t lo;
    std::size_t hi;
};

void check_instance(const Shape& s, std::uint64_t seed, bool random_patterns) {
    Rng rng(seed);
    const auto text = oracle::random_seq(rng, s.n, s.alphabet);
    std::vector<IntSeq> patterns;
    if (random_patterns) {
        for (std::size_t i = 0; i < s.k; ++i) {
            const std::size_t len = s.lo + rng.below(s.hi - s.lo + 1);
            patterns.push_back(oracle::random_seq(rng, len, s.alphabet));
        }
    } else {
        patterns = extract_patterns(text, s.k, LengthSpec::interval(s.lo, s.hi), seed);
    }
    const auto expected = naive_search(text, PreparedPatternSet(patterns));
    for (const auto& o : variants::run_all(text, patterns)) {
        ASSERT_EQ(o.hits, expected) << o.name << " seed=" << seed << " n=" << s.n << " k=" << s.k;
    }
}

class OracleEquivalence : public ::testing::TestWithParam<Shape> {};

TEST_P(OracleEquivalence, ExtractedPatterns) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        check_instance(GetParam(), 1000 + seed, false);
    }
}

TEST_P(OracleEquivalence, RandomPatterns) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        check_instance(GetParam(), 2000 + seed, true);
    }
}

INSTANTIATE_TEST_SUITE_P(Shapes, OracleEquivalence,
                         ::testing::Values(Shape{500, 2, 1, 4, 4}, Shape{500, 2, 10, 8, 8}, Shape{500, 10, 10, 4, 4},
                                           Shape{800, 10, 100, 4, 4}, Shape{800, 1000, 10, 16, 16},
                                           Shape{800, 1000, 10, 2, 9}, Shape{1000, 10, 10, 8, 32},
                                           Shape{1000, 1000, 100, 16, 64}, Shape{300, 3, 5, 1, 3},
                                           Shape{1000, 2, 10, 32, 64}, Shape{300, 1000, 3, 64, 64}),
                         [](const ::testing::TestParamInfo<Shape>& info) {
                             const Shape& s = info.param;
                             return "n" + std::to_string(s.n) + "_sigma" + std::to_string(s.alphabet) + "_k" +
                                    std::to_string(s.k) + "_m" + std::to_string(s.lo) + "to" + std::to_string(s.hi);
                         });

// Explicit block sizes across the whole admissible range, including b = 1
// and b = m.
TEST(OracleEquivalence, EveryBlockSize) {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto text = oracle::random_seq(rng, 300, 1 + rng.below(6));
        const auto patterns = extract_patterns(text, 1 + rng.below(6), LengthSpec::interval(2, 12), 70 + trial);
        const auto expected = naive_search(text, PreparedPatternSet(patterns));
        std::size_t m = 100;
        for (const auto& p : patterns) {
            m = std::min(m, p.size());
        }
        for (std::size_t b = 1; b <= m; ++b) {
            for (const auto& o : variants::run_all(text, patterns, b)) {
                ASSERT_EQ(o.hits, expected) << o.name;
            }
        }
    }
}

// Heavy repetition: constant text and constant-prefix patterns.
TEST(OracleEquivalence, DegenerateTexts) {
    const IntSeq flat(400, 7);
    IntSeq stairs(400);
    for (std::size_t i = 0; i < stairs.size(); ++i) {
        stairs[i] = static_cast<Value>(i % 5);
    }
    for (const auto& text : {flat, stairs}) {
        const std::vector<IntSeq> patterns{IntSeq(8, 1), IntSeq(12, 3), {0, 1, 2, 3, 4, 0, 1, 2}, {1, 1, 1, 1, 1, 1, 1, 2}};
        const auto expected = naive_search(text, PreparedPatternSet(patterns));
        for (const auto& o : variants::run_all(text, patterns)) {
            ASSERT_EQ(o.hits, expected) << o.name;
        }
    }
}

// Grouping must not change the result compared to verifying each pattern
// on its own.
TEST(OracleEquivalence, GroupingMatchesPerPatternSearch) {
    Rng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        const auto text = oracle::random_seq(rng, 2000, 3);
        const auto patterns = extract_patterns(text, 40, LengthSpec::fixed(4), 500 + trial);
        const PreparedPatternSet pps(patterns, 3);
        const auto grouped = wm_search(text, wm_preprocess(pps, FingerprintConfig::exact(EncodingKind::Binary)), pps);
        std::vector<MatchHit> individual;
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            const PreparedPatternSet one({patterns[i]}, 3);
            for (auto h : wm_search(text, wm_preprocess(one, FingerprintConfig::exact(EncodingKind::Binary)), one)) {
                individual.push_back({i + 1, h.end_pos});
            }
        }
        normalize_hits(individual);
        ASSERT_LT(pps.groups().size(), patterns.size());
        ASSERT_EQ(grouped, individual);
    }
}

} // namespace
