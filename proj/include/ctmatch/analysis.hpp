#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"
#include "random.hpp"
#include "representations.hpp"

namespace ctmatch {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// p(0..N): probability that two i.i.d. sequences of distinct values share a
// Cartesian tree. p(n) = sum_{i=1..n} p(i-1) p(n-i) / n^2.
struct ProbabilityTable {
    std::vector<Rational> p;

    [[nodiscard]] const Rational& operator[](std::size_t n) const { return p.at(n); }
    [[nodiscard]] std::size_t max_n() const noexcept { return p.size() - 1; }
};

[[nodiscard]] inline ProbabilityTable probability_table(std::size_t max_n) {
    ProbabilityTable table;
    table.p.reserve(max_n + 1);
    table.p.emplace_back(1);
    if (max_n >= 1) {
        table.p.emplace_back(1);
    }
    for (std::size_t n = 2; n <= max_n; ++n) {
        Rational sum = 0;
        // The summand is palindromic in i, so pair up i and n+1-i.
        for (std::size_t i = 1; i <= n / 2; ++i) {
            sum += 2 * table.p[i - 1] * table.p[n - i];
        }
        if (n % 2 == 1) {
            const std::size_t mid = (n + 1) / 2;
            sum += table.p[mid - 1] * table.p[n - mid];
        }
        table.p.push_back(sum / Rational(BigInt(n) * n));
    }
    return table;
}

[[nodiscard]] inline Rational match_probability(std::size_t n) {
    return probability_table(n)[n];
}

struct BoundCheck {
    std::size_t n;
    Rational p;
    Rational bound;
    bool holds;
};

// Exact check of p(n) <= 1 / 2^(n-1) for n = 1..max_n.
[[nodiscard]] inline std::vector<BoundCheck> check_match_bound(std::size_t max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("check_match_bound: max_n must be at least 1");
    }
    const ProbabilityTable table = probability_table(max_n);
    std::vector<BoundCheck> rows;
    rows.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational bound(BigInt(1), BigInt(1) << (n - 1));
        rows.push_back({n, table[n], bound, table[n] <= bound});
    }
    return rows;
}

struct EmpiricalRate {
    std::size_t n;
    std::uint64_t trials;
    std::uint64_t matches;

    [[nodiscard]] double frequency() const noexcept {
        return static_cast<double>(matches) / static_cast<double>(trials);
    }
    // Binomial standard error around a reference probability.
    [[nodiscard]] static double standard_error(double p, std::uint64_t trials) noexcept {
        return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    }
};

// Frequency of equal Cartesian trees among pairs of uniform random
// permutations of 0..n-1. Trials are split into fixed-size batches, each
// with its own derived seed, so the result does not depend on how batches
// are scheduled.
[[nodiscard]] inline EmpiricalRate empirical_match_rate(std::size_t n, std::uint64_t trials,
                                                        std::uint64_t seed) {
    if (n < 1 || trials < 1) {
        throw std::invalid_argument("empirical_match_rate: n and trials must be positive");
    }
    constexpr std::uint64_t kBatch = 65536;
    std::uint64_t matches = 0;
    IntSeq a(n);
    IntSeq b(n);
    for (std::uint64_t start = 0, batch = 0; start < trials; start += kBatch, ++batch) {
        Rng rng(Rng::substream_seed(seed, batch));
        const std::uint64_t count = std::min(kBatch, trials - start);
        for (std::uint64_t t = 0; t < count; ++t) {
            std::iota(a.begin(), a.end(), Value{0});
            std::iota(b.begin(), b.end(), Value{0});
            rng.shuffle(std::span<Value>(a));
            rng.shuffle(std::span<Value>(b));
            if (parent_distance(a) == parent_distance(b)) {
                ++matches;
            }
        }
    }
    return {n, trials, matches};
}

} // namespace ctmatch
