#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ctmatch {

// Portable pseudo-random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; bounded draws use rejection sampling
// on the raw 64-bit words instead of std::uniform_int_distribution, whose
// algorithm differs between standard libraries. Together this makes every
// generated corpus reproducible across platforms from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    [[nodiscard]] std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound). bound must be positive.
    [[nodiscard]] std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    // Uniform in [lo, hi].
    [[nodiscard]] std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        if (hi - lo == ~std::uint64_t{0}) {
            return engine_();
        }
        return lo + below(hi - lo + 1);
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

    // Independent stream for batch `index`, derived from a base seed with the
    // splitmix64 finalizer.
    [[nodiscard]] static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
        std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31U);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ctmatch
