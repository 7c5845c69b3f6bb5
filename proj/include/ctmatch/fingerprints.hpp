#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "common.hpp"
#include "representations.hpp"

namespace ctmatch {

enum class EncodingKind { ParentDistance, Binary };

[[nodiscard]] inline const char* to_string(EncodingKind kind) noexcept {
    return kind == EncodingKind::Binary ? "bin" : "pd";
}

// Largest prime below 2^31.
inline constexpr std::uint64_t kDefaultModulus = 2147483647ULL;

// Longest sequence whose exact encoding fits a 64-bit word:
// n! - 1 for parent-distance, 2^(n-1) - 1 for binary.
inline constexpr std::size_t kExactParentDistanceCapacity = 20;
inline constexpr std::size_t kExactBinaryCapacity = 65;

namespace detail {

[[nodiscard]] constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                                              std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

[[nodiscard]] constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                              std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

[[nodiscard]] constexpr std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                                              std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

} // namespace detail

// Deterministic Miller-Rabin; these witnesses cover every 64-bit integer.
[[nodiscard]] constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Encoding kind plus either exact arithmetic or a prime modulus. Immutable.
class FingerprintConfig {
public:
    [[nodiscard]] static FingerprintConfig exact(EncodingKind kind) noexcept {
        return FingerprintConfig(kind, std::nullopt);
    }

    [[nodiscard]] static FingerprintConfig modular(EncodingKind kind, std::uint64_t prime) {
        if (prime <= 2 || !is_prime(prime)) {
            throw ConfigError("modulus must be a prime greater than 2, got " + std::to_string(prime));
        }
        return FingerprintConfig(kind, prime);
    }

    [[nodiscard]] EncodingKind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_exact() const noexcept { return !modulus_; }
    [[nodiscard]] std::optional<std::uint64_t> modulus() const noexcept { return modulus_; }

    // Largest sequence length this config can encode without overflow.
    [[nodiscard]] std::size_t capacity() const noexcept {
        if (modulus_) {
            return static_cast<std::size_t>(-1);
        }
        return kind_ == EncodingKind::Binary ? kExactBinaryCapacity : kExactParentDistanceCapacity;
    }

    [[nodiscard]] bool can_encode(std::size_t length) const noexcept { return length <= capacity(); }

    void require_capacity(std::size_t length) const {
        if (!can_encode(length)) {
            throw ConfigError(std::string("exact ") + to_string(kind_) +
                              " encoding cannot represent length " + std::to_string(length) +
                              " in a 64-bit word (max " + std::to_string(capacity()) + ")");
        }
    }

    friend bool operator==(const FingerprintConfig&, const FingerprintConfig&) = default;

private:
    FingerprintConfig(EncodingKind kind, std::optional<std::uint64_t> modulus) noexcept
        : kind_(kind), modulus_(modulus) {}

    EncodingKind kind_;
    std::optional<std::uint64_t> modulus_;
};

// How the caller wants the modulus picked. `Auto` means exact when the
// encoded length fits a word, otherwise the default prime.
struct ModulusChoice {
    enum class Mode { Auto, Exact, Prime };
    Mode mode = Mode::Auto;
    std::uint64_t prime = kDefaultModulus;

    [[nodiscard]] static ModulusChoice automatic() noexcept { return {}; }
    [[nodiscard]] static ModulusChoice exact() noexcept { return {Mode::Exact, 0}; }
    [[nodiscard]] static ModulusChoice with_prime(std::uint64_t p) noexcept { return {Mode::Prime, p}; }
};

[[nodiscard]] inline FingerprintConfig resolve_config(EncodingKind kind, ModulusChoice choice,
                                                      std::size_t encoded_length) {
    switch (choice.mode) {
    case ModulusChoice::Mode::Exact: {
        auto cfg = FingerprintConfig::exact(kind);
        cfg.require_capacity(encoded_length);
        return cfg;
    }
    case ModulusChoice::Mode::Prime:
        return FingerprintConfig::modular(kind, choice.prime);
    case ModulusChoice::Mode::Auto:
        break;
    }
    auto cfg = FingerprintConfig::exact(kind);
    if (cfg.can_encode(encoded_length)) {
        return cfg;
    }
    return FingerprintConfig::modular(kind, kDefaultModulus);
}

// Factorial-number-system encoding of the parent-distance representation:
// sum over i >= 2 of pd[i] * (i-1)!.
[[nodiscard]] inline Fingerprint pd_encode(SeqView s, const FingerprintConfig& cfg) {
    if (cfg.kind() != EncodingKind::ParentDistance) {
        throw ConfigError("pd_encode requires the parent-distance encoding");
    }
    if (s.empty()) {
        throw std::invalid_argument("pd_encode: empty sequence");
    }
    cfg.require_capacity(s.size());
    const ParentDistance pd = parent_distance(s);
    if (cfg.is_exact()) {
        std::uint64_t fp = 0;
        std::uint64_t factorial = 1;
        for (std::size_t i = 1; i < pd.size(); ++i) {
            factorial *= i;
            fp += pd[i] * factorial;
        }
        return fp;
    }
    const std::uint64_t p = *cfg.modulus();
    std::uint64_t fp = 0;
    std::uint64_t factorial = 1 % p;
    for (std::size_t i = 1; i < pd.size(); ++i) {
        factorial = detail::mul_mod(factorial, i, p);
        fp = detail::add_mod(fp, detail::mul_mod(pd[i] % p, factorial, p), p);
    }
    return fp;
}

// Binary representation read as a base-2 number, most significant bit first;
// evaluated by Horner's rule.
[[nodiscard]] inline Fingerprint binary_encode(SeqView s, const FingerprintConfig& cfg) {
    if (cfg.kind() != EncodingKind::Binary) {
        throw ConfigError("binary_encode requires the binary encoding");
    }
    if (s.empty()) {
        throw std::invalid_argument("binary_encode: empty sequence");
    }
    cfg.require_capacity(s.size());
    std::uint64_t fp = 0;
    if (cfg.is_exact()) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            fp = (fp << 1U) | (s[i] <= s[i + 1] ? 1U : 0U);
        }
        return fp;
    }
    const std::uint64_t p = *cfg.modulus();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        fp = detail::add_mod(detail::mul_mod(fp, 2, p), s[i] <= s[i + 1] ? 1 : 0, p);
    }
    return fp;
}

[[nodiscard]] inline Fingerprint encode(SeqView s, const FingerprintConfig& cfg) {
    return cfg.kind() == EncodingKind::Binary ? binary_encode(s, cfg) : pd_encode(s, cfg);
}

// Slides a binary fingerprint of a fixed-length window one position right.
// Holds 2^(len-2) (reduced when modular) so each step is constant time.
class BinaryRoller {
public:
    BinaryRoller(std::size_t window_len, const FingerprintConfig& cfg) : cfg_(cfg) {
        if (cfg.kind() != EncodingKind::Binary) {
            throw ConfigError("only binary fingerprints can be rolled");
        }
        if (window_len < 2) {
            throw ConfigError("cannot roll a window shorter than 2");
        }
        cfg.require_capacity(window_len);
        if (cfg.is_exact()) {
            top_ = std::uint64_t{1} << (window_len - 2);
        } else {
            top_ = detail::pow_mod(2, window_len - 2, *cfg.modulus());
        }
    }

    [[nodiscard]] Fingerprint roll(Fingerprint prev, bool outgoing, bool incoming) const noexcept {
        if (cfg_.is_exact()) {
            return ((prev - (outgoing ? top_ : 0)) << 1U) | (incoming ? 1U : 0U);
        }
        const std::uint64_t p = *cfg_.modulus();
        std::uint64_t v = prev;
        if (outgoing) {
            v = v >= top_ ? v - top_ : v + (p - top_);
        }
        return detail::add_mod(detail::mul_mod(v, 2, p), incoming ? 1 : 0, p);
    }

    [[nodiscard]] const FingerprintConfig& config() const noexcept { return cfg_; }

private:
    FingerprintConfig cfg_;
    std::uint64_t top_ = 0;
};

[[nodiscard]] inline Fingerprint roll_binary(Fingerprint prev, bool outgoing, bool incoming,
                                             std::size_t window_len, const FingerprintConfig& cfg) {
    return BinaryRoller(window_len, cfg).roll(prev, outgoing, incoming);
}

// ceil(log2(k*m)) clamped to [2, m]; m itself when m < 2.
[[nodiscard]] inline std::size_t choose_block_size(std::size_t k, std::size_t m) {
    if (k == 0 || m == 0) {
        throw std::invalid_argument("choose_block_size: k and m must be positive");
    }
    const auto km = static_cast<unsigned __int128>(k) * m;
    std::size_t b = 0;
    while ((static_cast<unsigned __int128>(1) << b) < km) {
        ++b;
    }
    b = std::max<std::size_t>(b, 2);
    return std::min(b, m);
}

} // namespace ctmatch
