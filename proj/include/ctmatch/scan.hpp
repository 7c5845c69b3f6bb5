#pragma once

#include <optional>
#include <vector>

#include "common.hpp"
#include "fingerprints.hpp"

namespace ctmatch {

struct SearchOptions {
    // Skip candidates whose block min-index differs from the text block's.
    // Binary encoding only.
    bool min_index_filter = false;
    // Roll the previous binary block fingerprint when the scan advances by
    // exactly one position.
    bool reuse_fingerprints = true;
};

// Optional counters filled in by a search call.
struct SearchStats {
    std::size_t stops = 0;
    std::size_t candidates = 0;
    std::size_t verifications = 0;
    std::size_t rolled = 0;
    bool record_stops = false;
    std::vector<Index> stop_positions;

    void stop(Index index) {
        ++stops;
        if (record_stops) {
            stop_positions.push_back(index);
        }
    }
};

namespace detail {

inline void require_filter_support(const SearchOptions& options, const FingerprintConfig& cfg) {
    if (options.min_index_filter && cfg.kind() != EncodingKind::Binary) {
        throw ConfigError("min-index filtering requires the binary encoding");
    }
}

// Fingerprints of fixed-length text windows ending at 1-based positions.
// Rolls the previous value forward when the window moved
// by one and the encoding is binary; otherwise recomputes.
class WindowFingerprinter {
public:
    WindowFingerprinter(SeqView text, std::size_t length, const FingerprintConfig& cfg, bool reuse)
        : text_(text), length_(length), cfg_(cfg) {
        cfg.require_capacity(length);
        if (reuse && cfg.kind() == EncodingKind::Binary && length >= 2) {
            roller_.emplace(length, cfg);
        }
        if (cfg.kind() == EncodingKind::ParentDistance) {
            stack_.reserve(length);
        }
    }

    [[nodiscard]] Fingerprint at(Index end) {
        Fingerprint fp;
        if (roller_ && last_end_ != 0 && end == last_end_ + 1) {
            const bool outgoing = text_[end - length_ - 1] <= text_[end - length_];
            const bool incoming = text_[end - 2] <= text_[end - 1];
            fp = roller_->roll(last_fp_, outgoing, incoming);
            ++rolled_;
        } else {
            fp = fresh(text_.subspan(end - length_, length_));
        }
        last_end_ = end;
        last_fp_ = fp;
        return fp;
    }

    [[nodiscard]] std::size_t rolled() const noexcept { return rolled_; }

private:
    Fingerprint fresh(SeqView w) {
        if (cfg_.kind() == EncodingKind::Binary) {
            if (cfg_.is_exact()) {
                std::uint64_t fp = 0;
                for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                    fp = (fp << 1U) | (w[i] <= w[i + 1] ? 1U : 0U);
                }
                return fp;
            }
            return binary_encode(w, cfg_);
        }
        // Parent-distance encoding without materializing the array.
        stack_.clear();
        const bool exact = cfg_.is_exact();
        const std::uint64_t p = exact ? 0 : *cfg_.modulus();
        std::uint64_t fp = 0;
        std::uint64_t factorial = exact ? 1 : 1 % p;
        for (std::size_t i = 0; i < w.size(); ++i) {
            while (!stack_.empty() && w[stack_.back()] > w[i]) {
                stack_.pop_back();
            }
            if (i > 0) {
                const std::uint64_t pd = stack_.empty() ? 0 : i - stack_.back();
                if (exact) {
                    factorial *= i;
                    fp += pd * factorial;
                } else {
                    factorial = mul_mod(factorial, i, p);
                    fp = add_mod(fp, mul_mod(pd % p, factorial, p), p);
                }
            }
            stack_.push_back(i);
        }
        return fp;
    }

    SeqView text_;
    std::size_t length_;
    FingerprintConfig cfg_;
    std::optional<BinaryRoller> roller_;
    std::vector<std::size_t> stack_;
    Index last_end_ = 0;
    Fingerprint last_fp_ = 0;
    std::size_t rolled_ = 0;
};

} // namespace detail

} // namespace ctmatch
