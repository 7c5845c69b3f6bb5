#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "common.hpp"
#include "fingerprints.hpp"

namespace ctmatch {

// Exact binary fingerprints shorter than this many values are looked up in
// arrays of 2^(len-1) slots; everything else goes through a hash map.
inline constexpr std::size_t kDirectAddressMaxLength = 20;

[[nodiscard]] inline std::optional<std::size_t> direct_key_space(const FingerprintConfig& cfg,
                                                                 std::size_t length) noexcept {
    if (cfg.kind() == EncodingKind::Binary && cfg.is_exact() && length >= 1 &&
        length <= kDirectAddressMaxLength) {
        return std::size_t{1} << (length - 1);
    }
    return std::nullopt;
}

// Fingerprint -> list of payloads, stored contiguously. Insertion order is
// kept within a bucket.
template <typename Payload>
class BucketTable {
public:
    BucketTable() = default;

    BucketTable(std::vector<std::pair<Fingerprint, Payload>> entries, std::optional<std::size_t> key_space) {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        items_.reserve(entries.size());
        for (auto& e : entries) {
            items_.push_back(std::move(e.second));
        }
        if (key_space) {
            direct_ = true;
            offsets_.assign(*key_space + 1, 0);
            for (const auto& e : entries) {
                ++offsets_[e.first + 1];
            }
            for (std::size_t i = 1; i < offsets_.size(); ++i) {
                offsets_[i] += offsets_[i - 1];
            }
            return;
        }
        for (std::size_t i = 0; i < entries.size();) {
            std::size_t j = i;
            while (j < entries.size() && entries[j].first == entries[i].first) {
                ++j;
            }
            ranges_.emplace(entries[i].first, std::pair<std::uint32_t, std::uint32_t>(i, j));
            i = j;
        }
    }

    [[nodiscard]] std::span<const Payload> find(Fingerprint fp) const noexcept {
        if (direct_) {
            if (fp + 1 >= offsets_.size()) {
                return {};
            }
            return std::span<const Payload>(items_).subspan(offsets_[fp], offsets_[fp + 1] - offsets_[fp]);
        }
        const auto it = ranges_.find(fp);
        if (it == ranges_.end()) {
            return {};
        }
        return std::span<const Payload>(items_).subspan(it->second.first, it->second.second - it->second.first);
    }

    [[nodiscard]] std::size_t total() const noexcept { return items_.size(); }
    [[nodiscard]] bool is_direct() const noexcept { return direct_; }

    // Distinct fingerprints with a nonempty bucket.
    [[nodiscard]] std::vector<Fingerprint> keys() const {
        std::vector<Fingerprint> out;
        if (direct_) {
            for (std::size_t fp = 0; fp + 1 < offsets_.size(); ++fp) {
                if (offsets_[fp + 1] != offsets_[fp]) {
                    out.push_back(fp);
                }
            }
        } else {
            for (const auto& [fp, range] : ranges_) {
                out.push_back(fp);
            }
            std::sort(out.begin(), out.end());
        }
        return out;
    }

private:
    bool direct_ = false;
    std::vector<std::uint32_t> offsets_;
    std::unordered_map<Fingerprint, std::pair<std::uint32_t, std::uint32_t>> ranges_;
    std::vector<Payload> items_;
};

// Fingerprint -> shift amount with a default for unseen fingerprints.
class ShiftTable {
public:
    ShiftTable() = default;

    ShiftTable(std::size_t default_shift, std::optional<std::size_t> key_space)
        : default_(default_shift), direct_(key_space.has_value()) {
        if (key_space) {
            dense_.assign(*key_space, static_cast<std::uint32_t>(default_shift));
        }
    }

    // Keeps the smaller of the stored and the offered shift.
    void lower(Fingerprint fp, std::size_t shift) {
        const auto s = static_cast<std::uint32_t>(shift);
        if (direct_) {
            dense_[fp] = std::min(dense_[fp], s);
            return;
        }
        auto [it, inserted] = sparse_.try_emplace(fp, s);
        if (!inserted) {
            it->second = std::min(it->second, s);
        }
    }

    [[nodiscard]] std::size_t operator[](Fingerprint fp) const noexcept {
        if (direct_) {
            return fp < dense_.size() ? dense_[fp] : default_;
        }
        const auto it = sparse_.find(fp);
        return it == sparse_.end() ? default_ : it->second;
    }

    [[nodiscard]] std::size_t default_shift() const noexcept { return default_; }

    // Every stored value, including untouched dense slots.
    [[nodiscard]] std::vector<std::size_t> values() const {
        std::vector<std::size_t> out(dense_.begin(), dense_.end());
        for (const auto& [fp, s] : sparse_) {
            out.push_back(s);
        }
        return out;
    }

private:
    std::size_t default_ = 1;
    bool direct_ = false;
    std::vector<std::uint32_t> dense_;
    std::unordered_map<Fingerprint, std::uint32_t> sparse_;
};

} // namespace ctmatch
