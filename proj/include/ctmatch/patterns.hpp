#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "common.hpp"
#include "representations.hpp"

namespace ctmatch {

// One occurrence: P[pattern_id] matches the text window ending at end_pos.
// Both fields are 1-based.
struct MatchHit {
    Index pattern_id = 0;
    Index end_pos = 0;

    friend bool operator==(const MatchHit&, const MatchHit&) = default;
    // Report order: by end position, then pattern id.
    friend bool operator<(const MatchHit& a, const MatchHit& b) noexcept {
        return a.end_pos != b.end_pos ? a.end_pos < b.end_pos : a.pattern_id < b.pattern_id;
    }
};

inline void normalize_hits(std::vector<MatchHit>& hits) {
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
}

// Patterns sharing one Cartesian tree (equal parent-distance arrays).
struct PatternGroup {
    Index representative = 0;
    std::vector<Index> members;
};

// Pattern list plus everything the matchers derive from it once. Pattern ids
// are 1-based. Immutable after construction and safe to share across threads.
class PreparedPatternSet {
public:
    explicit PreparedPatternSet(std::vector<IntSeq> patterns,
                                std::optional<std::size_t> block_size = std::nullopt)
        : patterns_(std::move(patterns)) {
        if (patterns_.empty()) {
            throw InputError("pattern set is empty");
        }
        m_ = patterns_.front().size();
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            if (patterns_[i].empty()) {
                throw InputError("pattern " + std::to_string(i + 1) + " is empty");
            }
            m_ = std::min(m_, patterns_[i].size());
            max_length_ = std::max(max_length_, patterns_[i].size());
        }

        pd_.reserve(patterns_.size());
        gp_.reserve(patterns_.size());
        group_of_.assign(patterns_.size(), 0);
        std::map<ParentDistance, std::size_t> group_index;
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            pd_.push_back(parent_distance(patterns_[i]));
            gp_.push_back(global_parent(patterns_[i]));
            auto [it, inserted] = group_index.try_emplace(pd_.back(), groups_.size());
            if (inserted) {
                groups_.push_back({i + 1, {}});
            }
            groups_[it->second].members.push_back(i + 1);
            group_of_[i] = it->second;
        }

        if (block_size) {
            if (*block_size < 1 || *block_size > m_) {
                throw ConfigError("block size " + std::to_string(*block_size) +
                                  " outside [1, " + std::to_string(m_) + "]");
            }
            block_size_ = *block_size;
            block_min_index_.reserve(patterns_.size());
            for (const IntSeq& p : patterns_) {
                block_min_index_.push_back(min_index(SeqView(p).subspan(m_ - *block_size, *block_size)));
            }
        }
    }

    [[nodiscard]] std::size_t k() const noexcept { return patterns_.size(); }
    // Shortest pattern length.
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t max_length() const noexcept { return max_length_; }

    [[nodiscard]] SeqView pattern(Index id) const { return patterns_.at(id - 1); }
    [[nodiscard]] std::size_t length(Index id) const { return patterns_.at(id - 1).size(); }
    [[nodiscard]] const std::vector<IntSeq>& patterns() const noexcept { return patterns_; }
    [[nodiscard]] const ParentDistance& pd(Index id) const { return pd_.at(id - 1); }
    [[nodiscard]] const GlobalParent& gp(Index id) const { return gp_.at(id - 1); }

    [[nodiscard]] const std::vector<PatternGroup>& groups() const noexcept { return groups_; }
    [[nodiscard]] const PatternGroup& group_of(Index id) const { return groups_[group_of_.at(id - 1)]; }
    [[nodiscard]] bool is_representative(Index id) const { return group_of(id).representative == id; }

    [[nodiscard]] std::optional<std::size_t> block_size() const noexcept { return block_size_; }
    // Leftmost-minimum offset of P[m-b+1..m]; requires a block size.
    [[nodiscard]] Index block_min_index(Index id) const { return block_min_index_.at(id - 1); }

private:
    std::vector<IntSeq> patterns_;
    std::size_t m_ = 0;
    std::size_t max_length_ = 0;
    std::vector<ParentDistance> pd_;
    std::vector<GlobalParent> gp_;
    std::vector<PatternGroup> groups_;
    std::vector<std::size_t> group_of_;
    std::optional<std::size_t> block_size_;
    std::vector<Index> block_min_index_;
};

[[nodiscard]] inline PreparedPatternSet prepare_patterns(std::vector<IntSeq> patterns,
                                                         std::optional<std::size_t> block_size = std::nullopt) {
    return PreparedPatternSet(std::move(patterns), block_size);
}

namespace detail {

// Verifies the group representative `id` against the window starting at the
// 1-based text position `start`; on success records a hit for every member.
// Returns false when the window would run past the text.
inline bool verify_and_emit(SeqView text, const PreparedPatternSet& pps, Index id, std::size_t start,
                            std::vector<MatchHit>& hits) {
    const std::size_t len = pps.length(id);
    if (start < 1 || start - 1 + len > text.size()) {
        return false;
    }
    if (!verify_match(text.subspan(start - 1, len), pps.gp(id))) {
        return true;
    }
    const Index end_pos = start - 1 + len;
    for (Index member : pps.group_of(id).members) {
        hits.push_back({member, end_pos});
    }
    return true;
}

} // namespace detail

} // namespace ctmatch
