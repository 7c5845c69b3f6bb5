#pragma once

#include <map>
#include <vector>

#include "patterns.hpp"
#include "representations.hpp"

namespace ctmatch {

// Reference matcher: the parent-distance array of every text window is
// compared against the patterns of that length. O(n * sum of distinct
// lengths) and authoritative.
[[nodiscard]] inline std::vector<MatchHit> naive_search(SeqView text, const PreparedPatternSet& pps) {
    std::map<std::size_t, std::map<ParentDistance, std::vector<Index>>> by_length;
    for (Index id = 1; id <= pps.k(); ++id) {
        by_length[pps.length(id)][pps.pd(id)].push_back(id);
    }
    std::vector<MatchHit> hits;
    for (const auto& [len, by_pd] : by_length) {
        if (len > text.size()) {
            break;
        }
        for (Index end = len; end <= text.size(); ++end) {
            const ParentDistance pd = parent_distance(text.subspan(end - len, len));
            const auto it = by_pd.find(pd);
            if (it == by_pd.end()) {
                continue;
            }
            for (Index id : it->second) {
                hits.push_back({id, end});
            }
        }
    }
    normalize_hits(hits);
    return hits;
}

} // namespace ctmatch
