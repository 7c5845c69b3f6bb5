#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

#include "patterns.hpp"

namespace ctmatch {

// Splits the end positions of `text` into `chunks` contiguous ranges and runs
// `search` on each range's slice of the text, extended to the left by
// max_length - 1 positions so every window ending in the range is present.
// Hits are mapped back to text coordinates; hits ending outside the owning
// range come from the overlap and are dropped, so the merged result equals a
// single-threaded search. `search` must be safe to call concurrently, which
// holds for all matchers given shared immutable tables.
[[nodiscard]] inline std::vector<MatchHit> parallel_search(
    SeqView text, std::size_t max_length, std::size_t chunks,
    const std::function<std::vector<MatchHit>(SeqView)>& search) {
    const std::size_t n = text.size();
    chunks = std::max<std::size_t>(1, std::min(chunks, n == 0 ? 1 : n));
    std::vector<std::vector<MatchHit>> partial(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        // End positions (1-based) owned by this chunk: [first, last].
        const std::size_t first = c * n / chunks + 1;
        const std::size_t last = (c + 1) * n / chunks;
        workers.emplace_back([&, c, first, last] {
            if (first > last) {
                return;
            }
            const std::size_t slice_begin = first > max_length ? first - max_length : 0;
            const SeqView slice = text.subspan(slice_begin, last - slice_begin);
            for (MatchHit hit : search(slice)) {
                hit.end_pos += slice_begin;
                if (hit.end_pos >= first && hit.end_pos <= last) {
                    partial[c].push_back(hit);
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    std::vector<MatchHit> hits;
    for (auto& p : partial) {
        hits.insert(hits.end(), p.begin(), p.end());
    }
    normalize_hits(hits);
    return hits;
}

} // namespace ctmatch
