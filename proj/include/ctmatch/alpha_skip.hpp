#pragma once

#include <vector>

#include "patterns.hpp"
#include "representations.hpp"
#include "scan.hpp"
#include "tables.hpp"

namespace ctmatch {

struct BlockOccurrence {
    Index pattern_id = 0;
    // 1-based end offset j of the block P[j-b+1..j], b <= j <= m.
    Index end = 0;
    // Leftmost-minimum offset inside the block, for min-index filtering.
    Index block_min = 0;

    friend bool operator==(const BlockOccurrence&, const BlockOccurrence&) = default;
};

// Block fingerprint -> every (pattern, block end) in the length-m prefixes.
struct AlphaSkipTables {
    std::size_t block = 0;
    FingerprintConfig cfg = FingerprintConfig::exact(EncodingKind::Binary);
    BucketTable<BlockOccurrence> pos;
};

[[nodiscard]] inline AlphaSkipTables as_preprocess(const PreparedPatternSet& pps, const FingerprintConfig& cfg) {
    if (!pps.block_size()) {
        throw ConfigError("Alpha Skip Search preprocessing needs a block size");
    }
    const std::size_t b = *pps.block_size();
    const std::size_t m = pps.m();
    cfg.require_capacity(b);
    AlphaSkipTables t;
    t.block = b;
    t.cfg = cfg;
    std::vector<std::pair<Fingerprint, BlockOccurrence>> entries;
    entries.reserve(pps.k() * (m - b + 1));
    for (Index id = 1; id <= pps.k(); ++id) {
        const SeqView p = pps.pattern(id);
        for (std::size_t j = b; j <= m; ++j) {
            const SeqView block = p.subspan(j - b, b);
            entries.emplace_back(encode(block, cfg), BlockOccurrence{id, j, min_index(block)});
        }
    }
    t.pos = BucketTable<BlockOccurrence>(std::move(entries), direct_key_space(cfg, b));
    return t;
}

// Stops at m, m + (m-b+1), m + 2(m-b+1), ...; each stop tries every
// alignment its block fingerprint allows. Alignments that would put the
// pattern outside the text are skipped.
[[nodiscard]] inline std::vector<MatchHit> as_search(SeqView text, const AlphaSkipTables& tables,
                                                     const PreparedPatternSet& pps, const SearchOptions& options = {},
                                                     SearchStats* stats = nullptr) {
    detail::require_filter_support(options, tables.cfg);
    std::vector<MatchHit> hits;
    const std::size_t n = text.size();
    const std::size_t m = pps.m();
    const std::size_t b = tables.block;
    if (n < m) {
        return hits;
    }
    const std::size_t step = m - b + 1;
    detail::WindowFingerprinter fingerprinter(text, b, tables.cfg, options.reuse_fingerprints);
    std::size_t candidates = 0;
    std::size_t verifications = 0;
    for (Index index = m; index <= n; index += step) {
        if (stats) {
            stats->stop(index);
        }
        const auto bucket = tables.pos.find(fingerprinter.at(index));
        if (bucket.empty()) {
            continue;
        }
        Index block_min = 0;
        for (const BlockOccurrence& occ : bucket) {
            if (!pps.is_representative(occ.pattern_id) || occ.end > index) {
                continue;
            }
            ++candidates;
            if (options.min_index_filter) {
                if (block_min == 0) {
                    block_min = min_index(text.subspan(index - b, b));
                }
                if (block_min != occ.block_min) {
                    continue;
                }
            }
            if (detail::verify_and_emit(text, pps, occ.pattern_id, index - occ.end + 1, hits)) {
                ++verifications;
            }
        }
    }
    if (stats) {
        stats->candidates += candidates;
        stats->verifications += verifications;
        stats->rolled += fingerprinter.rolled();
    }
    normalize_hits(hits);
    return hits;
}

} // namespace ctmatch
