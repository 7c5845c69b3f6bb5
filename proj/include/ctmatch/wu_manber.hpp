#pragma once

#include <vector>

#include "patterns.hpp"
#include "representations.hpp"
#include "scan.hpp"
#include "tables.hpp"

namespace ctmatch {

// Block-based skip tables. `hash` holds every pattern id keyed by the
// fingerprint of the last block of its length-m prefix. `shift` gives, per
// block fingerprint, m minus the rightmost block end j in [b, m-1] at which
// the fingerprint occurs in any length-m prefix, or m-b+1 when it never does.
struct WuManberTables {
    std::size_t block = 0;
    FingerprintConfig cfg = FingerprintConfig::exact(EncodingKind::Binary);
    ShiftTable shift;
    BucketTable<Index> hash;
};

[[nodiscard]] inline WuManberTables wm_preprocess(const PreparedPatternSet& pps, const FingerprintConfig& cfg) {
    if (!pps.block_size()) {
        throw ConfigError("Wu-Manber preprocessing needs a block size");
    }
    const std::size_t b = *pps.block_size();
    const std::size_t m = pps.m();
    cfg.require_capacity(b);

    WuManberTables t;
    t.block = b;
    t.cfg = cfg;
    const auto key_space = direct_key_space(cfg, b);
    t.shift = ShiftTable(m - b + 1, key_space);

    std::vector<std::pair<Fingerprint, Index>> entries;
    entries.reserve(pps.k());
    for (Index id = 1; id <= pps.k(); ++id) {
        const SeqView p = pps.pattern(id);
        for (std::size_t j = b; j + 1 <= m; ++j) {
            t.shift.lower(encode(p.subspan(j - b, b), cfg), m - j);
        }
        entries.emplace_back(encode(p.subspan(m - b, b), cfg), id);
    }
    t.hash = BucketTable<Index>(std::move(entries), key_space);
    return t;
}

[[nodiscard]] inline std::vector<MatchHit> wm_search(SeqView text, const WuManberTables& tables,
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

    detail::WindowFingerprinter fingerprinter(text, b, tables.cfg, options.reuse_fingerprints);
    std::size_t candidates = 0;
    std::size_t verifications = 0;
    for (Index index = m; index <= n;) {
        if (stats) {
            stats->stop(index);
        }
        const Fingerprint fp = fingerprinter.at(index);
        const auto bucket = tables.hash.find(fp);
        if (!bucket.empty()) {
            Index block_min = 0;
            for (Index id : bucket) {
                if (!pps.is_representative(id)) {
                    continue;
                }
                ++candidates;
                if (options.min_index_filter) {
                    if (block_min == 0) {
                        block_min = min_index(text.subspan(index - b, b));
                    }
                    if (block_min != pps.block_min_index(id)) {
                        continue;
                    }
                }
                ++verifications;
                detail::verify_and_emit(text, pps, id, index - m + 1, hits);
            }
        }
        index += tables.shift[fp];
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
