#pragma once

#include <vector>

#include "patterns.hpp"
#include "representations.hpp"
#include "scan.hpp"
#include "tables.hpp"

namespace ctmatch {

// Binary fingerprint of each pattern's length-m prefix -> pattern ids.
struct RabinKarpTables {
    FingerprintConfig cfg = FingerprintConfig::exact(EncodingKind::Binary);
    BucketTable<Index> hash;
};

[[nodiscard]] inline RabinKarpTables rk_preprocess(const PreparedPatternSet& pps, const FingerprintConfig& cfg) {
    if (cfg.kind() != EncodingKind::Binary) {
        throw ConfigError("Rabin-Karp matching rolls fingerprints and needs the binary encoding");
    }
    const std::size_t m = pps.m();
    cfg.require_capacity(m);
    RabinKarpTables t;
    t.cfg = cfg;
    std::vector<std::pair<Fingerprint, Index>> entries;
    entries.reserve(pps.k());
    for (Index id = 1; id <= pps.k(); ++id) {
        entries.emplace_back(binary_encode(pps.pattern(id).first(m), cfg), id);
    }
    t.hash = BucketTable<Index>(std::move(entries), direct_key_space(cfg, m));
    return t;
}

// Shift is always one: the first window is encoded directly, each later one
// is rolled from its predecessor.
[[nodiscard]] inline std::vector<MatchHit> rk_search(SeqView text, const RabinKarpTables& tables,
                                                     const PreparedPatternSet& pps, SearchStats* stats = nullptr) {
    std::vector<MatchHit> hits;
    const std::size_t n = text.size();
    const std::size_t m = pps.m();
    if (n < m) {
        return hits;
    }
    detail::WindowFingerprinter fingerprinter(text, m, tables.cfg, true);
    std::size_t verifications = 0;
    for (Index index = m; index <= n; ++index) {
        if (stats) {
            stats->stop(index);
        }
        const Fingerprint fp = fingerprinter.at(index);
        for (Index id : tables.hash.find(fp)) {
            if (!pps.is_representative(id)) {
                continue;
            }
            ++verifications;
            detail::verify_and_emit(text, pps, id, index - m + 1, hits);
        }
    }
    if (stats) {
        stats->candidates += verifications;
        stats->verifications += verifications;
        stats->rolled += fingerprinter.rolled();
    }
    normalize_hits(hits);
    return hits;
}

} // namespace ctmatch
