#pragma once

#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "alpha_skip.hpp"
#include "fingerprints.hpp"
#include "naive.hpp"
#include "parallel.hpp"
#include "patterns.hpp"
#include "rabin_karp.hpp"
#include "random.hpp"
#include "wu_manber.hpp"

namespace ctmatch {

// ---------------------------------------------------------------------------
// Sequence I/O
// ---------------------------------------------------------------------------

enum class SequenceFormat { Plain, Csv };

namespace detail {

[[nodiscard]] inline std::string_view trim(std::string_view s) noexcept {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[nodiscard]] inline Value parse_value(std::string_view token, std::size_t line) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw InputError("line " + std::to_string(line) + ": cannot parse integer '" + std::string(token) + "'");
    }
    return v;
}

// Appends every whitespace-separated integer on `line_text` to `out`.
inline void parse_line(std::string_view line_text, std::size_t line, IntSeq& out) {
    std::size_t pos = 0;
    while (pos < line_text.size()) {
        const auto start = line_text.find_first_not_of(" \t\r\n\f\v", pos);
        if (start == std::string_view::npos) {
            break;
        }
        auto end = line_text.find_first_of(" \t\r\n\f\v", start);
        if (end == std::string_view::npos) {
            end = line_text.size();
        }
        out.push_back(parse_value(line_text.substr(start, end - start), line));
        pos = end;
    }
}

[[nodiscard]] inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto at = s.find(sep, start);
        fields.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) {
            return fields;
        }
        start = at + 1;
    }
}

} // namespace detail

// Whitespace/newline separated signed decimal integers.
[[nodiscard]] inline IntSeq parse_plain(std::istream& in) {
    IntSeq seq;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        detail::parse_line(line, ++line_no, seq);
    }
    if (seq.empty()) {
        throw InputError("input contains no values");
    }
    return seq;
}

// CSV with a header row; one value per row taken from `column`, or from the
// first column when no name is given. Blank rows are skipped.
[[nodiscard]] inline IntSeq parse_csv(std::istream& in, const std::string& column = {}) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> col;
    IntSeq seq;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = detail::trim(line);
        if (row.empty()) {
            continue;
        }
        const auto fields = detail::split(row, ',');
        if (!col) {
            if (column.empty()) {
                col = 0;
            } else {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (detail::trim(fields[i]) == column) {
                        col = i;
                    }
                }
                if (!col) {
                    throw InputError("line " + std::to_string(line_no) + ": no column named '" + column + "'");
                }
            }
            continue;
        }
        if (*col >= fields.size()) {
            throw InputError("line " + std::to_string(line_no) + ": missing column " + std::to_string(*col + 1));
        }
        seq.push_back(detail::parse_value(detail::trim(fields[*col]), line_no));
    }
    if (seq.empty()) {
        throw InputError("csv input contains no values");
    }
    return seq;
}

[[nodiscard]] inline IntSeq load_sequence(const std::string& path, SequenceFormat format = SequenceFormat::Plain,
                                          const std::string& column = {}) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return format == SequenceFormat::Csv ? parse_csv(in, column) : parse_plain(in);
}

// One pattern per nonblank line.
[[nodiscard]] inline std::vector<IntSeq> parse_patterns(std::istream& in) {
    std::vector<IntSeq> patterns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        IntSeq p;
        detail::parse_line(line, ++line_no, p);
        if (!p.empty()) {
            patterns.push_back(std::move(p));
        }
    }
    if (patterns.empty()) {
        throw InputError("pattern input contains no patterns");
    }
    return patterns;
}

[[nodiscard]] inline std::vector<IntSeq> load_patterns(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return parse_patterns(in);
}

// One value per line.
inline void write_sequence(std::ostream& out, SeqView seq) {
    for (Value v : seq) {
        out << v << '\n';
    }
}

// One pattern per line, values separated by single spaces.
inline void write_patterns(std::ostream& out, const std::vector<IntSeq>& patterns) {
    for (const IntSeq& p : patterns) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            out << (i == 0 ? "" : " ") << p[i];
        }
        out << '\n';
    }
}

enum class HitFormat { Csv, Tsv };

inline void write_hits(std::ostream& out, const std::vector<MatchHit>& hits, HitFormat format = HitFormat::Csv) {
    const char sep = format == HitFormat::Tsv ? '\t' : ',';
    for (const MatchHit& h : hits) {
        out << h.pattern_id << sep << h.end_pos << '\n';
    }
}

// ---------------------------------------------------------------------------
// Corpus generation and pattern extraction
// ---------------------------------------------------------------------------

// Uniform i.i.d. values in [0, alphabet_size), see Rng for the generator.
[[nodiscard]] inline IntSeq generate(std::size_t length, std::uint64_t alphabet_size, std::uint64_t seed) {
    if (alphabet_size < 1) {
        throw ConfigError("alphabet size must be at least 1");
    }
    Rng rng(seed);
    IntSeq seq(length);
    for (Value& v : seq) {
        v = static_cast<Value>(rng.below(alphabet_size));
    }
    return seq;
}

// Pattern length: fixed when lo == hi, otherwise drawn uniformly in [lo, hi].
struct LengthSpec {
    std::size_t lo = 1;
    std::size_t hi = 1;

    [[nodiscard]] static LengthSpec fixed(std::size_t m) noexcept { return {m, m}; }
    [[nodiscard]] static LengthSpec interval(std::size_t lo, std::size_t hi) noexcept { return {lo, hi}; }
    [[nodiscard]] bool is_fixed() const noexcept { return lo == hi; }

    // "16" or "8-32".
    [[nodiscard]] std::string to_string() const {
        return is_fixed() ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
    }

    [[nodiscard]] static LengthSpec parse(std::string_view s) {
        auto number = [&](std::string_view part) {
            std::size_t v = 0;
            const auto t = detail::trim(part);
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
                throw ConfigError("bad length spec '" + std::string(s) + "'");
            }
            return v;
        };
        const auto dash = s.find_first_of("-:,");
        if (dash == std::string_view::npos) {
            return fixed(number(s));
        }
        return interval(number(s.substr(0, dash)), number(s.substr(dash + 1)));
    }

    friend bool operator==(const LengthSpec&, const LengthSpec&) = default;
};

[[nodiscard]] inline std::vector<IntSeq> extract_patterns(SeqView text, std::size_t k, LengthSpec spec,
                                                          std::uint64_t seed) {
    if (spec.lo < 1 || spec.lo > spec.hi) {
        throw ConfigError("pattern lengths must satisfy 1 <= lo <= hi");
    }
    if (spec.hi > text.size()) {
        throw ConfigError("pattern length " + std::to_string(spec.hi) + " exceeds text length " +
                          std::to_string(text.size()));
    }
    Rng rng(seed);
    std::vector<IntSeq> patterns;
    patterns.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t len = spec.is_fixed() ? spec.lo : static_cast<std::size_t>(rng.between(spec.lo, spec.hi));
        const std::size_t start = static_cast<std::size_t>(rng.below(text.size() - len + 1));
        patterns.emplace_back(text.begin() + static_cast<std::ptrdiff_t>(start),
                              text.begin() + static_cast<std::ptrdiff_t>(start + len));
    }
    return patterns;
}

// ---------------------------------------------------------------------------
// Search dispatch
// ---------------------------------------------------------------------------

enum class Algorithm { WuManberPd, WuManberBinary, WuManberBinaryMinIndex, RabinKarp, AlphaSkipBinary, AlphaSkipPd, Naive };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::WuManberPd,      Algorithm::WuManberBinary, Algorithm::WuManberBinaryMinIndex,
    Algorithm::RabinKarp,       Algorithm::AlphaSkipBinary, Algorithm::AlphaSkipPd,
    Algorithm::Naive,
};

[[nodiscard]] inline std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::WuManberPd: return "wmp";
    case Algorithm::WuManberBinary: return "wmb";
    case Algorithm::WuManberBinaryMinIndex: return "wmbm";
    case Algorithm::RabinKarp: return "rk";
    case Algorithm::AlphaSkipBinary: return "asb";
    case Algorithm::AlphaSkipPd: return "asp";
    case Algorithm::Naive: return "naive";
    }
    return "?";
}

[[nodiscard]] inline Algorithm parse_algorithm(std::string_view tag) {
    for (Algorithm a : kAllAlgorithms) {
        if (to_string(a) == tag) {
            return a;
        }
    }
    throw ConfigError("unknown algorithm '" + std::string(tag) + "'");
}

[[nodiscard]] inline EncodingKind parse_encoding(std::string_view tag) {
    if (tag == "pd") {
        return EncodingKind::ParentDistance;
    }
    if (tag == "bin") {
        return EncodingKind::Binary;
    }
    throw ConfigError("unknown encoding '" + std::string(tag) + "' (expected pd or bin)");
}

// "auto", "exact" or a prime.
[[nodiscard]] inline ModulusChoice parse_modulus(std::string_view tag) {
    if (tag == "auto") {
        return ModulusChoice::automatic();
    }
    if (tag == "exact") {
        return ModulusChoice::exact();
    }
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(tag.data(), tag.data() + tag.size(), p);
    if (ec != std::errc() || ptr != tag.data() + tag.size() || tag.empty()) {
        throw ConfigError("bad modulus '" + std::string(tag) + "' (expected auto, exact or a prime)");
    }
    if (p <= 2 || !is_prime(p)) {
        throw ConfigError("modulus must be a prime greater than 2, got " + std::string(tag));
    }
    return ModulusChoice::with_prime(p);
}

struct SearchConfig {
    Algorithm algorithm = Algorithm::WuManberBinary;
    // Unset: the encoding implied by the algorithm tag.
    std::optional<EncodingKind> encoding;
    ModulusChoice modulus;
    // Unset: choose_block_size(k, m).
    std::optional<std::size_t> block;
    // Also implied by wmbm.
    bool min_index_filter = false;
    bool reuse_fingerprints = true;
    // Above 1, the text is scanned in overlapping chunks on this many
    // threads (see parallel_search); search stats are then not collected.
    std::size_t threads = 1;
};

// Options after applying algorithm defaults and rejecting incompatible mixes.
struct ResolvedSearch {
    Algorithm algorithm;
    EncodingKind encoding;
    bool min_index_filter;
    bool reuse_fingerprints;
};

[[nodiscard]] inline ResolvedSearch resolve_search(const SearchConfig& cfg) {
    EncodingKind implied = EncodingKind::Binary;
    switch (cfg.algorithm) {
    case Algorithm::WuManberPd:
    case Algorithm::AlphaSkipPd:
        implied = EncodingKind::ParentDistance;
        break;
    default:
        break;
    }
    const EncodingKind encoding = cfg.encoding.value_or(implied);
    const std::string tag(to_string(cfg.algorithm));
    if (cfg.algorithm != Algorithm::Naive && encoding != implied) {
        throw ConfigError("algorithm " + tag + " uses the " + to_string(implied) + " encoding, not " +
                          to_string(encoding));
    }
    const bool filter = cfg.min_index_filter || cfg.algorithm == Algorithm::WuManberBinaryMinIndex;
    if (filter) {
        switch (cfg.algorithm) {
        case Algorithm::WuManberBinary:
        case Algorithm::WuManberBinaryMinIndex:
        case Algorithm::AlphaSkipBinary:
            break;
        default:
            throw ConfigError("min-index filtering is only available with wmb, wmbm and asb, not " + tag);
        }
    }
    return {cfg.algorithm, encoding, filter, cfg.reuse_fingerprints};
}

struct SearchRun {
    std::vector<MatchHit> hits;
    double preprocess_ms = 0;
    double search_ms = 0;
    // Block size in force, 0 for matchers that do not use blocks.
    std::size_t block = 0;
    std::optional<FingerprintConfig> fingerprint;
    SearchStats stats;

    [[nodiscard]] double total_ms() const noexcept { return preprocess_ms + search_ms; }
};

namespace detail {

using Clock = std::chrono::steady_clock;

[[nodiscard]] inline double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

} // namespace detail

// Validates the configuration, builds the tables and scans the text. The
// preprocessing time covers pattern preparation and table construction.
[[nodiscard]] inline SearchRun run_search(SeqView text, const std::vector<IntSeq>& patterns,
                                          const SearchConfig& config) {
    const ResolvedSearch rs = resolve_search(config);
    if (patterns.empty()) {
        throw InputError("pattern set is empty");
    }
    std::size_t m = patterns.front().size();
    for (const IntSeq& p : patterns) {
        m = std::min(m, p.size());
    }
    if (m == 0) {
        throw InputError("patterns must be nonempty");
    }

    const bool blocks = rs.algorithm != Algorithm::RabinKarp && rs.algorithm != Algorithm::Naive;
    const std::size_t b = blocks ? config.block.value_or(choose_block_size(patterns.size(), m)) : 0;
    std::optional<FingerprintConfig> fp_cfg;
    if (blocks) {
        if (b < 1 || b > m) {
            throw ConfigError("block size " + std::to_string(b) + " outside [1, " + std::to_string(m) + "]");
        }
        fp_cfg = resolve_config(rs.encoding, config.modulus, b);
    } else if (rs.algorithm == Algorithm::RabinKarp) {
        fp_cfg = resolve_config(EncodingKind::Binary, config.modulus, m);
    }

    SearchRun run;
    run.block = b;
    run.fingerprint = fp_cfg;
    const SearchOptions options{rs.min_index_filter, rs.reuse_fingerprints};

    auto t0 = detail::Clock::now();
    const PreparedPatternSet pps(patterns, blocks ? std::optional<std::size_t>(b) : std::nullopt);
    const auto scan = [&](const auto& search) {
        run.preprocess_ms = detail::elapsed_ms(t0);
        t0 = detail::Clock::now();
        if (config.threads > 1) {
            run.hits = parallel_search(text, pps.max_length(), config.threads,
                                       [&](SeqView slice) { return search(slice, nullptr); });
        } else {
            run.hits = search(text, &run.stats);
        }
    };
    switch (rs.algorithm) {
    case Algorithm::WuManberPd:
    case Algorithm::WuManberBinary:
    case Algorithm::WuManberBinaryMinIndex: {
        const WuManberTables tables = wm_preprocess(pps, *fp_cfg);
        scan([&](SeqView t, SearchStats* st) { return wm_search(t, tables, pps, options, st); });
        break;
    }
    case Algorithm::RabinKarp: {
        const RabinKarpTables tables = rk_preprocess(pps, *fp_cfg);
        scan([&](SeqView t, SearchStats* st) { return rk_search(t, tables, pps, st); });
        break;
    }
    case Algorithm::AlphaSkipBinary:
    case Algorithm::AlphaSkipPd: {
        const AlphaSkipTables tables = as_preprocess(pps, *fp_cfg);
        scan([&](SeqView t, SearchStats* st) { return as_search(t, tables, pps, options, st); });
        break;
    }
    case Algorithm::Naive:
        scan([&](SeqView t, SearchStats*) { return naive_search(t, pps); });
        break;
    }
    run.search_ms = detail::elapsed_ms(t0);
    return run;
}

// ---------------------------------------------------------------------------
// Benchmarks
// ---------------------------------------------------------------------------

struct BenchConfig {
    std::vector<Algorithm> algorithms;
    std::vector<std::size_t> ks;
    std::vector<LengthSpec> lengths;
    std::size_t repetitions = 1;
    std::uint64_t seed = 1;
    ModulusChoice modulus;
    std::optional<std::size_t> block;
};

struct BenchRecord {
    std::string algorithm;
    std::size_t k = 0;
    std::string length_spec;
    std::string encoding;
    bool min_index_filter = false;
    std::string modulus;
    std::size_t block = 0;
    double preprocess_ms = 0;
    double search_ms = 0;
    double total_ms = 0;
    std::size_t hit_count = 0;
    std::size_t repetitions = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kBenchHeader =
    "algorithm,k,length_spec,encoding,min_index_filter,modulus,block,preprocess_ms,search_ms,total_ms,hit_count,"
    "repetitions";

// Seed for the pattern set of one (k, length spec) cell. Every algorithm in
// the cell sees the same patterns.
[[nodiscard]] inline std::uint64_t bench_pattern_seed(std::uint64_t seed, std::size_t k, std::size_t length_index) {
    return Rng::substream_seed(seed, k * 1000003ULL + length_index);
}

[[nodiscard]] inline BenchRecord bench_cell(SeqView text, const std::vector<IntSeq>& patterns, Algorithm algorithm,
                                            const std::string& length_spec, std::size_t repetitions,
                                            const BenchConfig& config) {
    if (repetitions < 1) {
        throw ConfigError("repetitions must be at least 1");
    }
    SearchConfig sc;
    sc.algorithm = algorithm;
    sc.modulus = config.modulus;
    sc.block = config.block;
    const ResolvedSearch rs = resolve_search(sc);

    BenchRecord rec;
    rec.algorithm = std::string(to_string(algorithm));
    rec.k = patterns.size();
    rec.length_spec = length_spec;
    rec.encoding = algorithm == Algorithm::Naive ? "pd" : to_string(rs.encoding);
    rec.min_index_filter = rs.min_index_filter;
    rec.repetitions = repetitions;
    double pre = 0;
    double search = 0;
    for (std::size_t r = 0; r < repetitions; ++r) {
        const SearchRun run = run_search(text, patterns, sc);
        pre += run.preprocess_ms;
        search += run.search_ms;
        rec.hit_count = run.hits.size();
        rec.block = run.block;
        if (!run.fingerprint) {
            rec.modulus = "none";
        } else if (run.fingerprint->modulus()) {
            rec.modulus = std::to_string(*run.fingerprint->modulus());
        } else {
            rec.modulus = "exact";
        }
    }
    rec.preprocess_ms = pre / static_cast<double>(repetitions);
    rec.search_ms = search / static_cast<double>(repetitions);
    rec.total_ms = rec.preprocess_ms + rec.search_ms;
    return rec;
}

// One record per (algorithm, k, length spec), in that nesting order with k
// outermost.
[[nodiscard]] inline std::vector<BenchRecord> bench(SeqView text, const BenchConfig& config) {
    std::vector<BenchRecord> records;
    for (std::size_t k : config.ks) {
        for (std::size_t li = 0; li < config.lengths.size(); ++li) {
            const LengthSpec spec = config.lengths[li];
            const auto patterns = extract_patterns(text, k, spec, bench_pattern_seed(config.seed, k, li));
            for (Algorithm algorithm : config.algorithms) {
                records.push_back(bench_cell(text, patterns, algorithm, spec.to_string(), config.repetitions, config));
            }
        }
    }
    return records;
}

namespace detail {

[[nodiscard]] inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

[[nodiscard]] inline double parse_double(std::string_view s, std::size_t line) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InputError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

[[nodiscard]] inline std::size_t parse_size(std::string_view s, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InputError("line " + std::to_string(line) + ": bad count '" + std::string(s) + "'");
    }
    return v;
}

} // namespace detail

inline void write_bench_header(std::ostream& out) { out << kBenchHeader << '\n'; }

// Times use the shortest representation that reads back to the same double.
inline void write_bench_row(std::ostream& out, const BenchRecord& r) {
    out << r.algorithm << ',' << r.k << ',' << r.length_spec << ',' << r.encoding << ',' << (r.min_index_filter ? 1 : 0)
        << ',' << r.modulus << ',' << r.block << ',' << detail::format_double(r.preprocess_ms) << ','
        << detail::format_double(r.search_ms) << ',' << detail::format_double(r.total_ms) << ',' << r.hit_count << ','
        << r.repetitions << '\n';
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    write_bench_header(out);
    for (const auto& r : records) {
        write_bench_row(out, r);
    }
}

[[nodiscard]] inline std::vector<BenchRecord> parse_bench_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != kBenchHeader) {
        throw InputError("bench csv: missing or unexpected header");
    }
    std::vector<BenchRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = detail::trim(line);
        if (row.empty()) {
            continue;
        }
        const auto f = detail::split(row, ',');
        if (f.size() != 12) {
            throw InputError("bench csv line " + std::to_string(line_no) + ": expected 12 fields");
        }
        BenchRecord r;
        r.algorithm = std::string(f[0]);
        r.k = detail::parse_size(f[1], line_no);
        r.length_spec = std::string(f[2]);
        r.encoding = std::string(f[3]);
        r.min_index_filter = detail::parse_size(f[4], line_no) != 0;
        r.modulus = std::string(f[5]);
        r.block = detail::parse_size(f[6], line_no);
        r.preprocess_ms = detail::parse_double(f[7], line_no);
        r.search_ms = detail::parse_double(f[8], line_no);
        r.total_ms = detail::parse_double(f[9], line_no);
        r.hit_count = detail::parse_size(f[10], line_no);
        r.repetitions = detail::parse_size(f[11], line_no);
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace ctmatch
