// ctmatch: command-line front end for multiple-pattern Cartesian tree matching.
//
//   ctmatch search  --text T --patterns P [--algo wmb] ...   hits as pattern_id,end_position
//   ctmatch gen     --length N --alphabet A --seed S           random corpus, one value per line
//   ctmatch extract --text T --k K --length M|--interval L-H   patterns, one per line
//   ctmatch bench   ...                                        timing CSV
//   ctmatch analyze [--max-n N] [--monte-carlo ...]            match probabilities
//
// Exit codes: 0 success, 1 input/parse error, 2 configuration error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ctmatch/ctmatch.hpp>

namespace {

using namespace ctmatch;

constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;

struct TextSource {
    std::string path;
    std::string format = "plain";
    std::string column;

    void add_to(CLI::App& app, bool required = true) {
        auto* opt = app.add_option("--text", path, "Text file (integers)");
        if (required) {
            opt->required();
        }
        app.add_option("--text-format", format, "plain or csv")->capture_default_str();
        app.add_option("--column", column, "CSV column name (default: first column)");
    }

    [[nodiscard]] IntSeq load() const {
        SequenceFormat f = SequenceFormat::Plain;
        if (format == "csv") {
            f = SequenceFormat::Csv;
        } else if (format != "plain") {
            throw ConfigError("unknown text format '" + format + "' (expected plain or csv)");
        }
        return load_sequence(path, f, column);
    }
};

// Writes to --output when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw InputError("cannot write '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::optional<std::size_t> parse_block(const std::string& s) {
    if (s == "auto") {
        return std::nullopt;
    }
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(s, &pos);
        if (pos != s.size() || v == 0) {
            throw ConfigError("");
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("bad block size '" + s + "' (expected auto or a positive integer)");
    }
}

template <typename T>
std::vector<T> split_list(const std::string& s, T (*parse)(std::string_view)) {
    std::vector<T> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto at = s.find(',', start);
        if (at == std::string::npos) {
            at = s.size();
        }
        if (at > start) {
            out.push_back(parse(std::string_view(s).substr(start, at - start)));
        }
        start = at + 1;
    }
    return out;
}

std::size_t parse_count(std::string_view s) {
    try {
        std::size_t pos = 0;
        const std::string str(s);
        const auto v = std::stoull(str, &pos);
        if (pos != str.size()) {
            throw ConfigError("");
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("bad count '" + std::string(s) + "'");
    }
}

Algorithm algorithm_from(std::string_view s) { return parse_algorithm(s); }
LengthSpec length_from(std::string_view s) { return LengthSpec::parse(s); }

int run(int argc, char** argv) {
    CLI::App app{"Multiple-pattern Cartesian tree matching"};
    app.require_subcommand(1);

    // search
    auto* search = app.add_subcommand("search", "Report every (pattern, end position) match");
    TextSource search_text;
    search_text.add_to(*search);
    std::string patterns_path;
    std::string algo = "wmb";
    std::string encoding;
    std::string modulus = "auto";
    std::string block = "auto";
    bool min_filter = false;
    std::string hit_format = "csv";
    std::string search_output;
    bool timing = false;
    std::size_t threads = 1;
    search->add_option("--patterns", patterns_path, "Pattern file, one pattern per line")->required();
    search->add_option("--algo", algo, "wmp, wmb, wmbm, rk, asb, asp or naive")->capture_default_str();
    search->add_option("--encoding", encoding, "pd or bin (must agree with --algo)");
    search->add_option("--modulus", modulus, "auto, exact or a prime")->capture_default_str();
    search->add_option("--block", block, "auto or a block size")->capture_default_str();
    search->add_flag("--min-index-filter", min_filter, "Filter candidates by block min-index");
    search->add_option("--format", hit_format, "csv or tsv")->capture_default_str();
    search->add_option("--output,-o", search_output, "Output file (default stdout)");
    search->add_flag("--timing", timing, "Print preprocessing and search times to stderr");
    search->add_option("--threads", threads, "Scan the text in parallel chunks")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a uniform random corpus");
    std::size_t gen_length = 0;
    std::uint64_t gen_alphabet = 1000;
    std::uint64_t gen_seed = 1;
    std::string gen_output;
    gen->add_option("--length,-n", gen_length, "Number of values")->required();
    gen->add_option("--alphabet", gen_alphabet, "Values are drawn from [0, alphabet)")->capture_default_str();
    gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
    gen->add_option("--output,-o", gen_output, "Output file (default stdout)");

    // extract
    auto* extract = app.add_subcommand("extract", "Extract random patterns from a text");
    TextSource extract_text;
    extract_text.add_to(*extract);
    std::size_t extract_k = 1;
    std::string extract_length;
    std::string extract_interval;
    std::uint64_t extract_seed = 1;
    std::string extract_output;
    extract->add_option("--k", extract_k, "Number of patterns")->capture_default_str();
    auto* len_opt = extract->add_option("--length,-m", extract_length, "Fixed pattern length");
    auto* int_opt = extract->add_option("--interval", extract_interval, "Length interval LO-HI");
    len_opt->excludes(int_opt);
    extract->add_option("--seed", extract_seed, "Random seed")->capture_default_str();
    extract->add_option("--output,-o", extract_output, "Output file (default stdout)");

    // bench
    auto* benchcmd = app.add_subcommand("bench", "Time algorithms over (k, length) settings; CSV output");
    TextSource bench_text;
    bench_text.add_to(*benchcmd, false);
    std::size_t bench_n = 1000000;
    std::uint64_t bench_alphabet = 1000;
    std::string bench_algos = "wmp,wmb,wmbm,rk,asb";
    std::string bench_ks = "10";
    std::string bench_lengths = "16,64,256";
    std::size_t bench_reps = 10;
    std::uint64_t bench_seed = 1;
    std::string bench_modulus = "auto";
    std::string bench_block = "auto";
    std::string bench_output;
    benchcmd->add_option("--n", bench_n, "Generated text length (when no --text)")->capture_default_str();
    benchcmd->add_option("--alphabet", bench_alphabet, "Generated alphabet size")->capture_default_str();
    benchcmd->add_option("--algos", bench_algos, "Comma-separated algorithm tags")->capture_default_str();
    benchcmd->add_option("--k", bench_ks, "Comma-separated pattern counts")->capture_default_str();
    benchcmd->add_option("--lengths", bench_lengths, "Comma-separated lengths or LO-HI intervals")
        ->capture_default_str();
    benchcmd->add_option("--reps", bench_reps, "Repetitions per cell")->capture_default_str();
    benchcmd->add_option("--seed", bench_seed, "Seed for text and pattern generation")->capture_default_str();
    benchcmd->add_option("--modulus", bench_modulus, "auto, exact or a prime")->capture_default_str();
    benchcmd->add_option("--block", bench_block, "auto or a block size")->capture_default_str();
    benchcmd->add_option("--output,-o", bench_output, "Output file (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Exact match probabilities and Monte Carlo estimates");
    std::size_t max_n = 30;
    bool monte_carlo = false;
    std::uint64_t trials = 1000000;
    std::uint64_t analyze_seed = 1;
    analyze->add_option("--max-n", max_n, "Largest length to report")->capture_default_str();
    analyze->add_flag("--monte-carlo", monte_carlo, "Estimate rates empirically instead");
    analyze->add_option("--trials", trials, "Monte Carlo trials per length")->capture_default_str();
    analyze->add_option("--seed", analyze_seed, "Monte Carlo seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (*search) {
        SearchConfig cfg;
        cfg.algorithm = parse_algorithm(algo);
        if (!encoding.empty()) {
            cfg.encoding = parse_encoding(encoding);
        }
        cfg.modulus = parse_modulus(modulus);
        cfg.block = parse_block(block);
        cfg.min_index_filter = min_filter;
        cfg.threads = threads;
        HitFormat format = HitFormat::Csv;
        if (hit_format == "tsv") {
            format = HitFormat::Tsv;
        } else if (hit_format != "csv") {
            throw ConfigError("unknown hit format '" + hit_format + "' (expected csv or tsv)");
        }
        (void)resolve_search(cfg);
        const IntSeq text = search_text.load();
        const auto patterns = load_patterns(patterns_path);
        const SearchRun result = run_search(text, patterns, cfg);
        Sink sink(search_output);
        write_hits(sink.stream(), result.hits, format);
        if (timing) {
            std::cerr << "preprocess_ms=" << result.preprocess_ms << " search_ms=" << result.search_ms
                      << " total_ms=" << result.total_ms() << " hits=" << result.hits.size() << '\n';
        }
        return 0;
    }

    if (*gen) {
        const IntSeq seq = generate(gen_length, gen_alphabet, gen_seed);
        Sink sink(gen_output);
        write_sequence(sink.stream(), seq);
        return 0;
    }

    if (*extract) {
        LengthSpec spec;
        if (!extract_length.empty()) {
            spec = LengthSpec::fixed(parse_count(extract_length));
        } else if (!extract_interval.empty()) {
            spec = LengthSpec::parse(extract_interval);
            if (spec.is_fixed() && extract_interval.find_first_of("-:,") == std::string::npos) {
                throw ConfigError("--interval expects LO-HI");
            }
        } else {
            throw ConfigError("extract needs --length or --interval");
        }
        const IntSeq text = extract_text.load();
        const auto patterns = extract_patterns(text, extract_k, spec, extract_seed);
        Sink sink(extract_output);
        write_patterns(sink.stream(), patterns);
        return 0;
    }

    if (*benchcmd) {
        BenchConfig cfg;
        cfg.algorithms = split_list<Algorithm>(bench_algos, &algorithm_from);
        cfg.ks = split_list<std::size_t>(bench_ks, &parse_count);
        cfg.lengths = split_list<LengthSpec>(bench_lengths, &length_from);
        cfg.repetitions = bench_reps;
        cfg.seed = bench_seed;
        cfg.modulus = parse_modulus(bench_modulus);
        cfg.block = parse_block(bench_block);
        if (cfg.algorithms.empty() || cfg.ks.empty() || cfg.lengths.empty()) {
            throw ConfigError("bench needs at least one algorithm, k and length");
        }
        if (cfg.repetitions < 1) {
            throw ConfigError("--reps must be at least 1");
        }
        for (Algorithm a : cfg.algorithms) {
            SearchConfig probe;
            probe.algorithm = a;
            (void)resolve_search(probe);
        }
        const IntSeq text = bench_text.path.empty() ? generate(bench_n, bench_alphabet, bench_seed) : bench_text.load();
        Sink sink(bench_output);
        write_bench_header(sink.stream());
        for (std::size_t k : cfg.ks) {
            for (std::size_t li = 0; li < cfg.lengths.size(); ++li) {
                const LengthSpec spec = cfg.lengths[li];
                const auto patterns = extract_patterns(text, k, spec, bench_pattern_seed(cfg.seed, k, li));
                for (Algorithm a : cfg.algorithms) {
                    write_bench_row(sink.stream(),
                                    bench_cell(text, patterns, a, spec.to_string(), cfg.repetitions, cfg));
                    sink.stream().flush();
                }
            }
        }
        return 0;
    }

    if (*analyze) {
        if (max_n < 1) {
            throw ConfigError("--max-n must be at least 1");
        }
        if (monte_carlo) {
            if (trials < 1) {
                throw ConfigError("--trials must be at least 1");
            }
            const ProbabilityTable table = probability_table(max_n);
            std::cout << "n,trials,matches,frequency,exact,std_error,within_3se\n";
            for (std::size_t n = 1; n <= max_n; ++n) {
                const EmpiricalRate rate = empirical_match_rate(n, trials, analyze_seed);
                const double exact = table[n].convert_to<double>();
                const double se = EmpiricalRate::standard_error(exact, trials);
                const bool within = std::abs(rate.frequency() - exact) <= 3 * se || (se == 0 && rate.frequency() == exact);
                std::cout << n << ',' << trials << ',' << rate.matches << ',' << rate.frequency() << ',' << exact << ','
                          << se << ',' << (within ? "true" : "false") << '\n';
            }
            return 0;
        }
        std::cout << "n,p_numerator,p_denominator,bound_holds\n";
        for (const BoundCheck& row : check_match_bound(max_n)) {
            std::cout << row.n << ',' << numerator(row.p) << ',' << denominator(row.p) << ','
                      << (row.holds ? "true" : "false") << '\n';
        }
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "ctmatch: configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InputError& e) {
        std::cerr << "ctmatch: input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "ctmatch: error: " << e.what() << '\n';
        return kExitInput;
    }
}
