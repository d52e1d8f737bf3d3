#include "gregory/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "gregory/cache.hpp"
#include "gregory/format.hpp"
#include "gregory/serialization.hpp"

namespace gregory {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SequenceSpec {
    long min_bound;
    long max_bound;
};

const std::map<std::string, SequenceSpec>& sequences() {
    static const std::map<std::string, SequenceSpec> specs = {
        {"b2", {0, 2000}}, {"bernoulli", {0, 2000}}, {"qb2", {0, 40}}, {"atable", {1, 30}}, {"ctable", {1, 30}},
    };
    return specs;
}

const std::vector<std::string> kIdentities = {"b2e", "thm1",  "s2s3",    "b2r",       "thm2",
                                              "qdegen", "euler", "dilcher", "qint-split"};

Json compute_payload(const std::string& seq, long bound) {
    if (seq == "b2") {
        return json::encode(b2_compute(bound));
    }
    if (seq == "bernoulli") {
        return json::encode(bernoulli_compute(bound));
    }
    if (seq == "qb2") {
        return json::encode(qb2_compute(bound));
    }
    if (seq == "atable") {
        return json::encode(a_table_build(static_cast<int>(bound)));
    }
    return json::encode(c_table_build(static_cast<int>(bound)));
}

template <typename Table>
std::string render(const Table& table, const std::string& fmt) {
    if (fmt == "csv") {
        return format::csv(table);
    }
    if (fmt == "latex") {
        return format::latex(table);
    }
    return json::encode(table).dump(2) + "\n";
}

std::string render_payload(const std::string& seq, const Json& payload, const std::string& fmt) {
    if (seq == "b2") {
        return render(json::decode_b2(payload), fmt);
    }
    if (seq == "bernoulli") {
        return render(json::decode_bernoulli(payload), fmt);
    }
    if (seq == "qb2") {
        return render(json::decode_qb2(payload), fmt);
    }
    if (seq == "atable") {
        return render(json::decode_atable(payload), fmt);
    }
    return render(json::decode_ctable(payload), fmt);
}

struct ComputeOptions {
    std::string sequence;
    long max = -1;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
};

int run_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
    const SequenceSpec spec = sequences().at(o.sequence);
    if (o.max < spec.min_bound || o.max > spec.max_bound) {
        throw UsageError("--max for " + o.sequence + " must lie in [" + std::to_string(spec.min_bound) + ", " +
                         std::to_string(spec.max_bound) + "]");
    }
    Json payload;
    if (o.no_cache) {
        payload = compute_payload(o.sequence, o.max);
    } else {
        const SequenceCache cache(o.cache_dir.empty() ? SequenceCache::default_dir() : std::filesystem::path(o.cache_dir));
        payload = cache.fetch(o.sequence, o.max, [&] { return compute_payload(o.sequence, o.max); }, &err).payload;
    }
    out << render_payload(o.sequence, payload, o.format);
    return kExitPass;
}

struct VerifyOptions {
    std::string identity;
    std::optional<long> N;
    std::optional<long> n;
    std::string mode = "symbolic";
    std::string sample_points;
    unsigned jobs = 1;
    std::string table;
};

std::vector<Rational> parse_points(const std::string& text) {
    std::vector<Rational> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, comma - start);
        try {
            points.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw UsageError("bad sample point \"" + item + "\"");
        }
        start = comma + 1;
    }
    return points;
}

long checked(std::optional<long> value, long fallback, long lo, long hi, const char* flag) {
    const long v = value.value_or(fallback);
    if (v < lo || v > hi) {
        throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
}

B2Table load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read table file " + path);
    }
    try {
        return json::decode_b2(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("table file " + path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("table file " + path + ": " + e.what());
    }
}

VerificationReport dispatch_verify(const VerifyOptions& o) {
    const unsigned jobs = o.jobs;
    const std::string& id = o.identity;
    if (id == "b2e") {
        return verify_b2e(checked(o.n, 200, 0, 2000, "--n"), jobs);
    }
    if (id == "thm1") {
        const long N = checked(o.N, 8, 1, 30, "--N");
        const long n = checked(o.n, 60, 1, 2000, "--n");
        if (o.table.empty()) {
            return verify_theorem1({1, N}, {1, n}, jobs);
        }
        const B2Table table = load_table(o.table);
        if (!table.covers(n)) {
            throw UsageError("table file covers only n <= " + std::to_string(table.max_index()));
        }
        return verify_theorem1(table, {1, N}, {1, n}, jobs);
    }
    if (id == "s2s3") {
        return verify_s2s3();
    }
    if (id == "b2r") {
        return verify_b2r(checked(o.n, 30, 0, 40, "--n"), jobs);
    }
    if (id == "thm2") {
        if (o.mode == "symbolic") {
            return verify_theorem2_symbolic(checked(o.n, 15, 0, 40, "--n"), jobs);
        }
        const auto points = o.sample_points.empty() ? default_sample_points() : parse_points(o.sample_points);
        return verify_theorem2_sampled(checked(o.n, 40, 0, 2000, "--n"), points, jobs);
    }
    if (id == "qdegen") {
        return verify_qdegen(checked(o.n, 30, 0, 40, "--n"), jobs);
    }
    if (id == "euler") {
        return verify_euler(checked(o.n, 50, 2, 1000, "--n"), jobs);
    }
    if (id == "dilcher") {
        const long N = checked(o.N, 7, 1, 30, "--N");
        const long n = checked(o.n, 40, 1, 1000, "--n");
        return verify_dilcher(static_cast<int>(N), n, jobs);
    }
    return verify_qint_split(checked(o.n, 10, 0, 200, "--n"), jobs);
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
    const VerificationReport report = dispatch_verify(o);
    out << to_json(report).dump(2) << '\n';
    return report.passed() ? kExitPass : kExitCounterexample;
}

int run_cache(const std::string& action, const std::string& dir, std::ostream& out) {
    const SequenceCache cache(dir.empty() ? SequenceCache::default_dir() : std::filesystem::path(dir));
    if (action == "clear") {
        out << "removed " << cache.clear() << " entries from " << cache.dir().string() << '\n';
        return kExitPass;
    }
    out << "cache directory: " << cache.dir().string() << '\n';
    for (const auto& e : cache.list()) {
        out << e.sequence << '\t';
        if (e.valid) {
            out << "max=" << e.max_index << '\n';
        } else {
            out << "corrupt\n";
        }
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tables and identity checks for Bernoulli numbers of the second kind", "gregory"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Compute a table");
    std::vector<std::string> seq_names;
    for (const auto& [name, spec] : sequences()) {
        seq_names.push_back(name);
    }
    c->add_option("sequence", compute.sequence, "b2, qb2, bernoulli, atable or ctable")
        ->required()
        ->check(CLI::IsMember(seq_names));
    c->add_option("--max", compute.max, "Largest index (largest order for atable/ctable)")->required();
    c->add_option("--format", compute.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
    c->add_option("--cache-dir", compute.cache_dir, std::string("Cache directory (default $") + kCacheDirEnv +
                                                        " or ~/.gregory-cache)");
    c->add_flag("--no-cache", compute.no_cache, "Neither read nor write the cache");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check an identity over a parameter range and print a JSON report");
    v->add_option("identity", verify.identity)->required()->check(CLI::IsMember(kIdentities));
    v->add_option("--N", verify.N, "Largest N");
    v->add_option("--n", verify.n, "Largest n (the bound B for qint-split)");
    v->add_option("--mode", verify.mode, "thm2 mode")->check(CLI::IsMember({"symbolic", "sampled"}));
    v->add_option("--sample-points", verify.sample_points, "Comma-separated rationals for sampled mode");
    v->add_option("--jobs", verify.jobs, "Concurrent cells")->check(CLI::Range(1u, 256u));
    v->add_option("--table", verify.table, "thm1 only: read b_0..b_M from this JSON array instead of computing");

    std::string cache_action;
    std::string cache_dir;
    auto* k = app.add_subcommand("cache", "Inspect or clear the table cache");
    k->add_option("action", cache_action)->required()->check(CLI::IsMember({"list", "clear"}));
    k->add_option("--cache-dir", cache_dir, "Cache directory");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (c->parsed()) {
            return run_compute(compute, out, err);
        }
        if (v->parsed()) {
            return run_verify(verify, out);
        }
        return run_cache(cache_action, cache_dir, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace gregory
