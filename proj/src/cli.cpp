#include "extremo/cli.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "extremo/dist.hpp"
#include "extremo/error.hpp"
#include "extremo/mc_oracle.hpp"
#include "extremo/order_check.hpp"
#include "extremo/report.hpp"
#include "extremo/verify.hpp"

namespace extremo::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("unknown format '" + s + "' (expected table|json|csv)");
}

double parse_double(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw UsageError("not a number: '" + s + "'");
    return v;
}

std::int64_t parse_int(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0') throw UsageError("not an integer: '" + s + "'");
    return v;
}

std::vector<double> parse_params(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
    if (out.empty()) throw UsageError("empty parameter list");
    return out;
}

// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_int(s);
        return {v, v};
    }
    const auto lo = parse_int(s.substr(0, dots));
    const auto hi = parse_int(s.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + s + "'");
    return {lo, hi};
}

std::string full(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fixed6(double v) {
    if (std::isnan(v)) return "-";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + full(v[i]);
    return s;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    if (j.contains("input")) return j.at("input");
    return j;
}

// Fills an option's target from the config when the flag was not given.
template <typename T>
void apply_config(const json& config, const char* key, const CLI::Option* opt, T& target) {
    if (opt->count() > 0 || !config.contains(key)) return;
    try {
        target = config.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("config key '") + key + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------

struct DistArgs {
    std::string family = "poisson";
    std::string stat = "max";
    std::string params;
    std::string k = "0..10";
    std::string format = "table";
};

int cmd_dist(const DistArgs& a, std::ostream& out) {
    const auto format = parse_format(a.format);
    const auto [lo, hi] = parse_range(a.k);
    if (lo < 0) throw UsageError("--k must be nonnegative");
    const ExtremeSpec spec{ParamVector(parse_family(a.family), parse_params(a.params)),
                           parse_statistic(a.stat)};
    const ExtremeDistribution dist(spec);
    const auto table = dist.tabulate(hi + 1);

    struct Row {
        std::int64_t k;
        double cdf, survival, pmf, hazard, rhazard;
    };
    std::vector<Row> rows;
    for (std::int64_t k = lo; k <= hi; ++k) {
        const double c = table.cdf_at(k);
        const double s = table.survival_at(k);
        const double pmf =
            c > 0.5 ? table.survival_at(k - 1) - s : c - table.cdf_at(k - 1);
        const double h = s > kHazardFloor ? hazard_from_survival(s, table.survival_at(k + 1))
                                          : std::nan("");
        const double rh = c > kHazardFloor ? reversed_hazard_from_cdf(table.cdf_at(k - 1), c)
                                           : std::nan("");
        rows.push_back({k, c, s, std::max(0.0, pmf), h, rh});
    }

    if (format == Format::Csv) {
        out << "k,cdf,survival,pmf,hazard,rhazard\n";
        for (const auto& r : rows) {
            out << r.k << ',' << full(r.cdf) << ',' << full(r.survival) << ',' << full(r.pmf)
                << ',' << full(r.hazard) << ',' << full(r.rhazard) << '\n';
        }
    } else if (format == Format::Json) {
        json jrows = json::array();
        const auto num = [](double v) { return std::isnan(v) ? json(nullptr) : json(v); };
        for (const auto& r : rows) {
            jrows.push_back({{"k", r.k},
                             {"cdf", r.cdf},
                             {"survival", r.survival},
                             {"pmf", r.pmf},
                             {"hazard", num(r.hazard)},
                             {"rhazard", num(r.rhazard)}});
        }
        json input = to_json(spec);
        input["k"] = {lo, hi};
        emit_json(out, make_envelope("dist", std::nullopt, input,
                                     {{"spec", to_json(spec)}, {"rows", jrows}}));
    } else {
        out << std::setw(6) << "k" << std::setw(12) << "cdf" << std::setw(12) << "survival"
            << std::setw(12) << "pmf" << std::setw(12) << "hazard" << std::setw(12) << "rhazard"
            << '\n';
        for (const auto& r : rows) {
            out << std::setw(6) << r.k << std::setw(12) << fixed6(r.cdf) << std::setw(12)
                << fixed6(r.survival) << std::setw(12) << fixed6(r.pmf) << std::setw(12)
                << fixed6(r.hazard) << std::setw(12) << fixed6(r.rhazard) << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct CompareArgs {
    std::string family = "poisson";
    std::string stat = "max";
    std::string family_b;
    std::string stat_b;
    std::string a;
    std::string b;
    std::string relation = "st";
    double epsilon = 1e-12;
    double tol = kOrderTolerance;
    std::int64_t cap = 10000;
    std::string format = "table";
};

int cmd_compare(const CompareArgs& args, std::ostream& out) {
    const auto format = parse_format(args.format);
    const ExtremeSpec spec_a{ParamVector(parse_family(args.family), parse_params(args.a)),
                             parse_statistic(args.stat)};
    const ExtremeSpec spec_b{
        ParamVector(parse_family(args.family_b.empty() ? args.family : args.family_b),
                    parse_params(args.b)),
        parse_statistic(args.stat_b.empty() ? args.stat : args.stat_b)};
    const auto relation = parse_relation(args.relation);
    const TruncationPolicy policy{args.epsilon, args.cap};
    const auto verdict = compare(ExtremeDistribution(spec_a), ExtremeDistribution(spec_b),
                                 relation, policy, args.tol);

    if (format == Format::Json) {
        json input{{"a", to_json(spec_a)},          {"b", to_json(spec_b)},
                   {"relation", args.relation},     {"epsilon", args.epsilon},
                   {"tol", args.tol},               {"cap", args.cap}};
        emit_json(out, make_envelope("compare", std::nullopt, input, to_json(verdict)));
    } else if (format == Format::Csv) {
        out << "k,margin\n";
        for (std::size_t k = 0; k < verdict.margins.size(); ++k) {
            out << k << ',' << (verdict.margins[k] ? full(*verdict.margins[k]) : "") << '\n';
        }
    } else {
        out << "relation:   " << to_string(verdict.relation) << '\n'
            << "direction:  " << to_string(verdict.direction) << '\n'
            << "crossings:  " << join(verdict.crossings) << '\n'
            << "k_max:      " << verdict.k_max << (verdict.cap_reached ? " (cap reached)" : "")
            << '\n'
            << "min margin: " << fixed6(verdict.min_margin()) << '\n'
            << "max margin: " << fixed6(verdict.max_margin()) << '\n';
    }
    return verdict.direction == Direction::Crossing ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct TheoremArgs {
    std::string id;
    std::int64_t trials = 1000;
    std::string n = "2..6";
    std::uint64_t seed = 42;
    unsigned threads = 0;
    double epsilon = 1e-12;
    double tol = kOrderTolerance;
    std::string quarantine_dir = "quarantine";
    std::string config;
    std::string format = "table";
};

int cmd_theorem(const TheoremArgs& a, std::ostream& out) {
    const auto format = parse_format(a.format);
    const auto id = parse_theorem(a.id);
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    const auto [lo, hi] = parse_range(a.n);
    CampaignOptions options;
    options.policy.tail_epsilon = a.epsilon;
    options.tolerance = a.tol;
    options.threads = a.threads;
    options.quarantine_dir = a.quarantine_dir;
    const auto report = verify_theorem(id, static_cast<std::size_t>(a.trials),
                                       {static_cast<int>(lo), static_cast<int>(hi)}, a.seed,
                                       options);

    if (format == Format::Json) {
        json input{{"id", a.id},       {"trials", a.trials},   {"n", a.n},
                   {"seed", a.seed},   {"epsilon", a.epsilon}, {"tol", a.tol}};
        auto env = make_envelope("theorem", a.seed, input, to_json(report));
        emit_json(out, env);
    } else if (format == Format::Csv) {
        out << "theorem_id,trials,seed,failures,worst_margin,equal_trials\n"
            << to_string(report.id) << ',' << report.trials << ',' << report.seed << ','
            << report.failures.size() << ',' << full(report.worst_margin) << ','
            << report.equal_trials << '\n';
    } else {
        out << "theorem:      " << to_string(report.id) << '\n'
            << "trials:       " << report.trials << " (n in " << lo << ".." << hi << ")\n"
            << "seed:         " << report.seed << '\n'
            << "failures:     " << report.failures.size() << '\n'
            << "worst margin: " << full(report.worst_margin) << '\n'
            << "equal trials: " << report.equal_trials << '\n'
            << "elapsed:      " << report.elapsed.count() << " ms\n";
        for (const auto& f : report.failures) {
            out << "  trial " << f.trial << " [" << f.kind << "] x=(" << join(f.x) << ") y=("
                << join(f.y) << ") direction=" << to_string(f.verdict.direction) << '\n';
        }
    }
    return report.failures.empty() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

int cmd_reproduce(const std::string& id_text, const std::string& format_text, std::ostream& out) {
    const auto format = parse_format(format_text);
    CounterexampleId id{};
    try {
        id = parse_counterexample(id_text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto report = reproduce_counterexample(id);
    if (format == Format::Json) {
        emit_json(out, make_envelope("counterexample reproduce", std::nullopt, {{"id", id_text}},
                                     to_json(report)));
    } else if (format == Format::Csv) {
        out << "id,k,expected,actual,abs_error,pass\n";
        for (const auto& v : report.values) {
            out << to_string(report.id) << ',' << v.k << ',' << full(v.expected) << ','
                << full(v.actual) << ',' << full(std::fabs(v.actual - v.expected)) << ','
                << (v.pass ? "true" : "false") << '\n';
        }
    } else {
        out << to_string(report.id) << ": " << to_string(report.relation) << " of the "
            << to_string(report.statistic) << ", " << to_string(report.family) << '\n'
            << "  x = (" << join(report.x) << "), y = (" << join(report.y) << ")\n"
            << "  x majorizes y: " << (report.majorization_holds ? "yes" : "no") << '\n'
            << "  sign change:   " << (report.sign_change ? "yes" : "no") << '\n';
        for (const auto& v : report.values) {
            out << "  k=" << v.k << "  expected " << std::setw(12) << v.expected << "  actual "
                << std::setw(14) << std::setprecision(9) << v.actual << "  "
                << (v.pass ? "PASS" : "FAIL") << '\n';
        }
        out << "  note: " << report.convention_note << '\n'
            << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? kExitOk : kExitCheckFailed;
}

struct SearchArgs {
    std::string relation = "rhr";
    std::string family = "poisson";
    std::string stat = "max";
    std::int64_t budget = 10000;
    std::uint64_t seed = 7;
    std::string n = "2..4";
    unsigned threads = 0;
    double epsilon = 1e-12;
    double tol = kOrderTolerance;
    std::string config;
    std::string format = "table";
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
    const auto format = parse_format(a.format);
    if (a.budget < 1) throw UsageError("--budget must be >= 1");
    const auto [lo, hi] = parse_range(a.n);
    SearchOptions options;
    options.policy.tail_epsilon = a.epsilon;
    options.tolerance = a.tol;
    options.threads = a.threads;
    options.n_range = {static_cast<int>(lo), static_cast<int>(hi)};
    const auto report =
        search_counterexamples(parse_relation(a.relation), parse_family(a.family),
                               parse_statistic(a.stat), static_cast<std::size_t>(a.budget),
                               a.seed, options);

    if (format == Format::Json) {
        json input{{"relation", a.relation}, {"family", a.family}, {"stat", a.stat},
                   {"budget", a.budget},     {"seed", a.seed},     {"n", a.n},
                   {"epsilon", a.epsilon},   {"tol", a.tol}};
        emit_json(out, make_envelope("counterexample search", a.seed, input, to_json(report)));
    } else if (format == Format::Csv) {
        out << "proposal,x,y,crossings,min_margin,max_margin\n";
        for (const auto& h : report.hits) {
            out << h.proposal << ",\"" << join(h.pair.x) << "\",\"" << join(h.pair.y) << "\",\""
                << join(h.crossings) << "\"," << full(h.min_margin) << ',' << full(h.max_margin)
                << '\n';
        }
    } else {
        out << "search " << a.relation << " " << a.family << " " << a.stat << ": "
            << report.hits.size() << " re-verified hits in " << report.budget << " proposals ("
            << report.rejected << " rejected on re-verification)\n";
        const std::size_t shown = std::min<std::size_t>(report.hits.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& h = report.hits[i];
            out << "  #" << h.proposal << " x=(" << join(h.pair.x) << ") y=(" << join(h.pair.y)
                << ") crossings=[" << join(h.crossings) << "]\n";
        }
    }
    return report.hits.empty() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct McArgs {
    std::string family = "poisson";
    std::string stat = "max";
    std::string params;
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    double delta = 1e-3;
    unsigned threads = 0;
    std::string format = "table";
};

int cmd_mc_check(const McArgs& a, std::ostream& out) {
    const auto format = parse_format(a.format);
    if (a.samples < 1) throw UsageError("--samples must be >= 1");
    const ExtremeSpec spec{ParamVector(parse_family(a.family), parse_params(a.params)),
                           parse_statistic(a.stat)};
    const auto report =
        mc_check(spec, static_cast<std::uint64_t>(a.samples), a.seed, a.delta, a.threads);
    if (format == Format::Json) {
        json input = to_json(spec);
        input["samples"] = a.samples;
        input["seed"] = a.seed;
        input["delta"] = a.delta;
        emit_json(out, make_envelope("mc-check", a.seed, input, to_json(report)));
    } else if (format == Format::Csv) {
        out << "n_samples,seed,ks_distance,dkw_bound,pass\n"
            << report.n_samples << ',' << report.seed << ',' << full(report.ks) << ','
            << full(report.bound) << ',' << (report.pass ? "true" : "false") << '\n';
    } else {
        out << "samples:     " << report.n_samples << " (seed " << report.seed << ")\n"
            << "KS distance: " << fixed6(report.ks) << '\n'
            << "DKW bound:   " << fixed6(report.bound) << " (delta " << a.delta << ")\n"
            << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? kExitOk : kExitCheckFailed;
}

void add_format(CLI::App* app, std::string& target) {
    app->add_option("--format", target, "Output format: table|json|csv")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extreme order statistics of heterogeneous Poisson and geometric variables"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Tabulate the distribution of a min/max");
    dist_cmd->add_option("--family", dist.family, "poisson|geometric")->capture_default_str();
    dist_cmd->add_option("--stat", dist.stat, "min|max")->capture_default_str();
    dist_cmd->add_option("--params", dist.params, "Comma-separated parameters")->required();
    dist_cmd->add_option("--k", dist.k, "Support range a..b")->capture_default_str();
    add_format(dist_cmd, dist.format);

    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Check st/hr/rhr dominance between two extremes");
    cmp_cmd->add_option("--family", cmp.family, "Family of both sides")->capture_default_str();
    cmp_cmd->add_option("--stat", cmp.stat, "Statistic of both sides")->capture_default_str();
    cmp_cmd->add_option("--family-b", cmp.family_b, "Family of the second side, if different");
    cmp_cmd->add_option("--stat-b", cmp.stat_b, "Statistic of the second side, if different");
    cmp_cmd->add_option("--a", cmp.a, "Parameters of the first side")->required();
    cmp_cmd->add_option("--b", cmp.b, "Parameters of the second side")->required();
    cmp_cmd->add_option("--relation", cmp.relation, "st|hr|rhr")->capture_default_str();
    cmp_cmd->add_option("--epsilon", cmp.epsilon, "Tail epsilon for truncation")->capture_default_str();
    cmp_cmd->add_option("--tol", cmp.tol, "Neutral band for margins")->capture_default_str();
    cmp_cmd->add_option("--cap", cmp.cap, "Hard cap on the support")->capture_default_str();
    add_format(cmp_cmd, cmp.format);

    TheoremArgs thm;
    auto* thm_cmd = app.add_subcommand("theorem", "Randomized campaign for one comparison theorem");
    thm_cmd->add_option("id", thm.id, "T3_1|T3_2|T3_3|T3_4")->required();
    auto* thm_trials = thm_cmd->add_option("--trials", thm.trials)->capture_default_str();
    auto* thm_n = thm_cmd->add_option("--n", thm.n, "Range of n, a..b within 2..8")->capture_default_str();
    auto* thm_seed = thm_cmd->add_option("--seed", thm.seed)->capture_default_str();
    auto* thm_threads = thm_cmd->add_option("--threads", thm.threads, "0 = all cores");
    auto* thm_eps = thm_cmd->add_option("--epsilon", thm.epsilon)->capture_default_str();
    auto* thm_tol = thm_cmd->add_option("--tol", thm.tol)->capture_default_str();
    thm_cmd->add_option("--quarantine-dir", thm.quarantine_dir,
                        "Where failing trials are written as JSON fixtures")
        ->capture_default_str();
    thm_cmd->add_option("--config", thm.config, "JSON file with an input block");
    add_format(thm_cmd, thm.format);

    auto* ce_cmd = app.add_subcommand("counterexample", "Reproduce or search for counterexamples");
    ce_cmd->require_subcommand(1);
    std::string ce_id;
    std::string ce_format = "table";
    auto* rep_cmd = ce_cmd->add_subcommand("reproduce", "Recompute a reference counterexample");
    rep_cmd->add_option("id", ce_id, "CE3_1|CE3_2|CE3_3")->required();
    add_format(rep_cmd, ce_format);

    SearchArgs srch;
    auto* srch_cmd = ce_cmd->add_subcommand("search", "Randomized search for order violations");
    auto* s_rel = srch_cmd->add_option("--relation", srch.relation, "st|hr|rhr")->capture_default_str();
    auto* s_fam = srch_cmd->add_option("--family", srch.family)->capture_default_str();
    auto* s_stat = srch_cmd->add_option("--stat", srch.stat)->capture_default_str();
    auto* s_budget = srch_cmd->add_option("--budget", srch.budget)->capture_default_str();
    auto* s_seed = srch_cmd->add_option("--seed", srch.seed)->capture_default_str();
    auto* s_n = srch_cmd->add_option("--n", srch.n, "Range of n, a..b within 2..8")->capture_default_str();
    auto* s_threads = srch_cmd->add_option("--threads", srch.threads, "0 = all cores");
    auto* s_eps = srch_cmd->add_option("--epsilon", srch.epsilon)->capture_default_str();
    auto* s_tol = srch_cmd->add_option("--tol", srch.tol)->capture_default_str();
    srch_cmd->add_option("--config", srch.config, "JSON file with an input block");
    add_format(srch_cmd, srch.format);

    McArgs mc;
    auto* mc_cmd = app.add_subcommand("mc-check", "Monte Carlo KS check against the exact cdf");
    mc_cmd->add_option("--family", mc.family)->capture_default_str();
    mc_cmd->add_option("--stat", mc.stat)->capture_default_str();
    mc_cmd->add_option("--params", mc.params)->required();
    mc_cmd->add_option("--samples", mc.samples)->capture_default_str();
    mc_cmd->add_option("--seed", mc.seed)->capture_default_str();
    mc_cmd->add_option("--delta", mc.delta)->capture_default_str();
    mc_cmd->add_option("--threads", mc.threads, "0 = all cores");
    add_format(mc_cmd, mc.format);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("extremo");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (thm_cmd->parsed() && !thm.config.empty()) {
            const auto c = load_config(thm.config);
            apply_config(c, "trials", thm_trials, thm.trials);
            apply_config(c, "n", thm_n, thm.n);
            apply_config(c, "seed", thm_seed, thm.seed);
            apply_config(c, "threads", thm_threads, thm.threads);
            apply_config(c, "epsilon", thm_eps, thm.epsilon);
            apply_config(c, "tol", thm_tol, thm.tol);
        }
        if (srch_cmd->parsed() && !srch.config.empty()) {
            const auto c = load_config(srch.config);
            apply_config(c, "relation", s_rel, srch.relation);
            apply_config(c, "family", s_fam, srch.family);
            apply_config(c, "stat", s_stat, srch.stat);
            apply_config(c, "budget", s_budget, srch.budget);
            apply_config(c, "seed", s_seed, srch.seed);
            apply_config(c, "n", s_n, srch.n);
            apply_config(c, "threads", s_threads, srch.threads);
            apply_config(c, "epsilon", s_eps, srch.epsilon);
            apply_config(c, "tol", s_tol, srch.tol);
        }

        if (dist_cmd->parsed()) return cmd_dist(dist, out);
        if (cmp_cmd->parsed()) return cmd_compare(cmp, out);
        if (thm_cmd->parsed()) return cmd_theorem(thm, out);
        if (rep_cmd->parsed()) return cmd_reproduce(ce_id, ce_format, out);
        if (srch_cmd->parsed()) return cmd_search(srch, out);
        if (mc_cmd->parsed()) return cmd_mc_check(mc, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace extremo::cli
