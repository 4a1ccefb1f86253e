#include "extremo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "extremo/error.hpp"
#include "extremo/parallel.hpp"
#include "extremo/report.hpp"
#include "extremo/rng.hpp"

namespace extremo {

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T3_1: return "T3_1";
        case TheoremId::T3_2: return "T3_2";
        case TheoremId::T3_3: return "T3_3";
        case TheoremId::T3_4: return "T3_4";
    }
    return "?";
}

TheoremId parse_theorem(std::string_view text) {
    if (text == "T3_1") return TheoremId::T3_1;
    if (text == "T3_2") return TheoremId::T3_2;
    if (text == "T3_3") return TheoremId::T3_3;
    if (text == "T3_4") return TheoremId::T3_4;
    throw DomainError("unknown theorem id '" + std::string(text) + "' (expected T3_1..T3_4)");
}

TheoremClaim claim_of(TheoremId id) {
    switch (id) {
        case TheoremId::T3_1:
            return {Family::Poisson, Statistic::Max, Relation::St, Direction::FirstDominates};
        case TheoremId::T3_2:
            return {Family::Poisson, Statistic::Min, Relation::St, Direction::SecondDominates};
        case TheoremId::T3_3:
            return {Family::Geometric, Statistic::Min, Relation::Hr, Direction::FirstDominates};
        case TheoremId::T3_4:
            return {Family::Geometric, Statistic::Max, Relation::St, Direction::FirstDominates};
    }
    throw DomainError("unknown theorem id");
}

namespace {

void validate_range(IntRange r, int lo_limit, int hi_limit, const char* what) {
    if (r.lo < lo_limit || r.hi > hi_limit || r.lo > r.hi) {
        throw DomainError(std::string(what) + ": n range must satisfy " + std::to_string(lo_limit) +
                          " <= lo <= hi <= " + std::to_string(hi_limit));
    }
}

bool compatible(Direction st, Direction stronger) {
    if (stronger != Direction::FirstDominates && stronger != Direction::SecondDominates) return true;
    return st == stronger || st == Direction::Equal;
}

double sum_of_logs(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::log(x);
    return s;
}

}  // namespace

TrialOutcome check_theorem_pair(TheoremId id, std::span<const double> x, std::span<const double> y,
                                const CampaignOptions& options) {
    const auto claim = claim_of(id);
    const ExtremeDistribution a(
        {ParamVector(claim.family, {x.begin(), x.end()}), claim.statistic});
    const ExtremeDistribution b(
        {ParamVector(claim.family, {y.begin(), y.end()}), claim.statistic});

    const auto truncation = truncation_point(a, b, options.policy);
    const auto ta = a.tabulate(truncation.k_max + 1);
    const auto tb = b.tabulate(truncation.k_max + 1);
    const double eps = options.policy.tail_epsilon;
    const double tol = options.tolerance;

    auto st = compare_tables(ta, tb, Relation::St, truncation, eps, tol);
    auto hr = compare_tables(ta, tb, Relation::Hr, truncation, eps, tol);
    auto rhr = compare_tables(ta, tb, Relation::Rhr, truncation, eps, tol);

    TrialOutcome out;
    out.st = st.direction;
    out.hr = hr.direction;
    out.rhr = rhr.direction;
    if (!compatible(st.direction, hr.direction)) out.failure_kinds.emplace_back("implication_chain:hr");
    if (!compatible(st.direction, rhr.direction)) out.failure_kinds.emplace_back("implication_chain:rhr");

    switch (claim.relation) {
        case Relation::St: out.verdict = std::move(st); break;
        case Relation::Hr: out.verdict = std::move(hr); break;
        case Relation::Rhr: out.verdict = std::move(rhr); break;
    }
    const auto d = out.verdict.direction;
    if (d != claim.expected && d != Direction::Equal) {
        out.failure_kinds.insert(out.failure_kinds.begin(), "dominance");
    }
    out.oriented_margin = claim.expected == Direction::FirstDominates ? out.verdict.min_margin()
                                                                      : -out.verdict.max_margin();
    return out;
}

MajorizationPair draw_hypothesis(TheoremId id, IntRange n_range, std::uint64_t seed,
                                 std::size_t trial) {
    Rng rng(derive_seed(seed, trial));
    const auto n = static_cast<std::size_t>(rng.integer(n_range.lo, n_range.hi));
    const auto claim = claim_of(id);
    const auto box = default_range(claim.family);

    if (id == TheoremId::T3_3) {
        // Hypothesis is prod q >= prod q*: inflate a random subset of a copy of q*.
        std::vector<double> q_star(n);
        for (auto& v : q_star) v = rng.uniform_open(box.lower, box.upper);
        std::vector<double> q = q_star;
        for (auto& v : q) {
            if (rng.uniform() < 0.5) {
                const double factor = rng.uniform(1.0, 1.5);
                v = std::min(v * factor, box.upper);
                v = std::max(v, 0.0);
            }
        }
        MajorizationPair pair{std::move(q), std::move(q_star), false};
        pair.certified = sum_of_logs(pair.x) >= sum_of_logs(pair.y);
        return pair;
    }

    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform_open(box.lower, box.upper);
    const int transforms = static_cast<int>(rng.integer(1, static_cast<std::int64_t>(2 * n)));
    return majorized_by_transforms(std::move(x), transforms, rng);
}

std::filesystem::path write_quarantine_fixture(const std::filesystem::path& dir, TheoremId id,
                                               std::uint64_t seed, double tail_epsilon,
                                               const TheoremFailure& failure) {
    std::filesystem::create_directories(dir);
    const auto path = dir / (std::string(to_string(id)) + "_seed" + std::to_string(seed) +
                             "_trial" + std::to_string(failure.trial) + ".json");
    std::ofstream os(path);
    nlohmann::json fixture = to_json(failure);
    fixture["theorem_id"] = to_string(id);
    fixture["seed"] = seed;
    fixture["tail_epsilon"] = tail_epsilon;
    os << fixture.dump(2) << '\n';
    if (!os) throw std::runtime_error("cannot write fixture " + path.string());
    return path;
}

TheoremReport verify_theorem(TheoremId id, std::size_t trials, IntRange n_range,
                             std::uint64_t seed, const CampaignOptions& options) {
    if (trials < 1) throw DomainError("verify_theorem: trials must be >= 1");
    validate_range(n_range, 2, 8, "verify_theorem");
    options.policy.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<MajorizationPair> pairs(trials);
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, options.threads, [&](std::size_t t) {
        pairs[t] = draw_hypothesis(id, n_range, seed, t);
        outcomes[t] = check_theorem_pair(id, pairs[t].x, pairs[t].y, options);
    });

    TheoremReport report;
    report.id = id;
    report.trials = trials;
    report.n_range = n_range;
    report.seed = seed;
    report.tolerance = options.tolerance;
    report.tail_epsilon = options.policy.tail_epsilon;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        auto& o = outcomes[t];
        report.worst_margin = std::min(report.worst_margin, o.oriented_margin);
        if (o.verdict.direction == Direction::Equal) ++report.equal_trials;
        for (const auto& kind : o.failure_kinds) {
            report.failures.push_back({t, pairs[t].x, pairs[t].y, kind, o.verdict});
        }
    }

    if (!options.quarantine_dir.empty()) {
        for (const auto& f : report.failures) {
            write_quarantine_fixture(options.quarantine_dir, id, seed, options.policy.tail_epsilon, f);
        }
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

// ---------------------------------------------------------------------------
// Counterexamples

std::string_view to_string(CounterexampleId id) {
    switch (id) {
        case CounterexampleId::CE3_1: return "CE3_1";
        case CounterexampleId::CE3_2: return "CE3_2";
        case CounterexampleId::CE3_3: return "CE3_3";
    }
    return "?";
}

CounterexampleId parse_counterexample(std::string_view text) {
    if (text == "CE3_1") return CounterexampleId::CE3_1;
    if (text == "CE3_2") return CounterexampleId::CE3_2;
    if (text == "CE3_3") return CounterexampleId::CE3_3;
    throw DomainError("unknown counterexample id '" + std::string(text) +
                      "' (expected CE3_1|CE3_2|CE3_3)");
}

namespace {

struct ReferenceCounterexample {
    Family family;
    Statistic statistic;
    Relation relation;
    std::vector<double> printed_x;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<std::pair<std::int64_t, double>> values;
    double tolerance;
    const char* note;
};

ReferenceCounterexample reference_data(CounterexampleId id) {
    switch (id) {
        case CounterexampleId::CE3_1:
            return {Family::Poisson,
                    Statistic::Max,
                    Relation::Rhr,
                    {8, 0.8, 0.1},
                    {8, 0.8, 0.1},
                    {7, 1, 0.9},
                    {{5, 0.0520158}, {2, -0.0232122}},
                    1e-6,
                    "Differences of reversed hazards P(X=k)/P(X<=k) of the maxima, X minus Y."};
        case CounterexampleId::CE3_2:
            return {Family::Poisson,
                    Statistic::Min,
                    Relation::Hr,
                    {28, 0.8, 0.1},
                    {28, 0.8, 0.1},
                    {27, 1, 0.9},
                    {{16, -0.00024431}, {6, 0.0124328}},
                    1e-6,
                    "Differences of hazards (S(k)-S(k+1))/S(k) of the minima, X minus Y. The "
                    "quoted second difference is labelled h_{1:n} - h*_{n:n}; both sides are "
                    "taken as minima here. The k=6 value reproduces. The quoted k=16 value "
                    "does not: with survivals summed from the upper tail the exact difference is "
                    "+0.0024854 and the hazard difference stays positive over the "
                    "whole truncated support."};
        case CounterexampleId::CE3_3:
            return {Family::Geometric,
                    Statistic::Max,
                    Relation::Rhr,
                    {0.99, 0.96, 0.57},
                    {0.99, 0.69, 0.57},
                    {0.9, 0.78, 0.57},
                    {{1, -0.0010584}, {4, 0.00628996}},
                    1e-7,
                    "Differences of reversed hazards of the maxima, X minus Y. The quoted q "
                    "(0.99, 0.96, 0.57) has total 2.52 against 2.25 for q*, so it cannot "
                    "majorize q*; with the transposed digit q = (0.99, 0.69, 0.57) the totals "
                    "agree, q majorizes q*, and both quoted values reproduce."};
    }
    throw DomainError("unknown counterexample id");
}

}  // namespace

CounterexampleReport reproduce_counterexample(CounterexampleId id) {
    const auto ce = reference_data(id);
    const ExtremeDistribution a({ParamVector(ce.family, ce.x), ce.statistic});
    const ExtremeDistribution b({ParamVector(ce.family, ce.y), ce.statistic});

    CounterexampleReport r;
    r.id = id;
    r.family = ce.family;
    r.statistic = ce.statistic;
    r.relation = ce.relation;
    r.x = ce.x;
    r.y = ce.y;
    r.printed_x = ce.printed_x;
    r.tolerance = ce.tolerance;
    r.convention_note = ce.note;
    r.majorization_holds = majorizes(ce.x, ce.y);
    r.printed_majorization_holds = majorizes(ce.printed_x, ce.y);

    r.pass = true;
    for (const auto& [k, expected] : ce.values) {
        // Report differences as X minus Y for every relation.
        double actual = 0.0;
        if (ce.relation == Relation::Hr) {
            actual = hazard_at(a, k) - hazard_at(b, k);
        } else {
            actual = reversed_hazard_at(a, k) - reversed_hazard_at(b, k);
        }
        const bool ok = std::fabs(actual - expected) <= ce.tolerance;
        r.values.push_back({k, expected, actual, ok});
        r.pass = r.pass && ok;
    }
    r.verdict = compare(a, b, ce.relation);
    r.sign_change = r.verdict.direction == Direction::Crossing;
    return r;
}

// ---------------------------------------------------------------------------
// Search

MajorizationPair propose_search_pair(Family family, IntRange n_range, std::uint64_t seed,
                                     std::size_t index) {
    Rng rng(derive_seed(seed, index));
    const auto n = static_cast<std::size_t>(rng.integer(n_range.lo, n_range.hi));
    const auto box = default_range(family);
    std::vector<double> x(n);
    const std::size_t mode = rng.index(3);
    if (family == Family::Poisson) {
        switch (mode) {
            case 0:
                for (auto& v : x) v = rng.uniform_open(box.lower, box.upper);
                break;
            case 1:  // one large mean, the rest small
                x[0] = rng.uniform_open(5.0, box.upper);
                for (std::size_t i = 1; i < n; ++i) x[i] = rng.uniform_open(box.lower, 2.0);
                break;
            default:  // log-uniform over the box
                for (auto& v : x) {
                    v = std::exp(rng.uniform_open(std::log(box.lower), std::log(box.upper)));
                }
                break;
        }
    } else {
        switch (mode) {
            case 0:
                for (auto& v : x) v = rng.uniform_open(box.lower, box.upper);
                break;
            case 1:  // everything in the upper half, one coordinate near 1
                x[0] = rng.uniform_open(0.9, box.upper);
                for (std::size_t i = 1; i < n; ++i) x[i] = rng.uniform_open(0.5, box.upper);
                break;
            default:  // one near-1 coordinate among uniform ones
                x[0] = rng.uniform_open(0.95, box.upper);
                for (std::size_t i = 1; i < n; ++i) x[i] = rng.uniform_open(box.lower, box.upper);
                break;
        }
    }
    const int transforms = static_cast<int>(rng.integer(1, static_cast<std::int64_t>(n)));
    return majorized_by_transforms(std::move(x), transforms, rng);
}

namespace {

std::optional<SearchHit> reverify(const MajorizationPair& pair, Relation relation, Family family,
                                  Statistic statistic, const SearchOptions& options) {
    if (!majorizes(pair.x, pair.y)) return std::nullopt;

    // Fresh distributions and a 100x tighter tail.
    const ExtremeDistribution a({ParamVector(family, pair.x), statistic});
    const ExtremeDistribution b({ParamVector(family, pair.y), statistic});
    TruncationPolicy tight = options.policy;
    tight.tail_epsilon /= 100.0;
    const auto verdict = compare(a, b, relation, tight, options.tolerance);
    if (verdict.direction != Direction::Crossing) return std::nullopt;

    std::int64_t pos = -1;
    std::int64_t neg = -1;
    for (std::size_t k = 0; k < verdict.margins.size(); ++k) {
        const auto& m = verdict.margins[k];
        if (!m) continue;
        if (pos < 0 || *m > *verdict.margins[static_cast<std::size_t>(pos)]) pos = static_cast<std::int64_t>(k);
        if (neg < 0 || *m < *verdict.margins[static_cast<std::size_t>(neg)]) neg = static_cast<std::int64_t>(k);
    }
    // Recompute both witnesses pointwise, outside the tabulated path.
    try {
        if (!(pointwise_margin(a, b, relation, pos) > options.tolerance)) return std::nullopt;
        if (!(pointwise_margin(a, b, relation, neg) < -options.tolerance)) return std::nullopt;
    } catch (const DegenerateTail&) {
        return std::nullopt;
    } catch (const DegenerateHead&) {
        return std::nullopt;
    }

    SearchHit hit;
    hit.pair = pair;
    hit.pair.certified = true;
    hit.crossings = verdict.crossings;
    hit.min_margin = verdict.min_margin();
    hit.max_margin = verdict.max_margin();
    hit.k_max = verdict.k_max;
    hit.positive_witness = pos;
    hit.negative_witness = neg;
    return hit;
}

}  // namespace

SearchReport search_counterexamples(Relation relation, Family family, Statistic statistic,
                                    std::size_t budget, std::uint64_t seed,
                                    const SearchOptions& options) {
    if (budget < 1) throw DomainError("search_counterexamples: budget must be >= 1");
    validate_range(options.n_range, 2, 8, "search_counterexamples");
    options.policy.validate();

    enum class Outcome { None, Hit, Rejected };
    std::vector<Outcome> outcomes(budget, Outcome::None);
    std::vector<std::optional<SearchHit>> hits(budget);
    parallel_for(budget, options.threads, [&](std::size_t i) {
        const auto pair = propose_search_pair(family, options.n_range, seed, i);
        const ExtremeDistribution a({ParamVector(family, pair.x), statistic});
        const ExtremeDistribution b({ParamVector(family, pair.y), statistic});
        const auto verdict = compare(a, b, relation, options.policy, options.tolerance);
        if (verdict.direction != Direction::Crossing) return;
        hits[i] = reverify(pair, relation, family, statistic, options);
        if (hits[i]) hits[i]->proposal = i;
        outcomes[i] = hits[i] ? Outcome::Hit : Outcome::Rejected;
    });

    SearchReport report;
    report.relation = relation;
    report.family = family;
    report.statistic = statistic;
    report.budget = budget;
    report.seed = seed;
    report.n_range = options.n_range;
    report.tolerance = options.tolerance;
    report.tail_epsilon = options.policy.tail_epsilon;
    for (std::size_t i = 0; i < budget; ++i) {
        if (outcomes[i] == Outcome::Hit) report.hits.push_back(std::move(*hits[i]));
        if (outcomes[i] == Outcome::Rejected) ++report.rejected;
    }
    return report;
}

}  // namespace extremo
