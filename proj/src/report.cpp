#include "extremo/report.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

namespace extremo {

using nlohmann::json;

json to_json(const OrderVerdict& verdict, bool include_margins) {
    json j{
        {"relation", to_string(verdict.relation)},
        {"direction", to_string(verdict.direction)},
        {"crossings", verdict.crossings},
        {"k_max", verdict.k_max},
        {"tolerance", verdict.tolerance},
        {"tail_epsilon", verdict.tail_epsilon},
        {"cap_reached", verdict.cap_reached},
        {"min_margin", verdict.min_margin()},
        {"max_margin", verdict.max_margin()},
    };
    if (include_margins) {
        json margins = json::array();
        for (const auto& m : verdict.margins) margins.push_back(m ? json(*m) : json(nullptr));
        j["margins"] = std::move(margins);
    }
    return j;
}

json to_json(const ExtremeSpec& spec) {
    return {
        {"family", to_string(spec.params.family())},
        {"statistic", to_string(spec.statistic)},
        {"params", std::vector<double>(spec.params.values().begin(), spec.params.values().end())},
    };
}

json to_json(const TheoremFailure& failure) {
    return {
        {"trial", failure.trial},
        {"x", failure.x},
        {"y", failure.y},
        {"kind", failure.kind},
        {"verdict", to_json(failure.verdict)},
    };
}

json to_json(const TheoremReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures) failures.push_back(to_json(f));
    const auto claim = claim_of(report.id);
    return {
        {"theorem_id", to_string(report.id)},
        {"family", to_string(claim.family)},
        {"statistic", to_string(claim.statistic)},
        {"relation", to_string(claim.relation)},
        {"expected", to_string(claim.expected)},
        {"trials", report.trials},
        {"n_range", {report.n_range.lo, report.n_range.hi}},
        {"seed", report.seed},
        {"tolerance", report.tolerance},
        {"tail_epsilon", report.tail_epsilon},
        {"equal_trials", report.equal_trials},
        {"worst_margin", report.worst_margin},
        {"failure_count", report.failures.size()},
        {"failures", std::move(failures)},
    };
}

json to_json(const CounterexampleReport& report) {
    json values = json::array();
    for (const auto& v : report.values) {
        values.push_back({{"k", v.k},
                          {"expected", v.expected},
                          {"actual", v.actual},
                          {"abs_error", std::abs(v.actual - v.expected)},
                          {"pass", v.pass}});
    }
    return {
        {"id", to_string(report.id)},
        {"family", to_string(report.family)},
        {"statistic", to_string(report.statistic)},
        {"relation", to_string(report.relation)},
        {"x", report.x},
        {"y", report.y},
        {"printed_x", report.printed_x},
        {"tolerance", report.tolerance},
        {"values", std::move(values)},
        {"majorization_holds", report.majorization_holds},
        {"printed_majorization_holds", report.printed_majorization_holds},
        {"sign_change", report.sign_change},
        {"verdict", to_json(report.verdict)},
        {"convention_note", report.convention_note},
        {"pass", report.pass},
    };
}

json to_json(const SearchReport& report) {
    json hits = json::array();
    for (const auto& h : report.hits) {
        hits.push_back({
            {"proposal", h.proposal},
            {"x", h.pair.x},
            {"y", h.pair.y},
            {"majorizes", h.pair.certified},
            {"crossings", h.crossings},
            {"min_margin", h.min_margin},
            {"max_margin", h.max_margin},
            {"k_max", h.k_max},
            {"positive_witness", h.positive_witness},
            {"negative_witness", h.negative_witness},
        });
    }
    return {
        {"relation", to_string(report.relation)},
        {"family", to_string(report.family)},
        {"statistic", to_string(report.statistic)},
        {"budget", report.budget},
        {"seed", report.seed},
        {"n_range", {report.n_range.lo, report.n_range.hi}},
        {"tolerance", report.tolerance},
        {"tail_epsilon", report.tail_epsilon},
        {"hit_count", report.hits.size()},
        {"rejected", report.rejected},
        {"hits", std::move(hits)},
    };
}

McCheckReport mc_check(const ExtremeSpec& spec, std::uint64_t n_samples, std::uint64_t seed,
                       double delta, unsigned threads) {
    const auto emp = sample_extreme(spec, n_samples, seed, threads);
    McCheckReport r{spec, n_samples, seed, delta};
    r.ks = ks_distance(emp, spec);
    r.bound = dkw_bound(n_samples, delta);
    r.empirical_mean = emp.mean();
    r.pass = r.ks < r.bound;
    return r;
}

json to_json(const McCheckReport& report) {
    return {
        {"spec", to_json(report.spec)},
        {"n_samples", report.n_samples},
        {"seed", report.seed},
        {"delta", report.delta},
        {"ks_distance", report.ks},
        {"dkw_bound", report.bound},
        {"empirical_mean", report.empirical_mean},
        {"pass", report.pass},
    };
}

std::string report_timestamp() {
    std::time_t t = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json make_envelope(std::string_view command, std::optional<std::uint64_t> seed, json input,
                   json payload) {
    json j{
        {"command", command},
        {"version", kVersion},
        {"timestamp", report_timestamp()},
        {"input", std::move(input)},
        {"payload", std::move(payload)},
    };
    if (seed) j["seed"] = *seed;
    return j;
}

}  // namespace extremo
