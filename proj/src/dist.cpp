#include "extremo/dist.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extremo/error.hpp"
#include "extremo/numerics.hpp"

namespace extremo {

std::string_view to_string(Family family) {
    return family == Family::Poisson ? "poisson" : "geometric";
}

std::string_view to_string(Statistic statistic) {
    return statistic == Statistic::Min ? "min" : "max";
}

Family parse_family(std::string_view text) {
    if (text == "poisson") return Family::Poisson;
    if (text == "geometric") return Family::Geometric;
    throw DomainError("unknown family '" + std::string(text) + "' (expected poisson|geometric)");
}

Statistic parse_statistic(std::string_view text) {
    if (text == "min") return Statistic::Min;
    if (text == "max") return Statistic::Max;
    throw DomainError("unknown statistic '" + std::string(text) + "' (expected min|max)");
}

// ---------------------------------------------------------------------------

ParamVector::ParamVector(Family family, std::vector<double> values)
    : family_(family), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("parameter vector must have at least one entry");
    for (double v : values_) validate(family_, v);
}

void ParamVector::validate(Family family, double value) {
    if (!std::isfinite(value)) {
        throw DomainError("parameter must be finite");
    }
    if (family == Family::Poisson && !(value > 0.0)) {
        std::ostringstream os;
        os << "Poisson mean must be > 0, got " << value;
        throw DomainError(os.str());
    }
    if (family == Family::Geometric && !(value > 0.0 && value < 1.0)) {
        std::ostringstream os;
        os << "geometric q must lie in (0,1), got " << value;
        throw DomainError(os.str());
    }
}

// ---------------------------------------------------------------------------
// Poisson

namespace {

void require_support_point(std::int64_t k, const char* what) {
    if (k < 0) {
        throw DomainError(std::string(what) + ": support point must be >= 0, got " +
                          std::to_string(k));
    }
}

double poisson_log_pmf(std::int64_t r, double mu) {
    return static_cast<double>(r) * std::log(mu) - mu - log_factorial(r);
}

// Sum of pmf(k) for k > r, walking upward until the terms stop contributing.
double poisson_upper_tail(std::int64_t r, double mu) {
    CompensatedSum tail;
    const std::int64_t limit = r + 1 + static_cast<std::int64_t>(20.0 * mu) + 2000;
    for (std::int64_t k = r + 1; k <= limit; ++k) {
        const double term = std::exp(poisson_log_pmf(k, mu));
        tail += term;
        if (static_cast<double>(k) > mu && term <= 1e-18 * tail.value()) break;
    }
    return tail.value();
}

}  // namespace

double poisson_pmf(std::int64_t r, double mu) {
    require_support_point(r, "poisson_pmf");
    ParamVector::validate(Family::Poisson, mu);
    return std::exp(poisson_log_pmf(r, mu));
}

double poisson_cdf(std::int64_t r, double mu) {
    require_support_point(r, "poisson_cdf");
    ParamVector::validate(Family::Poisson, mu);
    CompensatedSum sum;
    for (std::int64_t k = 0; k <= r; ++k) sum += std::exp(poisson_log_pmf(k, mu));
    return std::min(1.0, sum.value());
}

double poisson_survival(std::int64_t r, double mu) {
    require_support_point(r, "poisson_survival");
    ParamVector::validate(Family::Poisson, mu);
    // Below the bulk the lower sum is small and 1 - cdf is exact enough; the
    // upward walk would otherwise start in an underflowed region for large mu.
    if (static_cast<double>(r) < mu) {
        const double lower = poisson_cdf(r, mu);
        if (lower <= 0.5) return 1.0 - lower;
    }
    return std::min(1.0, poisson_upper_tail(r, mu));
}

double poisson_gamma_hazard(std::int64_t r, double mu) {
    require_support_point(r, "poisson_gamma_hazard");
    ParamVector::validate(Family::Poisson, mu);
    return poisson_pmf(r, mu) / poisson_cdf(r, mu);
}

// ---------------------------------------------------------------------------
// Geometric

double geometric_pmf(std::int64_t u, double q) {
    require_support_point(u, "geometric_pmf");
    ParamVector::validate(Family::Geometric, q);
    return (1.0 - q) * std::pow(q, static_cast<double>(u));
}

double geometric_cdf(std::int64_t u, double q) {
    require_support_point(u, "geometric_cdf");
    ParamVector::validate(Family::Geometric, q);
    return -std::expm1(static_cast<double>(u + 1) * std::log(q));
}

double geometric_survival(std::int64_t u, double q) {
    require_support_point(u, "geometric_survival");
    ParamVector::validate(Family::Geometric, q);
    return std::pow(q, static_cast<double>(u + 1));
}

// ---------------------------------------------------------------------------
// DiscreteDistribution

double DistributionTable::cdf_at(std::int64_t k) const {
    if (k < 0) return 0.0;
    return cdf.at(static_cast<std::size_t>(k));
}

double DistributionTable::survival_at(std::int64_t k) const {
    if (k < 0) return 1.0;
    return survival.at(static_cast<std::size_t>(k));
}

double DiscreteDistribution::pmf(std::int64_t k) const {
    if (k < 0) return 0.0;
    const double c = cdf(k);
    // In the upper tail the survival decrement keeps relative accuracy.
    if (c > 0.5) return std::max(0.0, survival(k - 1) - survival(k));
    return std::max(0.0, c - cdf(k - 1));
}

DistributionTable DiscreteDistribution::tabulate(std::int64_t k_max) const {
    DistributionTable t;
    const auto size = static_cast<std::size_t>(std::max<std::int64_t>(k_max + 1, 0));
    t.cdf.resize(size);
    t.survival.resize(size);
    for (std::size_t k = 0; k < size; ++k) {
        t.cdf[k] = cdf(static_cast<std::int64_t>(k));
        t.survival[k] = survival(static_cast<std::int64_t>(k));
    }
    return t;
}

// ---------------------------------------------------------------------------
// ComponentDistribution

ComponentDistribution::ComponentDistribution(Family family, double parameter)
    : family_(family), parameter_(parameter) {
    ParamVector::validate(family, parameter);
}

double ComponentDistribution::cdf(std::int64_t k) const {
    if (k < 0) return 0.0;
    return family_ == Family::Poisson ? poisson_cdf(k, parameter_) : geometric_cdf(k, parameter_);
}

double ComponentDistribution::survival(std::int64_t k) const {
    if (k < 0) return 1.0;
    return family_ == Family::Poisson ? poisson_survival(k, parameter_)
                                      : geometric_survival(k, parameter_);
}

double ComponentDistribution::pmf(std::int64_t k) const {
    if (k < 0) return 0.0;
    return family_ == Family::Poisson ? poisson_pmf(k, parameter_) : geometric_pmf(k, parameter_);
}

DistributionTable ComponentDistribution::tabulate(std::int64_t k_max) const {
    if (family_ == Family::Geometric || k_max < 0) return DiscreteDistribution::tabulate(k_max);

    // Forward prefix sums for the cdf, backward accumulation from the exact
    // upper tail for the survival; both only ever add positive terms.
    const auto size = static_cast<std::size_t>(k_max + 1);
    DistributionTable t;
    t.cdf.resize(size);
    t.survival.resize(size);
    std::vector<double> mass(size);
    CompensatedSum lower;
    for (std::size_t k = 0; k < size; ++k) {
        mass[k] = poisson_pmf(static_cast<std::int64_t>(k), parameter_);
        lower += mass[k];
        t.cdf[k] = std::min(1.0, lower.value());
    }
    double tail = poisson_survival(k_max, parameter_);
    t.survival[size - 1] = tail;
    CompensatedSum upper;
    upper += tail;
    for (std::size_t k = size - 1; k > 0; --k) {
        upper += mass[k];
        t.survival[k - 1] = std::min(1.0, upper.value());
    }
    return t;
}

// ---------------------------------------------------------------------------
// ExtremeDistribution

ExtremeDistribution::ExtremeDistribution(ExtremeSpec spec) : spec_(std::move(spec)) {
    components_.reserve(spec_.params.size());
    for (double v : spec_.params.values()) components_.emplace_back(spec_.params.family(), v);
}

namespace {

// Max: F = prod F_i, S = 1 - prod(1 - S_i). Min: S = prod S_i, F = 1 - prod(1 - F_i).
struct ExtremePoint {
    double cdf;
    double survival;
};

ExtremePoint combine(Statistic statistic, std::span<const double> cdfs,
                     std::span<const double> survivals) {
    if (statistic == Statistic::Max) {
        return {stable_product(cdfs), one_minus_product_of_complements(survivals)};
    }
    return {one_minus_product_of_complements(cdfs), stable_product(survivals)};
}

}  // namespace

double ExtremeDistribution::cdf(std::int64_t k) const {
    if (k < 0) return 0.0;
    std::vector<double> cdfs;
    std::vector<double> survivals;
    for (const auto& c : components_) {
        cdfs.push_back(c.cdf(k));
        survivals.push_back(c.survival(k));
    }
    return combine(spec_.statistic, cdfs, survivals).cdf;
}

double ExtremeDistribution::survival(std::int64_t k) const {
    if (k < 0) return 1.0;
    std::vector<double> cdfs;
    std::vector<double> survivals;
    for (const auto& c : components_) {
        cdfs.push_back(c.cdf(k));
        survivals.push_back(c.survival(k));
    }
    return combine(spec_.statistic, cdfs, survivals).survival;
}

double ExtremeDistribution::pmf(std::int64_t k) const { return DiscreteDistribution::pmf(k); }

DistributionTable ExtremeDistribution::tabulate(std::int64_t k_max) const {
    DistributionTable out;
    if (k_max < 0) return out;
    std::vector<DistributionTable> parts;
    parts.reserve(components_.size());
    for (const auto& c : components_) parts.push_back(c.tabulate(k_max));

    const auto size = static_cast<std::size_t>(k_max + 1);
    out.cdf.resize(size);
    out.survival.resize(size);
    std::vector<double> cdfs(components_.size());
    std::vector<double> survivals(components_.size());
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            cdfs[i] = parts[i].cdf[k];
            survivals[i] = parts[i].survival[k];
        }
        const auto p = combine(spec_.statistic, cdfs, survivals);
        out.cdf[k] = p.cdf;
        out.survival[k] = p.survival;
    }
    return out;
}

double extreme_cdf(const ExtremeSpec& spec, std::int64_t k) {
    require_support_point(k, "extreme_cdf");
    return ExtremeDistribution(spec).cdf(k);
}

double extreme_survival(const ExtremeSpec& spec, std::int64_t k) {
    require_support_point(k, "extreme_survival");
    return ExtremeDistribution(spec).survival(k);
}

// ---------------------------------------------------------------------------
// Hazards

double hazard_from_survival(double survival_u, double survival_next) {
    return (survival_u - survival_next) / survival_u;
}

double reversed_hazard_from_cdf(double cdf_prev, double cdf_u) {
    return (cdf_u - cdf_prev) / cdf_u;
}

double hazard_at(const DiscreteDistribution& dist, std::int64_t u, double floor) {
    require_support_point(u, "hazard_at");
    const double s = dist.survival(u);
    if (!(s > floor)) {
        std::ostringstream os;
        os << "degenerate tail: survival(" << u << ") = " << s << " <= " << floor;
        throw DegenerateTail(os.str());
    }
    return hazard_from_survival(s, dist.survival(u + 1));
}

double reversed_hazard_at(const DiscreteDistribution& dist, std::int64_t u, double floor) {
    require_support_point(u, "reversed_hazard_at");
    const double c = dist.cdf(u);
    if (!(c > floor)) {
        std::ostringstream os;
        os << "degenerate head: cdf(" << u << ") = " << c << " <= " << floor;
        throw DegenerateHead(os.str());
    }
    return reversed_hazard_from_cdf(dist.cdf(u - 1), c);
}

double min_geometric_hazard(const ParamVector& params) {
    if (params.family() != Family::Geometric) {
        throw DomainError("min_geometric_hazard requires a geometric parameter vector");
    }
    return 1.0 - stable_product(params.values());
}

}  // namespace extremo
