#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace extremo {

enum class Family { Poisson, Geometric };
enum class Statistic { Min, Max };

std::string_view to_string(Family family);
std::string_view to_string(Statistic statistic);
Family parse_family(std::string_view text);
Statistic parse_statistic(std::string_view text);

/// Default floor below which hazard and reversed hazard are considered undefined.
inline constexpr double kHazardFloor = 1e-250;

/// Validated parameter vector: Poisson means (all > 0) or geometric
/// success-complement probabilities q (all in (0,1)). Survival of a geometric
/// component is P(X > u) = q^(u+1).
class ParamVector {
public:
    ParamVector(Family family, std::vector<double> values);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    /// Throws DomainError if `value` is not admissible for `family`.
    static void validate(Family family, double value);

    friend bool operator==(const ParamVector&, const ParamVector&) = default;

private:
    Family family_;
    std::vector<double> values_;
};

/// Identifies X_{1:n} (Min) or X_{n:n} (Max) for independent components.
struct ExtremeSpec {
    ParamVector params;
    Statistic statistic;
};

// ---------------------------------------------------------------------------
// Component distributions

double poisson_pmf(std::int64_t r, double mu);
/// Ascending compensated partial sum of the pmf.
double poisson_cdf(std::int64_t r, double mu);
/// Upper tail sum over k > r; accurate where 1 - cdf would cancel.
double poisson_survival(std::int64_t r, double mu);
/// pmf(r, mu) / cdf(r, mu): the hazard e^{-mu} mu^r / int_mu^inf e^{-t} t^r dt.
double poisson_gamma_hazard(std::int64_t r, double mu);

double geometric_pmf(std::int64_t u, double q);
double geometric_cdf(std::int64_t u, double q);
double geometric_survival(std::int64_t u, double q);

// ---------------------------------------------------------------------------
// Distribution interface over {0, 1, 2, ...}

/// cdf and survival evaluated side by side for k = 0..k_max.
struct DistributionTable {
    std::vector<double> cdf;
    std::vector<double> survival;

    [[nodiscard]] std::int64_t k_max() const noexcept {
        return static_cast<std::int64_t>(cdf.size()) - 1;
    }
    /// cdf at k with cdf(-1) = 0.
    [[nodiscard]] double cdf_at(std::int64_t k) const;
    /// survival at k with survival(-1) = 1.
    [[nodiscard]] double survival_at(std::int64_t k) const;
};

class DiscreteDistribution {
public:
    virtual ~DiscreteDistribution() = default;

    /// P(X <= k); 0 for k < 0.
    [[nodiscard]] virtual double cdf(std::int64_t k) const = 0;
    /// P(X > k); 1 for k < 0. Must be computed without 1 - cdf cancellation.
    [[nodiscard]] virtual double survival(std::int64_t k) const = 0;
    /// P(X = k), the cdf increment.
    [[nodiscard]] virtual double pmf(std::int64_t k) const;
    /// Values for k = 0..k_max. The default evaluates point by point.
    [[nodiscard]] virtual DistributionTable tabulate(std::int64_t k_max) const;
};

/// A single Poisson or geometric variable.
class ComponentDistribution final : public DiscreteDistribution {
public:
    ComponentDistribution(Family family, double parameter);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] double parameter() const noexcept { return parameter_; }

    [[nodiscard]] double cdf(std::int64_t k) const override;
    [[nodiscard]] double survival(std::int64_t k) const override;
    [[nodiscard]] double pmf(std::int64_t k) const override;
    [[nodiscard]] DistributionTable tabulate(std::int64_t k_max) const override;

private:
    Family family_;
    double parameter_;
};

/// Distribution of the minimum or maximum of independent heterogeneous components.
class ExtremeDistribution final : public DiscreteDistribution {
public:
    explicit ExtremeDistribution(ExtremeSpec spec);

    [[nodiscard]] const ExtremeSpec& spec() const noexcept { return spec_; }

    [[nodiscard]] double cdf(std::int64_t k) const override;
    [[nodiscard]] double survival(std::int64_t k) const override;
    [[nodiscard]] double pmf(std::int64_t k) const override;
    [[nodiscard]] DistributionTable tabulate(std::int64_t k_max) const override;

private:
    ExtremeSpec spec_;
    std::vector<ComponentDistribution> components_;
};

double extreme_cdf(const ExtremeSpec& spec, std::int64_t k);
double extreme_survival(const ExtremeSpec& spec, std::int64_t k);

/// Discrete hazard (S(u) - S(u+1)) / S(u). Throws DegenerateTail when S(u) <= floor.
double hazard_at(const DiscreteDistribution& dist, std::int64_t u, double floor = kHazardFloor);
/// Reversed hazard P(X = u) / P(X <= u). Throws DegenerateHead when F(u) <= floor.
double reversed_hazard_at(const DiscreteDistribution& dist, std::int64_t u,
                          double floor = kHazardFloor);

/// Same conventions, evaluated from adjacent survival / cdf values.
double hazard_from_survival(double survival_u, double survival_next);
double reversed_hazard_from_cdf(double cdf_prev, double cdf_u);

/// 1 - prod q_i, the constant hazard of the minimum of geometric variables.
double min_geometric_hazard(const ParamVector& params);

}  // namespace extremo
