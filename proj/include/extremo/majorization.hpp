#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extremo/dist.hpp"

namespace extremo {

inline constexpr double kMajorizationTolerance = 1e-10;

/// x majorizes y: decreasing-order partial sums of x dominate those of y
/// (each within +tol) and the totals agree within tol.
bool majorizes(std::span<const double> x, std::span<const double> y,
               double tol = kMajorizationTolerance);

/// Replaces (x_i, x_j) by (l x_i + (1-l) x_j, (1-l) x_i + l x_j). The result is
/// always majorized by x.
std::vector<double> t_transform(std::span<const double> x, std::size_t i, std::size_t j,
                                double lambda);

struct MajorizationPair {
    std::vector<double> x;  ///< the more dispersed vector
    std::vector<double> y;
    bool certified = false;
};

/// Open sampling box for a family's parameters.
struct ParameterRange {
    double lower;
    double upper;
};
ParameterRange default_range(Family family);

/// x uniform in the family's box, then k_transforms random T-transforms.
/// Deterministic in seed.
MajorizationPair random_majorization_pair(std::size_t n, Family family, int k_transforms,
                                          std::uint64_t seed);

class Rng;
/// Applies k_transforms random T-transforms of x drawn from rng.
MajorizationPair majorized_by_transforms(std::vector<double> x, int k_transforms, Rng& rng);

// ---------------------------------------------------------------------------
// Schur-Ostrowski

/// A permutation-symmetric function on an open box I^n.
class SymmetricFunction {
public:
    virtual ~SymmetricFunction() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual double operator()(std::span<const double> z) const = 0;
    [[nodiscard]] virtual ParameterRange domain() const = 0;
    /// Closed-form partial derivative with respect to z_i, when one is known.
    [[nodiscard]] virtual std::optional<double> partial(std::span<const double> z,
                                                        std::size_t i) const;
};

/// f(z) = sum z_i.
class CoordinateSum final : public SymmetricFunction {
public:
    [[nodiscard]] std::string name() const override { return "sum"; }
    [[nodiscard]] double operator()(std::span<const double> z) const override;
    [[nodiscard]] ParameterRange domain() const override;
    [[nodiscard]] std::optional<double> partial(std::span<const double> z,
                                                std::size_t i) const override;
};

/// prod_i P(X_i <= r), X_i ~ Poisson(mu_i): the cdf of the maximum at r.
class PoissonMaxCdf final : public SymmetricFunction {
public:
    explicit PoissonMaxCdf(std::int64_t r);
    [[nodiscard]] std::string name() const override;
    [[nodiscard]] double operator()(std::span<const double> z) const override;
    [[nodiscard]] ParameterRange domain() const override;
    [[nodiscard]] std::optional<double> partial(std::span<const double> z,
                                                std::size_t i) const override;

private:
    std::int64_t r_;
};

/// prod_i P(X_i > r), X_i ~ Poisson(mu_i): the survival of the minimum at r.
class PoissonMinSurvival final : public SymmetricFunction {
public:
    explicit PoissonMinSurvival(std::int64_t r);
    [[nodiscard]] std::string name() const override;
    [[nodiscard]] double operator()(std::span<const double> z) const override;
    [[nodiscard]] ParameterRange domain() const override;
    [[nodiscard]] std::optional<double> partial(std::span<const double> z,
                                                std::size_t i) const override;

private:
    std::int64_t r_;
};

/// prod_i (1 - q_i^(u+1)): the cdf of the maximum of geometric variables at u.
class GeometricMaxCdf final : public SymmetricFunction {
public:
    explicit GeometricMaxCdf(std::int64_t u);
    [[nodiscard]] std::string name() const override;
    [[nodiscard]] double operator()(std::span<const double> z) const override;
    [[nodiscard]] ParameterRange domain() const override;
    [[nodiscard]] std::optional<double> partial(std::span<const double> z,
                                                std::size_t i) const override;

private:
    std::int64_t u_;
};

/// Default central-difference step for coordinate value v.
double default_fd_step(double v);

/// Central-difference partial derivative of f at z along coordinate i.
/// step <= 0 selects default_fd_step(z_i).
double central_partial(const SymmetricFunction& f, std::span<const double> z, std::size_t i,
                       double step = 0.0);

/// (z_i - z_j) * (df/dz_i - df/dz_j) by central differences. Nonpositive values
/// everywhere are the Schur-concavity condition. step <= 0 selects the
/// magnitude-scaled default per coordinate. Throws DomainError if a step would
/// leave the function's open domain.
double schur_ostrowski_check(const SymmetricFunction& f, std::span<const double> z,
                             std::size_t i, std::size_t j, double step = 0.0);

}  // namespace extremo
