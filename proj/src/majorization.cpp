#include "extremo/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "extremo/error.hpp"
#include "extremo/numerics.hpp"
#include "extremo/rng.hpp"

namespace extremo {

bool majorizes(std::span<const double> x, std::span<const double> y, double tol) {
    if (x.size() != y.size()) {
        throw DomainError("majorizes: length mismatch (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
    }
    if (x.empty()) throw DomainError("majorizes: vectors must be nonempty");
    if (tol < 0.0) throw DomainError("majorizes: tolerance must be >= 0");

    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());

    CompensatedSum sx;
    CompensatedSum sy;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        sx += xs[j];
        sy += ys[j];
        if (sx.value() + tol < sy.value()) return false;
    }
    return std::fabs(sx.value() - sy.value()) <= tol;
}

std::vector<double> t_transform(std::span<const double> x, std::size_t i, std::size_t j,
                                double lambda) {
    if (i >= x.size() || j >= x.size()) throw DomainError("t_transform: index out of range");
    if (i == j) throw DomainError("t_transform: indices must differ");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("t_transform: lambda must lie in [0,1]");
    std::vector<double> y(x.begin(), x.end());
    y[i] = lambda * x[i] + (1.0 - lambda) * x[j];
    y[j] = (1.0 - lambda) * x[i] + lambda * x[j];
    return y;
}

ParameterRange default_range(Family family) {
    return family == Family::Poisson ? ParameterRange{0.05, 30.0} : ParameterRange{0.05, 0.995};
}

MajorizationPair majorized_by_transforms(std::vector<double> x, int k_transforms, Rng& rng) {
    if (x.size() < 2) throw DomainError("majorization pair needs n >= 2");
    if (k_transforms < 1) throw DomainError("k_transforms must be >= 1");
    std::vector<double> y = x;
    for (int t = 0; t < k_transforms; ++t) {
        const std::size_t i = rng.index(y.size());
        std::size_t j = rng.index(y.size() - 1);
        if (j >= i) ++j;
        y = t_transform(y, i, j, rng.uniform());
    }
    MajorizationPair pair{std::move(x), std::move(y), false};
    pair.certified = majorizes(pair.x, pair.y, kMajorizationTolerance);
    return pair;
}

MajorizationPair random_majorization_pair(std::size_t n, Family family, int k_transforms,
                                          std::uint64_t seed) {
    if (n < 2) throw DomainError("random_majorization_pair: n must be >= 2");
    Rng rng(seed);
    const auto range = default_range(family);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform_open(range.lower, range.upper);
    return majorized_by_transforms(std::move(x), k_transforms, rng);
}

// ---------------------------------------------------------------------------

std::optional<double> SymmetricFunction::partial(std::span<const double>, std::size_t) const {
    return std::nullopt;
}

double CoordinateSum::operator()(std::span<const double> z) const {
    CompensatedSum s;
    for (double v : z) s += v;
    return s.value();
}

ParameterRange CoordinateSum::domain() const {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
}

std::optional<double> CoordinateSum::partial(std::span<const double>, std::size_t) const {
    return 1.0;
}

namespace {

// Product of f(z_k) over k != skip.
template <typename Fn>
double product_except(std::span<const double> z, std::size_t skip, Fn&& f) {
    std::vector<double> factors;
    factors.reserve(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (k != skip) factors.push_back(f(z[k]));
    }
    return stable_product(factors);
}

constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

}  // namespace

PoissonMaxCdf::PoissonMaxCdf(std::int64_t r) : r_(r) {
    if (r < 0) throw DomainError("PoissonMaxCdf: r must be >= 0");
}

std::string PoissonMaxCdf::name() const { return "poisson_max_cdf(r=" + std::to_string(r_) + ")"; }

double PoissonMaxCdf::operator()(std::span<const double> z) const {
    return product_except(z, kNoSkip, [&](double mu) { return poisson_cdf(r_, mu); });
}

ParameterRange PoissonMaxCdf::domain() const {
    return {0.0, std::numeric_limits<double>::infinity()};
}

// d/dmu P(X <= r) = -pmf(r, mu).
std::optional<double> PoissonMaxCdf::partial(std::span<const double> z, std::size_t i) const {
    return -poisson_pmf(r_, z[i]) *
           product_except(z, i, [&](double mu) { return poisson_cdf(r_, mu); });
}

PoissonMinSurvival::PoissonMinSurvival(std::int64_t r) : r_(r) {
    if (r < 0) throw DomainError("PoissonMinSurvival: r must be >= 0");
}

std::string PoissonMinSurvival::name() const {
    return "poisson_min_survival(r=" + std::to_string(r_) + ")";
}

double PoissonMinSurvival::operator()(std::span<const double> z) const {
    return product_except(z, kNoSkip, [&](double mu) { return poisson_survival(r_, mu); });
}

ParameterRange PoissonMinSurvival::domain() const {
    return {0.0, std::numeric_limits<double>::infinity()};
}

// d/dmu P(X > r) = +pmf(r, mu).
std::optional<double> PoissonMinSurvival::partial(std::span<const double> z,
                                                   std::size_t i) const {
    return poisson_pmf(r_, z[i]) *
           product_except(z, i, [&](double mu) { return poisson_survival(r_, mu); });
}

GeometricMaxCdf::GeometricMaxCdf(std::int64_t u) : u_(u) {
    if (u < 0) throw DomainError("GeometricMaxCdf: u must be >= 0");
}

std::string GeometricMaxCdf::name() const {
    return "geometric_max_cdf(u=" + std::to_string(u_) + ")";
}

double GeometricMaxCdf::operator()(std::span<const double> z) const {
    return product_except(z, kNoSkip, [&](double q) { return geometric_cdf(u_, q); });
}

ParameterRange GeometricMaxCdf::domain() const { return {0.0, 1.0}; }

std::optional<double> GeometricMaxCdf::partial(std::span<const double> z, std::size_t i) const {
    const double u = static_cast<double>(u_);
    return -(u + 1.0) * std::pow(z[i], u) *
           product_except(z, i, [&](double q) { return geometric_cdf(u_, q); });
}

// ---------------------------------------------------------------------------

double default_fd_step(double v) { return 1e-5 * std::max(1.0, std::fabs(v)); }

double central_partial(const SymmetricFunction& f, std::span<const double> z, std::size_t i,
                       double step) {
    if (i >= z.size()) throw DomainError("central_partial: index out of range");
    const double h = step > 0.0 ? step : default_fd_step(z[i]);
    const auto dom = f.domain();
    if (!(z[i] - h > dom.lower && z[i] + h < dom.upper)) {
        std::ostringstream os;
        os << "step " << h << " at z_" << i << " = " << z[i] << " leaves the domain ("
           << dom.lower << ", " << dom.upper << ")";
        throw DomainError(os.str());
    }
    std::vector<double> w(z.begin(), z.end());
    w[i] = z[i] + h;
    const double up = f(w);
    w[i] = z[i] - h;
    const double down = f(w);
    // Use the actual representable spacing.
    return (up - down) / ((z[i] + h) - (z[i] - h));
}

double schur_ostrowski_check(const SymmetricFunction& f, std::span<const double> z,
                             std::size_t i, std::size_t j, double step) {
    if (i >= z.size() || j >= z.size()) throw DomainError("schur_ostrowski_check: index out of range");
    if (i == j) throw DomainError("schur_ostrowski_check: indices must differ");
    const double di = central_partial(f, z, i, step);
    const double dj = central_partial(f, z, j, step);
    return (z[i] - z[j]) * (di - dj);
}

}  // namespace extremo
