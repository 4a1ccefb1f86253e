#pragma once

#include <cstdint>
#include <vector>

#include "extremo/dist.hpp"

namespace extremo {

/// Tallies of sampled support values 0..k_max.
class EmpiricalDistribution final : public DiscreteDistribution {
public:
    EmpiricalDistribution(std::vector<std::uint64_t> counts, std::uint64_t seed);

    [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t n_samples() const noexcept { return n_samples_; }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    /// Largest observed value.
    [[nodiscard]] std::int64_t k_max() const noexcept {
        return static_cast<std::int64_t>(counts_.size()) - 1;
    }
    [[nodiscard]] double mean() const;

    [[nodiscard]] double cdf(std::int64_t k) const override;
    [[nodiscard]] double survival(std::int64_t k) const override;

    friend bool operator==(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
        return a.counts_ == b.counts_ && a.seed_ == b.seed_;
    }

private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> cumulative_;
    std::uint64_t n_samples_ = 0;
    std::uint64_t seed_ = 0;
};

/// Samples of a single component.
std::int64_t sample_poisson(double mu, double uniform);
std::int64_t sample_geometric(double q, double uniform_open_low);

/// Draws n_samples replicates of min/max over independently sampled
/// components. Replicates are generated in fixed blocks with per-block seeds,
/// so the result is identical for every thread count.
EmpiricalDistribution sample_extreme(const ExtremeSpec& spec, std::uint64_t n_samples,
                                     std::uint64_t seed, unsigned threads = 0);

/// sup_{0 <= k <= k_max} |observed cdf(k) - exact cdf(k)|.
double ks_distance(const DiscreteDistribution& observed, const ExtremeSpec& spec,
                   std::int64_t k_max);
/// Same, with k_max covering both the observed range and the exact tail.
double ks_distance(const EmpiricalDistribution& emp, const ExtremeSpec& spec);

/// Dvoretzky-Kiefer-Wolfowitz band half-width sqrt(ln(2/delta) / (2N)).
double dkw_bound(std::uint64_t n_samples, double delta);

}  // namespace extremo
