#include "extremo/mc_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "extremo/error.hpp"
#include "extremo/order_check.hpp"
#include "extremo/parallel.hpp"
#include "extremo/rng.hpp"

namespace extremo {

EmpiricalDistribution::EmpiricalDistribution(std::vector<std::uint64_t> counts,
                                             std::uint64_t seed)
    : counts_(std::move(counts)), seed_(seed) {
    cumulative_.reserve(counts_.size());
    for (auto c : counts_) {
        n_samples_ += c;
        cumulative_.push_back(n_samples_);
    }
    if (n_samples_ == 0) throw DomainError("empirical distribution needs at least one sample");
}

double EmpiricalDistribution::mean() const {
    long double s = 0.0L;
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        s += static_cast<long double>(k) * static_cast<long double>(counts_[k]);
    }
    return static_cast<double>(s / static_cast<long double>(n_samples_));
}

double EmpiricalDistribution::cdf(std::int64_t k) const {
    if (k < 0) return 0.0;
    if (k > k_max()) return 1.0;
    return static_cast<double>(cumulative_[static_cast<std::size_t>(k)]) /
           static_cast<double>(n_samples_);
}

double EmpiricalDistribution::survival(std::int64_t k) const {
    if (k < 0) return 1.0;
    if (k > k_max()) return 0.0;
    return static_cast<double>(n_samples_ - cumulative_[static_cast<std::size_t>(k)]) /
           static_cast<double>(n_samples_);
}

// Sequential inversion: walk the cdf upward until it passes u.
std::int64_t sample_poisson(double mu, double uniform) {
    double term = std::exp(-mu);
    double acc = term;
    std::int64_t k = 0;
    while (uniform >= acc) {
        ++k;
        term *= mu / static_cast<double>(k);
        const double next = acc + term;
        if (next == acc) break;  // remaining mass below double resolution
        acc = next;
    }
    return k;
}

// P(X >= k) = P(U <= q^k) for U in (0, 1].
std::int64_t sample_geometric(double q, double uniform_open_low) {
    return static_cast<std::int64_t>(std::floor(std::log(uniform_open_low) / std::log(q)));
}

namespace {

constexpr std::uint64_t kBlockSize = 8192;

}  // namespace

EmpiricalDistribution sample_extreme(const ExtremeSpec& spec, std::uint64_t n_samples,
                                     std::uint64_t seed, unsigned threads) {
    if (n_samples < 1) throw DomainError("sample_extreme: n_samples must be >= 1");
    const auto values = spec.params.values();
    const Family family = spec.params.family();
    const bool take_max = spec.statistic == Statistic::Max;

    const std::uint64_t blocks = (n_samples + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<std::uint64_t>> tallies(blocks);
    parallel_for(blocks, threads, [&](std::size_t b) {
        Rng rng(derive_seed(seed, b));
        const std::uint64_t begin = b * kBlockSize;
        const std::uint64_t end = std::min(n_samples, begin + kBlockSize);
        auto& tally = tallies[b];
        for (std::uint64_t s = begin; s < end; ++s) {
            std::int64_t extreme = 0;
            for (std::size_t i = 0; i < values.size(); ++i) {
                const std::int64_t draw = family == Family::Poisson
                                              ? sample_poisson(values[i], rng.uniform())
                                              : sample_geometric(values[i], rng.uniform_open_low());
                if (i == 0) {
                    extreme = draw;
                } else {
                    extreme = take_max ? std::max(extreme, draw) : std::min(extreme, draw);
                }
            }
            const auto slot = static_cast<std::size_t>(extreme);
            if (tally.size() <= slot) tally.resize(slot + 1, 0);
            ++tally[slot];
        }
    });

    std::vector<std::uint64_t> counts;
    for (const auto& tally : tallies) {
        if (counts.size() < tally.size()) counts.resize(tally.size(), 0);
        for (std::size_t k = 0; k < tally.size(); ++k) counts[k] += tally[k];
    }
    return EmpiricalDistribution(std::move(counts), seed);
}

double ks_distance(const DiscreteDistribution& observed, const ExtremeSpec& spec,
                   std::int64_t k_max) {
    const ExtremeDistribution exact(spec);
    const auto table = exact.tabulate(std::max<std::int64_t>(k_max, 0));
    double worst = 0.0;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        worst = std::max(worst, std::fabs(observed.cdf(k) - table.cdf_at(k)));
    }
    return worst;
}

double ks_distance(const EmpiricalDistribution& emp, const ExtremeSpec& spec) {
    const ExtremeDistribution exact(spec);
    const auto tail = truncation_point(exact, exact, TruncationPolicy{1e-12, 100000});
    return ks_distance(emp, spec, std::max(emp.k_max(), tail.k_max));
}

double dkw_bound(std::uint64_t n_samples, double delta) {
    if (n_samples < 1) throw DomainError("dkw_bound: n_samples must be >= 1");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("dkw_bound: delta must lie in (0,1)");
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n_samples)));
}

}  // namespace extremo
