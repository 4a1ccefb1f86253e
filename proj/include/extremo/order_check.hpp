#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "extremo/dist.hpp"

namespace extremo {

enum class Relation { St, Hr, Rhr };
enum class Direction { FirstDominates, SecondDominates, Equal, Crossing };

std::string_view to_string(Relation relation);
std::string_view to_string(Direction direction);
Relation parse_relation(std::string_view text);

inline constexpr double kOrderTolerance = 1e-10;

struct TruncationPolicy {
    double tail_epsilon = 1e-12;
    std::int64_t hard_cap = 10000;

    /// Throws DomainError unless 0 < tail_epsilon < 1 and hard_cap >= 1.
    void validate() const;
};

struct Truncation {
    std::int64_t k_max = 0;
    bool cap_reached = false;
};

/// Smallest k with both survivals below the policy epsilon, or the hard cap.
Truncation truncation_point(const DiscreteDistribution& a, const DiscreteDistribution& b,
                            const TruncationPolicy& policy = {});

struct OrderVerdict {
    Relation relation = Relation::St;
    Direction direction = Direction::Equal;
    /// Support points at which the margin takes a sign opposite to the last
    /// nonneutral sign.
    std::vector<std::int64_t> crossings;
    /// margins[k] for k = 0..k_max; empty where the hazard is undefined.
    std::vector<std::optional<double>> margins;
    std::int64_t k_max = 0;
    double tolerance = kOrderTolerance;
    double tail_epsilon = 0.0;
    bool cap_reached = false;

    /// Most negative / most positive defined margin (0 when none defined).
    [[nodiscard]] double min_margin() const;
    [[nodiscard]] double max_margin() const;
};

/// Pointwise margins for k = 0..k_max, oriented so that uniformly nonnegative
/// margins mean "a is larger than b" in the relation:
///   st:  S_a(k) - S_b(k)
///   hr:  r_b(k) - r_a(k)
///   rhr: rr_a(k) - rr_b(k)
/// Margins within +-tol are neutral.
OrderVerdict compare(const DiscreteDistribution& a, const DiscreteDistribution& b,
                     Relation relation, const TruncationPolicy& policy = {},
                     double tol = kOrderTolerance);

/// Same as compare but on already tabulated values (tables must cover k_max + 1
/// for the hazard relation).
OrderVerdict compare_tables(const DistributionTable& a, const DistributionTable& b,
                            Relation relation, Truncation truncation, double tail_epsilon,
                            double tol = kOrderTolerance);

/// Margin at a single k, evaluated pointwise through hazard_at /
/// reversed_hazard_at rather than from tables. Throws on degenerate points.
double pointwise_margin(const DiscreteDistribution& a, const DiscreteDistribution& b,
                        Relation relation, std::int64_t k);

/// The direction b-vs-a would receive if a-vs-b got `d`.
Direction reversed(Direction d);

}  // namespace extremo
