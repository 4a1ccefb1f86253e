#include "extremo/order_check.hpp"

#include <algorithm>
#include <cmath>

#include "extremo/error.hpp"

namespace extremo {

std::string_view to_string(Relation relation) {
    switch (relation) {
        case Relation::St: return "st";
        case Relation::Hr: return "hr";
        case Relation::Rhr: return "rhr";
    }
    return "?";
}

std::string_view to_string(Direction direction) {
    switch (direction) {
        case Direction::FirstDominates: return "FirstDominates";
        case Direction::SecondDominates: return "SecondDominates";
        case Direction::Equal: return "Equal";
        case Direction::Crossing: return "Crossing";
    }
    return "?";
}

Relation parse_relation(std::string_view text) {
    if (text == "st") return Relation::St;
    if (text == "hr") return Relation::Hr;
    if (text == "rhr") return Relation::Rhr;
    throw DomainError("unknown relation '" + std::string(text) + "' (expected st|hr|rhr)");
}

Direction reversed(Direction d) {
    switch (d) {
        case Direction::FirstDominates: return Direction::SecondDominates;
        case Direction::SecondDominates: return Direction::FirstDominates;
        default: return d;
    }
}

void TruncationPolicy::validate() const {
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) {
        throw DomainError("tail_epsilon must lie in (0,1)");
    }
    if (hard_cap < 1) throw DomainError("hard_cap must be >= 1");
}

Truncation truncation_point(const DiscreteDistribution& a, const DiscreteDistribution& b,
                            const TruncationPolicy& policy) {
    policy.validate();
    const auto done = [&](std::int64_t k) {
        return a.survival(k) < policy.tail_epsilon && b.survival(k) < policy.tail_epsilon;
    };
    if (done(0)) return {0, false};

    // Survival is nonincreasing: bracket by doubling, then bisect.
    std::int64_t lo = 0;  // !done(lo)
    std::int64_t hi = 1;
    while (!done(hi)) {
        if (hi >= policy.hard_cap) return {policy.hard_cap, true};
        lo = hi;
        hi = std::min(hi * 2, policy.hard_cap);
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (done(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {hi, false};
}

double OrderVerdict::min_margin() const {
    double m = 0.0;
    bool any = false;
    for (const auto& v : margins) {
        if (!v) continue;
        m = any ? std::min(m, *v) : *v;
        any = true;
    }
    return m;
}

double OrderVerdict::max_margin() const {
    double m = 0.0;
    bool any = false;
    for (const auto& v : margins) {
        if (!v) continue;
        m = any ? std::max(m, *v) : *v;
        any = true;
    }
    return m;
}

OrderVerdict compare_tables(const DistributionTable& a, const DistributionTable& b,
                            Relation relation, Truncation truncation, double tail_epsilon,
                            double tol) {
    if (tol < 0.0) throw DomainError("compare: tolerance must be >= 0");
    const std::int64_t need = relation == Relation::Hr ? truncation.k_max + 1 : truncation.k_max;
    if (a.k_max() < need || b.k_max() < need) {
        throw DomainError("compare_tables: tables do not cover the truncation range");
    }

    OrderVerdict v;
    v.relation = relation;
    v.k_max = truncation.k_max;
    v.tolerance = tol;
    v.tail_epsilon = tail_epsilon;
    v.cap_reached = truncation.cap_reached;
    v.margins.reserve(static_cast<std::size_t>(truncation.k_max + 1));

    for (std::int64_t k = 0; k <= truncation.k_max; ++k) {
        std::optional<double> margin;
        switch (relation) {
            case Relation::St:
                margin = a.survival_at(k) - b.survival_at(k);
                break;
            case Relation::Hr: {
                const double sa = a.survival_at(k);
                const double sb = b.survival_at(k);
                if (sa > kHazardFloor && sb > kHazardFloor) {
                    margin = hazard_from_survival(sb, b.survival_at(k + 1)) -
                             hazard_from_survival(sa, a.survival_at(k + 1));
                }
                break;
            }
            case Relation::Rhr: {
                const double fa = a.cdf_at(k);
                const double fb = b.cdf_at(k);
                if (fa > kHazardFloor && fb > kHazardFloor) {
                    margin = reversed_hazard_from_cdf(a.cdf_at(k - 1), fa) -
                             reversed_hazard_from_cdf(b.cdf_at(k - 1), fb);
                }
                break;
            }
        }
        v.margins.push_back(margin);
    }

    int last_sign = 0;
    bool positive = false;
    bool negative = false;
    for (std::int64_t k = 0; k <= truncation.k_max; ++k) {
        const auto& m = v.margins[static_cast<std::size_t>(k)];
        if (!m) continue;
        int sign = 0;
        if (*m > tol) sign = 1;
        if (*m < -tol) sign = -1;
        if (sign == 0) continue;
        positive |= sign > 0;
        negative |= sign < 0;
        if (last_sign != 0 && sign != last_sign) v.crossings.push_back(k);
        last_sign = sign;
    }

    if (positive && negative) {
        v.direction = Direction::Crossing;
    } else if (positive) {
        v.direction = Direction::FirstDominates;
    } else if (negative) {
        v.direction = Direction::SecondDominates;
    } else {
        v.direction = Direction::Equal;
    }
    return v;
}

double pointwise_margin(const DiscreteDistribution& a, const DiscreteDistribution& b,
                        Relation relation, std::int64_t k) {
    switch (relation) {
        case Relation::St: return a.survival(k) - b.survival(k);
        case Relation::Hr: return hazard_at(b, k) - hazard_at(a, k);
        case Relation::Rhr: return reversed_hazard_at(a, k) - reversed_hazard_at(b, k);
    }
    return 0.0;
}

OrderVerdict compare(const DiscreteDistribution& a, const DiscreteDistribution& b,
                     Relation relation, const TruncationPolicy& policy, double tol) {
    const auto truncation = truncation_point(a, b, policy);
    const std::int64_t rows = truncation.k_max + 1;
    return compare_tables(a.tabulate(rows), b.tabulate(rows), relation, truncation,
                          policy.tail_epsilon, tol);
}

}  // namespace extremo
