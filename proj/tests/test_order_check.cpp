#include <doctest.h>

#include <cmath>
#include <vector>

#include "extremo/error.hpp"
#include "extremo/majorization.hpp"
#include "extremo/order_check.hpp"
#include "oracles.hpp"

using namespace extremo;

namespace {

ExtremeDistribution make(Family f, Statistic s, std::vector<double> v) {
    return ExtremeDistribution({ParamVector(f, std::move(v)), s});
}

}  // namespace

TEST_CASE("truncation_point") {
    // 0.5^40 = 9.09e-13 < 1e-12 <= 0.5^39, so the first k with 0.5^(k+1) below is 39.
    const auto exact39 = oracle::rational_pow(oracle::rational("0.5"), 40);
    const auto exact38 = oracle::rational_pow(oracle::rational("0.5"), 39);
    REQUIRE(oracle::to_double(exact39) < 1e-12);
    REQUIRE(oracle::to_double(exact38) >= 1e-12);
    const ComponentDistribution half(Family::Geometric, 0.5);
    const auto t = truncation_point(half, half);
    CHECK(t.k_max == 39);
    CHECK_FALSE(t.cap_reached);

    const ComponentDistribution spike(Family::Geometric, 0.3);  // pmf(0) = 0.7
    CHECK(truncation_point(spike, spike, {0.5, 10000}).k_max == 0);

    const ComponentDistribution big(Family::Poisson, 28.0), small(Family::Poisson, 1.0);
    CHECK(truncation_point(big, big).k_max > truncation_point(small, small).k_max);
    CHECK(truncation_point(big, small).k_max == truncation_point(big, big).k_max);

    const ComponentDistribution slow(Family::Geometric, 0.999);
    const auto capped = truncation_point(slow, slow, {1e-12, 100});
    CHECK(capped.cap_reached);
    CHECK(capped.k_max == 100);

    CHECK_THROWS_AS(truncation_point(half, half, {0.0, 10}), DomainError);
    CHECK_THROWS_AS(truncation_point(half, half, {1.0, 10}), DomainError);
    CHECK_THROWS_AS(truncation_point(half, half, {1e-12, 0}), DomainError);
}

TEST_CASE("identical distributions compare Equal") {
    const auto a = make(Family::Poisson, Statistic::Max, {8, 0.8, 0.1});
    for (Relation r : {Relation::St, Relation::Hr, Relation::Rhr}) {
        const auto v = compare(a, a, r);
        CHECK(v.direction == Direction::Equal);
        CHECK(v.crossings.empty());
        for (const auto& m : v.margins) {
            if (m) CHECK(*m == 0.0);
        }
    }
}

TEST_CASE("maximum pair: st dominance and rhr crossing") {
    const auto a = make(Family::Poisson, Statistic::Max, {8, 0.8, 0.1});
    const auto b = make(Family::Poisson, Statistic::Max, {7, 1, 0.9});

    const auto st = compare(a, b, Relation::St);
    CHECK(st.direction == Direction::FirstDominates);
    CHECK(st.min_margin() >= -kOrderTolerance);
    CHECK(st.margins.size() == static_cast<std::size_t>(st.k_max + 1));
    CHECK(compare(b, a, Relation::St).direction == Direction::SecondDominates);

    const auto rhr = compare(a, b, Relation::Rhr);
    CHECK(rhr.direction == Direction::Crossing);
    REQUIRE_FALSE(rhr.crossings.empty());
    CHECK(rhr.crossings.front() > 2);
    CHECK(rhr.crossings.front() <= 5);
    REQUIRE(rhr.margins[2].has_value());
    REQUIRE(rhr.margins[5].has_value());
    CHECK(*rhr.margins[2] < 0.0);
    CHECK(*rhr.margins[5] > 0.0);
    CHECK(std::fabs(*rhr.margins[5] - pointwise_margin(a, b, Relation::Rhr, 5)) < 1e-12);
}

TEST_CASE("direction invariants") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Family f = seed % 2 ? Family::Geometric : Family::Poisson;
        const Statistic s = seed % 3 ? Statistic::Max : Statistic::Min;
        const auto pair = random_majorization_pair(2 + seed % 3, f, 2, seed);
        const auto a = make(f, s, pair.x);
        const auto b = make(f, s, pair.y);
        for (Relation r : {Relation::St, Relation::Hr, Relation::Rhr}) {
            const auto ab = compare(a, b, r);
            const auto ba = compare(b, a, r);
            CHECK(ba.direction == reversed(ab.direction));
            CHECK((ab.direction == Direction::Crossing) == !ab.crossings.empty());
            if (ab.direction == Direction::FirstDominates) CHECK(ab.min_margin() >= -ab.tolerance);
            if (ab.direction == Direction::SecondDominates) CHECK(ab.max_margin() <= ab.tolerance);
        }
        // Hazard-type dominance implies st dominance in the same direction.
        const auto st = compare(a, b, Relation::St).direction;
        for (Relation r : {Relation::Hr, Relation::Rhr}) {
            const auto d = compare(a, b, r).direction;
            if (d == Direction::FirstDominates) {
                CHECK(st != Direction::SecondDominates);
                CHECK(st != Direction::Crossing);
            }
            if (d == Direction::SecondDominates) {
                CHECK(st != Direction::FirstDominates);
                CHECK(st != Direction::Crossing);
            }
        }
    }
}

TEST_CASE("verdicts are stable when the tail epsilon tightens") {
    struct Case {
        Family family;
        Statistic stat;
        std::vector<double> x, y;
    };
    const std::vector<Case> cases{
        {Family::Poisson, Statistic::Max, {8, 0.8, 0.1}, {7, 1, 0.9}},
        {Family::Poisson, Statistic::Min, {28, 0.8, 0.1}, {27, 1, 0.9}},
        {Family::Geometric, Statistic::Max, {0.99, 0.69, 0.57}, {0.9, 0.78, 0.57}},
        {Family::Geometric, Statistic::Min, {0.99, 0.96, 0.57}, {0.9, 0.78, 0.57}},
    };
    for (const auto& c : cases) {
        const auto a = make(c.family, c.stat, c.x);
        const auto b = make(c.family, c.stat, c.y);
        for (Relation r : {Relation::St, Relation::Hr, Relation::Rhr}) {
            const auto base = compare(a, b, r, {1e-10, 10000});
            for (double eps : {1e-11, 1e-12, 1e-13, 1e-14}) {
                const auto v = compare(a, b, r, {eps, 10000});
                CHECK(v.direction == base.direction);
                CHECK(v.k_max >= base.k_max);
                CHECK(v.tail_epsilon == eps);
            }
        }
    }
}

TEST_CASE("margins inside the tolerance are neutral") {
    const auto a = make(Family::Poisson, Statistic::Max, {2.0, 2.0});
    const auto b = make(Family::Poisson, Statistic::Max, {2.0 + 1e-13, 2.0 - 1e-13});
    const auto v = compare(a, b, Relation::Rhr);
    CHECK(v.direction == Direction::Equal);
    CHECK(v.crossings.empty());
}

TEST_CASE("hazard margins skip degenerate points and report the cap") {
    const auto a = make(Family::Geometric, Statistic::Max, {0.999, 0.5});
    const auto b = make(Family::Geometric, Statistic::Max, {0.9, 0.599});
    const auto v = compare(a, b, Relation::St, {1e-12, 50});
    CHECK(v.cap_reached);
    CHECK(v.k_max == 50);

    const auto far_a = make(Family::Poisson, Statistic::Min, {0.05, 0.05});
    const auto far_b = make(Family::Poisson, Statistic::Min, {0.06, 0.04});
    const auto h = compare(far_a, far_b, Relation::Hr);
    CHECK(h.direction != Direction::Crossing);
    CHECK_THROWS_AS(pointwise_margin(far_a, far_b, Relation::Hr, 400), DegenerateTail);
}

TEST_CASE("names round-trip") {
    for (Relation r : {Relation::St, Relation::Hr, Relation::Rhr}) CHECK(parse_relation(to_string(r)) == r);
    CHECK_THROWS_AS(parse_relation("lr"), DomainError);
    CHECK(reversed(Direction::Equal) == Direction::Equal);
    CHECK(reversed(Direction::Crossing) == Direction::Crossing);
}
