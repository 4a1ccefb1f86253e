#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "extremo/error.hpp"
#include "extremo/report.hpp"
#include "extremo/verify.hpp"

using namespace extremo;

namespace {

double product(const std::vector<double>& v) {
    double p = 1.0;
    for (double x : v) p *= x;
    return p;
}

}  // namespace

TEST_CASE("claims") {
    CHECK(claim_of(TheoremId::T3_1).relation == Relation::St);
    CHECK(claim_of(TheoremId::T3_2).expected == Direction::SecondDominates);
    CHECK(claim_of(TheoremId::T3_3).relation == Relation::Hr);
    CHECK(claim_of(TheoremId::T3_3).statistic == Statistic::Min);
    CHECK(claim_of(TheoremId::T3_4).family == Family::Geometric);
    for (auto id : {TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3, TheoremId::T3_4})
        CHECK(parse_theorem(to_string(id)) == id);
    CHECK_THROWS_AS(parse_theorem("T9"), DomainError);
}

TEST_CASE("identity pair is a vacuous pass") {
    const std::vector<double> x{3.0, 1.0, 0.2};
    const auto o = check_theorem_pair(TheoremId::T3_1, x, x);
    CHECK(o.verdict.direction == Direction::Equal);
    CHECK(o.failure_kinds.empty());
    CHECK(o.oriented_margin == 0.0);
}

TEST_CASE("maximum pair satisfies the st claim") {
    const std::vector<double> x{8, 0.8, 0.1}, y{7, 1, 0.9};
    const auto o = check_theorem_pair(TheoremId::T3_1, x, y);
    CHECK(o.verdict.direction == Direction::FirstDominates);
    CHECK(o.failure_kinds.empty());
    CHECK(o.rhr == Direction::Crossing);
    for (const auto& m : o.verdict.margins) {
        if (m) CHECK(*m >= -kOrderTolerance);
    }

    // Swapping the roles contradicts the claim and is recorded as a failure.
    const auto swapped = check_theorem_pair(TheoremId::T3_1, y, x);
    REQUIRE_FALSE(swapped.failure_kinds.empty());
    CHECK(swapped.failure_kinds.front() == "dominance");
    CHECK(swapped.oriented_margin < 0.0);
}

TEST_CASE("geometric minimum hazards are constant") {
    const std::vector<double> x{0.9, 0.9}, y{0.5, 0.5};
    const auto o = check_theorem_pair(TheoremId::T3_3, x, y);
    CHECK(o.verdict.direction == Direction::FirstDominates);
    // (1 - 0.25) - (1 - 0.81) at every point.
    for (const auto& m : o.verdict.margins) {
        if (m) CHECK(std::fabs(*m - 0.56) < 1e-12);
    }
    CHECK(std::fabs(o.oriented_margin - 0.56) < 1e-12);
}

TEST_CASE("hypotheses") {
    for (std::size_t t = 0; t < 300; ++t) {
        const auto p = draw_hypothesis(TheoremId::T3_3, {2, 6}, 42, t);
        CHECK(p.certified);
        CHECK(product(p.x) >= product(p.y));
        for (double q : p.x) CHECK((q > 0.0 && q < 1.0));
        const auto m = draw_hypothesis(TheoremId::T3_4, {2, 6}, 42, t);
        CHECK(m.certified);
        CHECK(majorizes(m.x, m.y));
        CHECK((m.x.size() >= 2 && m.x.size() <= 6));
    }
    const auto a = draw_hypothesis(TheoremId::T3_1, {2, 6}, 9, 17);
    const auto b = draw_hypothesis(TheoremId::T3_1, {2, 6}, 9, 17);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
}

TEST_CASE("theorem campaigns produce no failures") {
    for (auto id : {TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3, TheoremId::T3_4}) {
        CAPTURE(to_string(id));
        const auto r = verify_theorem(id, 1000, {2, 6}, 42);
        CHECK(r.trials == 1000);
        CHECK(r.failures.empty());
        CHECK(r.worst_margin >= -kOrderTolerance);
    }
    const auto t33 = verify_theorem(TheoremId::T3_3, 1000, {2, 6}, 42);
    CHECK(t33.worst_margin >= 0.0);
}

TEST_CASE("campaign reports do not depend on the thread count") {
    CampaignOptions one, four;
    one.threads = 1;
    four.threads = 4;
    for (auto id : {TheoremId::T3_2, TheoremId::T3_4}) {
        const auto a = to_json(verify_theorem(id, 200, {2, 6}, 5, one)).dump();
        const auto b = to_json(verify_theorem(id, 200, {2, 6}, 5, four)).dump();
        CHECK(a == b);
        CHECK(a == to_json(verify_theorem(id, 200, {2, 6}, 5, one)).dump());
    }
    SearchOptions s1, s4;
    s1.threads = 1;
    s4.threads = 3;
    CHECK(to_json(search_counterexamples(Relation::Rhr, Family::Poisson, Statistic::Max, 300, 7, s1)).dump() ==
          to_json(search_counterexamples(Relation::Rhr, Family::Poisson, Statistic::Max, 300, 7, s4)).dump());
}

TEST_CASE("campaign argument checks") {
    CHECK_THROWS_AS(verify_theorem(TheoremId::T3_1, 0, {2, 6}, 1), DomainError);
    CHECK_THROWS_AS(verify_theorem(TheoremId::T3_1, 10, {1, 6}, 1), DomainError);
    CHECK_THROWS_AS(verify_theorem(TheoremId::T3_1, 10, {2, 9}, 1), DomainError);
    CHECK_THROWS_AS(verify_theorem(TheoremId::T3_1, 10, {5, 3}, 1), DomainError);
    CHECK_THROWS_AS(search_counterexamples(Relation::Hr, Family::Poisson, Statistic::Min, 0, 1),
                    DomainError);
}

TEST_CASE("quarantine fixtures are standalone JSON") {
    const auto dir = std::filesystem::temp_directory_path() / "extremo_quarantine_test";
    std::filesystem::remove_all(dir);
    const std::vector<double> x{7, 1, 0.9}, y{8, 0.8, 0.1};
    const auto o = check_theorem_pair(TheoremId::T3_1, x, y);
    const TheoremFailure failure{12, x, y, o.failure_kinds.front(), o.verdict};
    const auto path = write_quarantine_fixture(dir, TheoremId::T3_1, 42, 1e-12, failure);
    CHECK(path.filename() == "T3_1_seed42_trial12.json");
    std::ifstream is(path);
    const auto j = nlohmann::json::parse(is);
    CHECK(j.at("theorem_id") == "T3_1");
    CHECK(j.at("seed") == 42);
    CHECK(j.at("trial") == 12);
    CHECK(j.at("kind") == "dominance");
    CHECK(j.at("x").get<std::vector<double>>() == x);
    CHECK(j.at("y").get<std::vector<double>>() == y);
    // Replaying the fixture reproduces the failure.
    const auto replay = check_theorem_pair(TheoremId::T3_1, j.at("x").get<std::vector<double>>(),
                                           j.at("y").get<std::vector<double>>());
    CHECK_FALSE(replay.failure_kinds.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("counterexample reproduction") {
    const auto ce1 = reproduce_counterexample(CounterexampleId::CE3_1);
    CHECK(ce1.pass);
    CHECK(ce1.majorization_holds);
    CHECK(ce1.sign_change);
    REQUIRE(ce1.values.size() == 2);
    CHECK(ce1.values[0].k == 5);
    CHECK(ce1.values[0].expected == 0.0520158);
    CHECK(std::fabs(ce1.values[0].actual - 0.0520158) <= 1e-6);
    CHECK(ce1.values[1].k == 2);
    CHECK(std::fabs(ce1.values[1].actual + 0.0232122) <= 1e-6);
    CHECK_FALSE(ce1.convention_note.empty());

    const auto ce3 = reproduce_counterexample(CounterexampleId::CE3_3);
    CHECK(ce3.pass);
    CHECK(ce3.tolerance == 1e-7);
    CHECK(ce3.majorization_holds);
    // The vector as printed sums to 2.52 rather than 2.25, so it cannot majorize q*.
    CHECK_FALSE(ce3.printed_majorization_holds);
    CHECK(ce3.printed_x == std::vector<double>{0.99, 0.96, 0.57});
    CHECK(ce3.x == std::vector<double>{0.99, 0.69, 0.57});
    CHECK(std::fabs(ce3.values[0].actual + 0.0010584) <= 1e-7);
    CHECK(std::fabs(ce3.values[1].actual - 0.00628996) <= 1e-7);

    // The second point reproduces; the first does not (exact value 0.0024854...).
    const auto ce2 = reproduce_counterexample(CounterexampleId::CE3_2);
    CHECK(ce2.majorization_holds);
    REQUIRE(ce2.values.size() == 2);
    CHECK(ce2.values[1].pass);
    CHECK(std::fabs(ce2.values[1].actual - 0.0124328) <= 1e-6);
    CHECK_FALSE(ce2.values[0].pass);
    CHECK(std::fabs(ce2.values[0].actual - 0.002485439432896359) < 1e-10);
    CHECK_FALSE(ce2.sign_change);
    CHECK_FALSE(ce2.pass);
}

TEST_CASE("search proposals are certified pairs") {
    for (auto f : {Family::Poisson, Family::Geometric}) {
        for (std::size_t i = 0; i < 300; ++i) {
            const auto p = propose_search_pair(f, {2, 4}, 7, i);
            CHECK(p.certified);
            CHECK(majorizes(p.x, p.y));
            for (double v : p.x) CHECK((v > 0.0 && (f == Family::Poisson || v < 1.0)));
        }
    }
}

TEST_CASE("st searches find nothing") {
    for (auto f : {Family::Poisson, Family::Geometric}) {
        for (auto s : {Statistic::Min, Statistic::Max}) {
            const auto r = search_counterexamples(Relation::St, f, s, 2000, 7);
            CHECK(r.hits.empty());
        }
    }
}

TEST_CASE("rhr searches find re-verified crossings") {
    for (auto f : {Family::Poisson, Family::Geometric}) {
        const auto r = search_counterexamples(Relation::Rhr, f, Statistic::Max, 2000, 7);
        REQUIRE_FALSE(r.hits.empty());
        for (const auto& h : r.hits) {
            CHECK(majorizes(h.pair.x, h.pair.y));
            CHECK_FALSE(h.crossings.empty());
            CHECK(h.min_margin < -r.tolerance);
            CHECK(h.max_margin > r.tolerance);
            // Independent recomputation of the witnesses on fresh distributions.
            const ExtremeDistribution a({ParamVector(f, h.pair.x), Statistic::Max});
            const ExtremeDistribution b({ParamVector(f, h.pair.y), Statistic::Max});
            CHECK(pointwise_margin(a, b, Relation::Rhr, h.positive_witness) > r.tolerance);
            CHECK(pointwise_margin(a, b, Relation::Rhr, h.negative_witness) < -r.tolerance);
        }
    }
}
