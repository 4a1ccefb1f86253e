#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremo/dist.hpp"
#include "extremo/majorization.hpp"
#include "extremo/order_check.hpp"

namespace extremo {

// ---------------------------------------------------------------------------
// Theorem campaigns

/// The four comparison results under test:
///   T3_1  Poisson means, x majorizes y        => max(X) >=_st max(Y)
///   T3_2  Poisson means, x majorizes y        => min(X) <=_st min(Y)
///   T3_3  geometric q, prod q >= prod q*      => min(X) >=_hr min(Y)
///   T3_4  geometric q, x majorizes y          => max(X) >=_st max(Y)
enum class TheoremId { T3_1, T3_2, T3_3, T3_4 };

std::string_view to_string(TheoremId id);
TheoremId parse_theorem(std::string_view text);

struct TheoremClaim {
    Family family;
    Statistic statistic;
    Relation relation;
    /// Direction asserted for compare(X, Y); Equal is always accepted.
    Direction expected;
};
TheoremClaim claim_of(TheoremId id);

struct IntRange {
    int lo;
    int hi;
};

struct CampaignOptions {
    TruncationPolicy policy{};
    double tolerance = kOrderTolerance;
    /// 0 = hardware concurrency. Results do not depend on this.
    unsigned threads = 0;
    /// When nonempty, every failing trial is written here as a JSON fixture.
    std::string quarantine_dir;
};

struct TheoremFailure {
    std::size_t trial = 0;
    std::vector<double> x;
    std::vector<double> y;
    /// "dominance" or "implication_chain:<relation>"
    std::string kind;
    OrderVerdict verdict;
};

/// Outcome of checking one hypothesis pair.
struct TrialOutcome {
    OrderVerdict verdict;                ///< verdict for the claimed relation
    Direction st = Direction::Equal;     ///< st/hr/rhr directions on the same range
    Direction hr = Direction::Equal;
    Direction rhr = Direction::Equal;
    double oriented_margin = 0.0;        ///< worst margin in the claimed direction
    std::vector<std::string> failure_kinds;
};

/// Checks the claim of `id` for one (x, y) pair, plus the hr => st and
/// rhr => st implication chain on the truncated range.
TrialOutcome check_theorem_pair(TheoremId id, std::span<const double> x, std::span<const double> y,
                                const CampaignOptions& options = {});

/// Draws the theorem's hypothesis for trial `trial` of campaign `seed`.
MajorizationPair draw_hypothesis(TheoremId id, IntRange n_range, std::uint64_t seed,
                                 std::size_t trial);

struct TheoremReport {
    TheoremId id = TheoremId::T3_1;
    std::size_t trials = 0;
    IntRange n_range{2, 6};
    std::uint64_t seed = 0;
    double tolerance = kOrderTolerance;
    double tail_epsilon = 0.0;
    std::vector<TheoremFailure> failures;
    /// Smallest margin in the claimed direction over all trials.
    double worst_margin = 0.0;
    /// Trials whose verdict was Equal (e.g. x == y).
    std::size_t equal_trials = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Writes `failure` as a standalone JSON fixture
/// <dir>/<id>_seed<seed>_trial<trial>.json and returns its path.
std::filesystem::path write_quarantine_fixture(const std::filesystem::path& dir, TheoremId id,
                                               std::uint64_t seed, double tail_epsilon,
                                               const TheoremFailure& failure);

TheoremReport verify_theorem(TheoremId id, std::size_t trials, IntRange n_range,
                             std::uint64_t seed, const CampaignOptions& options = {});

// ---------------------------------------------------------------------------
// Counterexample reproduction

enum class CounterexampleId { CE3_1, CE3_2, CE3_3 };

std::string_view to_string(CounterexampleId id);
CounterexampleId parse_counterexample(std::string_view text);

struct CounterexampleValue {
    std::int64_t k = 0;
    double expected = 0.0;
    double actual = 0.0;
    bool pass = false;
};

struct CounterexampleReport {
    CounterexampleId id = CounterexampleId::CE3_1;
    Family family = Family::Poisson;
    Statistic statistic = Statistic::Max;
    Relation relation = Relation::Rhr;
    std::vector<double> x;          ///< vectors the values are computed from
    std::vector<double> y;
    std::vector<double> printed_x;  ///< x exactly as quoted in the reference
    std::vector<CounterexampleValue> values;
    double tolerance = 1e-6;
    bool majorization_holds = false;
    bool printed_majorization_holds = false;
    /// compare(X, Y, relation) found a sign change.
    bool sign_change = false;
    OrderVerdict verdict;
    std::string convention_note;
    bool pass = false;
};

CounterexampleReport reproduce_counterexample(CounterexampleId id);

// ---------------------------------------------------------------------------
// Counterexample search

struct SearchOptions {
    TruncationPolicy policy{};
    double tolerance = kOrderTolerance;
    IntRange n_range{2, 4};
    unsigned threads = 0;
};

struct SearchHit {
    std::size_t proposal = 0;
    MajorizationPair pair;
    std::vector<std::int64_t> crossings;
    double min_margin = 0.0;
    double max_margin = 0.0;
    std::int64_t k_max = 0;
    /// Points recomputed pointwise during re-verification, one per sign.
    std::int64_t positive_witness = 0;
    std::int64_t negative_witness = 0;
};

struct SearchReport {
    Relation relation = Relation::Rhr;
    Family family = Family::Poisson;
    Statistic statistic = Statistic::Max;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    IntRange n_range{2, 4};
    double tolerance = kOrderTolerance;
    double tail_epsilon = 0.0;
    std::vector<SearchHit> hits;
    /// Crossings that did not survive re-verification.
    std::size_t rejected = 0;
};

/// Proposal for search draw `index`: a certified pair biased toward the
/// skewed corners where order violations live, mixed with uniform draws.
MajorizationPair propose_search_pair(Family family, IntRange n_range, std::uint64_t seed,
                                     std::size_t index);

SearchReport search_counterexamples(Relation relation, Family family, Statistic statistic,
                                    std::size_t budget, std::uint64_t seed,
                                    const SearchOptions& options = {});

}  // namespace extremo
