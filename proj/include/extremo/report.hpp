#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "extremo/mc_oracle.hpp"
#include "extremo/order_check.hpp"
#include "extremo/verify.hpp"

namespace extremo {

inline constexpr std::string_view kVersion = "1.0.0";

nlohmann::json to_json(const OrderVerdict& verdict, bool include_margins = true);
nlohmann::json to_json(const TheoremFailure& failure);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const CounterexampleReport& report);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const ExtremeSpec& spec);

struct McCheckReport {
    ExtremeSpec spec;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    double delta = 1e-3;
    double ks = 0.0;
    double bound = 0.0;
    double empirical_mean = 0.0;
    bool pass = false;
};
McCheckReport mc_check(const ExtremeSpec& spec, std::uint64_t n_samples, std::uint64_t seed,
                       double delta = 1e-3, unsigned threads = 0);
nlohmann::json to_json(const McCheckReport& report);

/// Report timestamp: SOURCE_DATE_EPOCH when set, otherwise the current UTC time.
std::string report_timestamp();

/// {command, version, seed?, timestamp, input, payload}
nlohmann::json make_envelope(std::string_view command, std::optional<std::uint64_t> seed,
                             nlohmann::json input, nlohmann::json payload);

}  // namespace extremo
