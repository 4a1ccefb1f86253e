#include "extremo/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace extremo {

double stable_product(std::span<const double> factors) {
    bool use_logs = false;
    for (double f : factors) {
        if (f == 0.0) return 0.0;
        if (f < kLogProductFloor) use_logs = true;
    }
    if (!use_logs) {
        double p = 1.0;
        for (double f : factors) p *= f;
        return p;
    }
    CompensatedSum log_sum;
    for (double f : factors) log_sum += std::log(f);
    return std::exp(log_sum.value());
}

double one_minus_product_of_complements(std::span<const double> complements) {
    // prod(1 - c_i) = exp(sum log1p(-c_i)); the outer 1 - exp(.) goes through expm1.
    CompensatedSum log_sum;
    for (double c : complements) {
        if (c >= 1.0) return 1.0;
        log_sum += std::log1p(-c);
    }
    return -std::expm1(log_sum.value());
}

namespace {

constexpr int kFactorialTableSize = 1024;

const std::array<double, kFactorialTableSize>& log_factorial_table() {
    static const auto table = [] {
        std::array<double, kFactorialTableSize> t{};
        t[0] = 0.0;
        CompensatedSum acc;
        for (int k = 1; k < kFactorialTableSize; ++k) {
            acc += std::log(static_cast<double>(k));
            t[k] = acc.value();
        }
        return t;
    }();
    return table;
}

}  // namespace

double log_factorial(long long k) {
    if (k < kFactorialTableSize) return log_factorial_table()[static_cast<std::size_t>(k)];
    int sign = 0;
    return ::lgamma_r(static_cast<double>(k) + 1.0, &sign);
}

}  // namespace extremo
