#pragma once

#include <cmath>
#include <span>

namespace extremo {

/// Neumaier (improved Kahan) compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Factors below this switch the product to log space.
inline constexpr double kLogProductFloor = 1e-300;

/// Product of nonnegative factors; accumulated as exp(sum of logs) when any
/// factor is below kLogProductFloor so intermediate results cannot underflow early.
double stable_product(std::span<const double> factors);

/// 1 - prod(1 - c_i) given the complements c_i in [0,1], without cancellation.
double one_minus_product_of_complements(std::span<const double> complements);

/// log(k!) for k >= 0.
double log_factorial(long long k);

}  // namespace extremo
