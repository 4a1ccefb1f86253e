#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation paths; each routine recomputes from first principles.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

/// int_mu^inf e^{-t} t^r dt / r! by adaptive Gauss-Kronrod quadrature.
inline double upper_gamma_integral(std::int64_t r, double mu) {
    const double rd = static_cast<double>(r);
    const double log_norm = std::lgamma(rd + 1.0);
    auto integrand = [&](double t) {
        if (t <= 0.0) return r == 0 ? std::exp(-t) : 0.0;
        return std::exp(-t + rd * std::log(t) - log_norm);
    };
    double error = 0.0;
    // Split at the mode so the peak is resolved before the infinite tail.
    const double split = std::max(mu, rd) + 1.0;
    const double head = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, mu, split, 15, 1e-14, &error);
    const double tail = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, split, std::numeric_limits<double>::infinity(), 15, 1e-14, &error);
    return head + tail;
}

/// e^{-mu} mu^r / int_mu^inf e^{-t} t^r dt with the integral by quadrature.
inline double gamma_hazard_by_quadrature(std::int64_t r, double mu) {
    const double rd = static_cast<double>(r);
    // numerator / (r! * integral/r!)
    const double numerator_over_factorial = std::exp(-mu + rd * std::log(mu) - std::lgamma(rd + 1.0));
    return numerator_over_factorial / upper_gamma_integral(r, mu);
}

inline Big big_from_decimal(double v) {
    // Parameters in the tests are short decimals; route through the shortest
    // decimal text so 0.8 means 8/10 rather than the nearest double.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return Big(buf);
}

inline Big big_poisson_pmf(std::int64_t k, const Big& mu) {
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    Big fact = 1;
    for (std::int64_t j = 2; j <= k; ++j) fact *= j;
    return exp(-mu) * pow(mu, static_cast<int>(k)) / fact;
}

/// Extended-precision P(X <= r).
inline Big big_poisson_cdf(std::int64_t r, const Big& mu) {
    Big s = 0;
    for (std::int64_t k = 0; k <= r; ++k) s += big_poisson_pmf(k, mu);
    return s;
}

/// Extended-precision P(X > r) as an upper tail sum.
inline Big big_poisson_survival(std::int64_t r, const Big& mu) {
    Big s = 0;
    Big term = big_poisson_pmf(r + 1, mu);
    for (std::int64_t k = r + 1; k < r + 400; ++k) {
        s += term;
        term = term * mu / Big(k + 1);
        if (k > mu && term < s * Big("1e-45")) break;
    }
    return s;
}

/// Exact rational from a short decimal literal, e.g. "0.99" -> 99/100.
inline Rational rational(const std::string& decimal) {
    const auto dot = decimal.find('.');
    if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(decimal));
    std::string digits = decimal.substr(0, dot) + decimal.substr(dot + 1);
    // A leading zero would be read as an octal prefix.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    boost::multiprecision::cpp_int num(digits);
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t i = dot + 1; i < decimal.size(); ++i) den *= 10;
    return Rational(num, den);
}

inline Rational rational_pow(const Rational& base, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// prod (1 - q_i^(u+1)), exactly.
inline Rational geometric_max_cdf(const std::vector<Rational>& q, std::int64_t u) {
    if (u < 0) return 0;
    Rational p = 1;
    for (const auto& qi : q) p *= 1 - rational_pow(qi, static_cast<int>(u + 1));
    return p;
}

}  // namespace oracle
