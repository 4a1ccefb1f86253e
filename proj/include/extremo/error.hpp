#pragma once

#include <stdexcept>
#include <string>

namespace extremo {

/// Invalid parameter or argument (non-positive mean, q outside (0,1), bad index...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Hazard requested where the survival function has fallen below the hazard floor.
class DegenerateTail : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reversed hazard requested where the cdf is below the hazard floor.
class DegenerateHead : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace extremo
