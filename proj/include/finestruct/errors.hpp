#pragma once
/// Exception types shared by all modules.

#include <stdexcept>
#include <string>

namespace finestruct {

/// Evaluation hit a zero set (q in [p], f^s(q) = 0, ...). Carries the offending magnitude.
struct singularity_error : std::domain_error {
    double magnitude;
    singularity_error(const std::string& what, double mag) : std::domain_error(what), magnitude(mag) {}
};

/// A formula that divides by q̲ was called on the real axis.
struct real_axis_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Point lies outside the convergence region of an expansion.
struct region_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation point too close to the quadrature contour.
struct contour_error : std::domain_error {
    double distance;
    contour_error(const std::string& what, double d) : std::domain_error(what), distance(d) {}
};

}  // namespace finestruct
