#ifndef DDX_KUMMER_HPP
#define DDX_KUMMER_HPP

namespace ddx {

/// Confluent hypergeometric function 1F1(a, b; z) by direct summation.
///
/// When a is a non-positive integer -n the series terminates and the exact
/// degree-n polynomial is returned. Otherwise terms are summed to relative
/// tolerance 1e-14; exceeding 10^4 terms raises NonConvergence. b must not
/// be a non-positive integer.
double kummer(double a, double b, double z);

}  // namespace ddx

#endif  // DDX_KUMMER_HPP
