#include "ddx/kummer.hpp"

#include <cmath>

#include "ddx/errors.hpp"

namespace ddx {

namespace {

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

}  // namespace

double kummer(double a, double b, double z) {
  if (is_nonpositive_integer(b))
    throw InvalidParams("kummer: b must not be a non-positive integer");

  if (is_nonpositive_integer(a)) {
    // terminating case: exact polynomial of degree n = -a
    const int n = static_cast<int>(-a);
    double sum = 1.0;
    double term = 1.0;
    for (int j = 0; j < n; ++j) {
      term *= (a + j) * z / ((b + j) * (j + 1));
      sum += term;
    }
    return sum;
  }

  constexpr int kTermCap = 10000;
  constexpr double kRelTol = 1e-14;
  double sum = 1.0;
  double term = 1.0;
  for (int j = 0; j < kTermCap; ++j) {
    term *= (a + j) * z / ((b + j) * (j + 1));
    sum += term;
    if (std::abs(term) <= kRelTol * std::abs(sum)) return sum;
  }
  throw NonConvergence("kummer: series did not reach tolerance within term cap");
}

}  // namespace ddx
