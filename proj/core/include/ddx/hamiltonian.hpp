#ifndef DDX_HAMILTONIAN_HPP
#define DDX_HAMILTONIAN_HPP

#include <string>

#include "ddx/field.hpp"

namespace ddx {

/// Where a potential is defined. Half-line potentials are singular at the
/// origin; grids must keep x_min > 0 there. Interval domains come from
/// user-supplied tables.
struct Domain {
  enum class Kind { FullLine, HalfLine, Interval };
  Kind kind = Kind::FullLine;
  double lo = 0.0;  // used by Interval only
  double hi = 0.0;

  static Domain full_line() { return {Kind::FullLine, 0.0, 0.0}; }
  static Domain half_line() { return {Kind::HalfLine, 0.0, 0.0}; }
  static Domain interval(double lo, double hi) { return {Kind::Interval, lo, hi}; }

  bool contains(double x) const {
    switch (kind) {
      case Kind::FullLine: return true;
      case Kind::HalfLine: return x > 0.0;
      case Kind::Interval: return x >= lo && x <= hi;
    }
    return false;
  }

  void require(const GridSpec& g, const std::string& who) const {
    if (!contains(g.x_min) || !contains(g.x_max))
      throw DomainMismatch(who + ": grid [" + std::to_string(g.x_min) + ", " +
                           std::to_string(g.x_max) + "] leaves the potential domain");
  }
};

/// Real symmetric 2x2 potential v(x): an evaluator (with optional exact
/// derivative chain), a domain, and a human-readable descriptor. Potentials
/// are closures rather than sampled arrays so a transformed potential can be
/// evaluated on any grid chosen later.
struct Potential {
  Analytic<Mat2> fun;
  Domain domain;
  std::string descriptor;

  Mat2 operator()(double x) const { return fun.eval(x); }
};

/// h = J d/dx + v(x) with J the real form of i*sigma2.
struct DiracHamiltonian {
  Potential potential;

  const Domain& domain() const { return potential.domain; }
};

/// Free particle in the off-diagonal mass realization: v(x) = m*sigma1 on
/// the full line. Requires m > 0.
Potential free_particle_potential(double m);

/// Radial problem with vector coupling alpha/x and scalar coupling beta/x.
struct CoulombParams {
  double M;      // mass
  double alpha;  // vector coupling
  double beta;   // scalar coupling
  double k;      // angular-momentum parameter

  void validate() const;
  /// mu = sqrt(k^2 + beta^2 - alpha^2); real by the validation constraint.
  double mu() const;
};

/// Half-line potential with v11 = M + (alpha+beta)/x, v22 = -M + (alpha-beta)/x,
/// v12 = v21 = k/x.
Potential coulomb_potential(const CoulombParams& p);

/// Apply h to a spinor field: J psi' + v psi. The analytic path is taken
/// when the mode allows it and psi carries an exact derivative; otherwise
/// finite differences of the mode's order.
SpinorField apply_h(const DiracHamiltonian& h, const SpinorField& psi,
                    DerivMode mode = DerivMode::Analytic);

/// Apply h to an analytic spinor function (value + derivative chain needed).
Analytic<Spinor2> apply_h(const DiracHamiltonian& h, const Analytic<Spinor2>& psi);

/// Max-norm of (h psi - E psi) over interior nodes, normalized by the
/// max-norm of psi on the same nodes. Boundary nodes touched by one-sided
/// stencils are excluded in finite-difference modes so that interior
/// convergence order is observable.
double eigen_residual(const DiracHamiltonian& h, const SpinorField& psi, double energy,
                      DerivMode mode = DerivMode::Analytic);

}  // namespace ddx

#endif  // DDX_HAMILTONIAN_HPP
