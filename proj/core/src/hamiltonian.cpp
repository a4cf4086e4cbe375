#include "ddx/hamiltonian.hpp"

#include <cmath>

namespace ddx {

Potential free_particle_potential(double m) {
  if (!(m > 0.0))
    throw InvalidParams("free_particle_potential: mass must be positive");
  Potential p;
  p.fun = a_const(kSigma1 * m, 4);
  p.domain = Domain::full_line();
  p.descriptor = "free particle, v = m*sigma1, m = " + std::to_string(m);
  return p;
}

void CoulombParams::validate() const {
  if (!(M > 0.0)) throw InvalidParams("CoulombParams: M must be positive");
  if (!(k * k + beta * beta - alpha * alpha > 0.0))
    throw InvalidParams("CoulombParams: need k^2 + beta^2 - alpha^2 > 0");
}

double CoulombParams::mu() const {
  return std::sqrt(k * k + beta * beta - alpha * alpha);
}

namespace {

// 1/x-type coefficient matrix: value C + D/x with derivative chain from
// termwise differentiation of the 1/x part.
Analytic<Mat2> coulomb_matrix_fun(const Mat2& constant, const Mat2& over_x, int depth) {
  Analytic<Mat2> r;
  r.eval = [constant, over_x](double x) {
    if (!(x > 0.0))
      throw DomainMismatch("coulomb potential evaluated at x <= 0");
    return constant + over_x * (1.0 / x);
  };
  if (depth > 0) {
    // d/dx (C + D/x) = -D/x^2; represent as power -2 term
    struct Pow {
      Mat2 coeff;
      double expo;
    };
    // build the remaining chain explicitly for pure power terms
    std::function<Analytic<Mat2>(Mat2, double, int)> make_pow =
        [&make_pow](Mat2 coeff, double expo, int d) {
          Analytic<Mat2> f;
          f.eval = [coeff, expo](double x) {
            if (!(x > 0.0))
              throw DomainMismatch("coulomb potential evaluated at x <= 0");
            return coeff * std::pow(x, expo);
          };
          if (d > 0)
            f.deriv = std::make_shared<const Analytic<Mat2>>(
                make_pow(coeff * expo, expo - 1.0, d - 1));
          return f;
        };
    r.deriv = std::make_shared<const Analytic<Mat2>>(
        make_pow(over_x * -1.0, -2.0, depth - 1));
  }
  return r;
}

}  // namespace

Potential coulomb_potential(const CoulombParams& p) {
  p.validate();
  Potential pot;
  const Mat2 constant{p.M, 0.0, 0.0, -p.M};
  const Mat2 over_x{p.alpha + p.beta, p.k, p.k, p.alpha - p.beta};
  pot.fun = coulomb_matrix_fun(constant, over_x, 4);
  pot.domain = Domain::half_line();
  pot.descriptor = "generalized Coulomb, M = " + std::to_string(p.M) +
                   ", alpha = " + std::to_string(p.alpha) +
                   ", beta = " + std::to_string(p.beta) + ", k = " + std::to_string(p.k);
  return pot;
}

Analytic<Spinor2> apply_h(const DiracHamiltonian& h, const Analytic<Spinor2>& psi) {
  if (!psi.deriv) throw Error("apply_h: spinor function carries no derivative chain");
  return a_add(a_apply_const(kJ, a_deriv(psi)), a_apply(h.potential.fun, psi));
}

SpinorField apply_h(const DiracHamiltonian& h, const SpinorField& psi, DerivMode mode) {
  const GridSpec& g = psi.grid();
  h.domain().require(g, "apply_h");

  if (mode == DerivMode::Analytic && psi.has_analytic_deriv()) {
    return SpinorField(g, apply_h(h, psi.analytic()));
  }

  SpinorField dpsi = fd_derivative(psi, fd_order(mode));
  std::vector<Spinor2> out(g.n_points);
  for (int i = 0; i < g.n_points; ++i) {
    out[i] = kJ * dpsi[i] + h.potential(g.node(i)) * psi[i];
  }
  return SpinorField(g, std::move(out));
}

double eigen_residual(const DiracHamiltonian& h, const SpinorField& psi, double energy,
                      DerivMode mode) {
  const bool analytic = mode == DerivMode::Analytic && psi.has_analytic_deriv();
  const int margin = analytic ? 1 : fd_margin(fd_order(mode), 1);
  if (2 * margin >= psi.size())
    throw GridTooSmall("eigen_residual: margin swallows the grid");

  const double scale = psi.max_norm_interior(margin);
  if (scale == 0.0) throw ZeroField("eigen_residual: field vanishes identically");

  SpinorField hpsi = apply_h(h, psi, mode);
  double worst = 0.0;
  for (int i = margin; i < psi.size() - margin; ++i) {
    const Spinor2 r = hpsi[i] - psi[i] * energy;
    worst = std::max(worst, r.max_norm());
  }
  return worst / scale;
}

}  // namespace ddx
