#include "ddx/darboux.hpp"

#include <cmath>

namespace ddx {

namespace {

constexpr double kEigenTol = 1e-9;
constexpr double kKernelTol = 1e-9;
constexpr double kDetRelTol = 1e-10;

double column_norm_product(const Mat2& m) {
  const double n1 = std::hypot(m.a11, m.a21);
  const double n2 = std::hypot(m.a12, m.a22);
  return n1 * n2;
}

void check_det(const Mat2& m, double x) {
  if (std::abs(m.det()) <= kDetRelTol * column_norm_product(m))
    throw SingularSeedMatrix("seed matrix is singular at x = " + std::to_string(x), x);
}

// u with a local nodelessness check wired into the evaluator; keeps
// evaluation away from zeros of det u even off the validated grid.
Analytic<Mat2> guarded(const Analytic<Mat2>& u) {
  Analytic<Mat2> r = u;
  r.eval = [ue = u.eval](double x) {
    const Mat2 m = ue(x);
    check_det(m, x);
    return m;
  };
  return r;
}

}  // namespace

SeedMatrix build_seed_matrix(const SeedSolution& s1, const SeedSolution& s2,
                             const DiracHamiltonian& h0, const GridSpec& grid) {
  if (s1.energy == s2.energy)
    throw DegenerateSeeds("build_seed_matrix: eps1 == eps2 = " + std::to_string(s1.energy));
  h0.domain().require(grid, "build_seed_matrix");

  const double r1 = eigen_residual(h0, s1.sample(grid), s1.energy);
  if (r1 > kEigenTol)
    throw SeedNotEigen("build_seed_matrix: seed 1 eigen-residual " + std::to_string(r1));
  const double r2 = eigen_residual(h0, s2.sample(grid), s2.energy);
  if (r2 > kEigenTol)
    throw SeedNotEigen("build_seed_matrix: seed 2 eigen-residual " + std::to_string(r2));

  SeedMatrix sm{s1, s2, Mat2{s1.energy, 0.0, 0.0, s2.energy}, {}, h0, grid};

  // columns from the two seed chains; depth limited by the shallower seed
  std::function<Analytic<Mat2>(Analytic<Spinor2>, Analytic<Spinor2>)> assemble =
      [&assemble](Analytic<Spinor2> c1, Analytic<Spinor2> c2) {
        Analytic<Mat2> m;
        m.eval = [e1 = c1.eval, e2 = c2.eval](double x) {
          const Spinor2 a = e1(x);
          const Spinor2 b = e2(x);
          return Mat2{a.c1, b.c1, a.c2, b.c2};
        };
        if (c1.deriv && c2.deriv)
          m.deriv = std::make_shared<const Analytic<Mat2>>(assemble(*c1.deriv, *c2.deriv));
        return m;
      };
  sm.u = assemble(s1.fun, s2.fun);

  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.node(i);
    check_det(sm.u.eval(x), x);
  }
  return sm;
}

Analytic<Mat2> sigma_analytic(const SeedMatrix& u) {
  Analytic<Mat2> core = a_sub(
      a_mul(a_mul_const_right(u.u, u.lambda), a_inv(guarded(u.u))), u.h0.potential.fun);
  return a_mul_const(kJ, core);
}

Analytic<Mat2> sigma_direct(const SeedMatrix& u) {
  if (!u.u.deriv)
    throw Error("sigma_direct: seed matrix carries no derivative chain");
  return a_scale(a_mul(a_deriv(u.u), a_inv(guarded(u.u))), -1.0);
}

Potential partner_potential(const SeedMatrix& u) {
  const double de = u.eps1() - u.eps2();

  Analytic<Mat2> fun;
  fun.eval = [ue = u.u.eval, v0 = u.h0.potential.fun.eval, de](double x) {
    const Mat2 m = ue(x);
    check_det(m, x);
    const Mat2 v = v0(x);
    const double d1 = m.a11 * m.a22 + m.a12 * m.a21;
    const double d2 = m.a21 * m.a22 - m.a11 * m.a12;
    const double f = de / m.det();
    // -J v J is v with swapped diagonal and negated off-diagonal
    return Mat2{v.a22 + f * d1, -v.a12 + f * d2, -v.a21 + f * d2, v.a11 - f * d1};
  };

  // derivative chain through the commutator route: v1' = v0' + [sigma, J]'
  Analytic<Mat2> sig = sigma_analytic(u);
  Analytic<Mat2> comm = a_sub(a_mul_const_right(sig, kJ), a_mul_const(kJ, sig));
  Analytic<Mat2> v1_route25 = a_add(u.h0.potential.fun, comm);
  fun.deriv = v1_route25.deriv;

  Potential p;
  p.fun = std::move(fun);
  p.domain = u.h0.potential.domain;
  p.descriptor = "darboux partner of [" + u.h0.potential.descriptor + "], eps = (" +
                 std::to_string(u.eps1()) + ", " + std::to_string(u.eps2()) + ")";
  return p;
}

DarbouxTransform make_darboux_transform(const SeedMatrix& u) {
  DarbouxTransform t{u, sigma_analytic(u), partner_potential(u)};

  // kernel certification: L must annihilate both seeds on the working grid
  for (const SeedSolution* s : {&u.seed1, &u.seed2}) {
    const SpinorField f = s->sample(u.grid);
    const SpinorField img = apply_L(t, f);
    const double rel = img.max_norm_interior(1) / f.max_norm_interior(1);
    if (!(rel <= kKernelTol))
      throw SeedNotEigen("make_darboux_transform: L does not annihilate " + s->label +
                         " (relative norm " + std::to_string(rel) + ")");
  }
  return t;
}

DarbouxTransform make_darboux_transform(const SeedSolution& s1, const SeedSolution& s2,
                                        const DiracHamiltonian& h0, const GridSpec& grid) {
  return make_darboux_transform(build_seed_matrix(s1, s2, h0, grid));
}

Analytic<Spinor2> apply_L(const DarbouxTransform& t, const Analytic<Spinor2>& psi) {
  if (!psi.deriv) throw Error("apply_L: spinor function carries no derivative chain");
  return a_add(a_deriv(psi), a_apply(t.sigma, psi));
}

SpinorField apply_L(const DarbouxTransform& t, const SpinorField& psi, DerivMode mode) {
  const GridSpec& g = psi.grid();
  if (mode == DerivMode::Analytic && psi.has_analytic_deriv())
    return SpinorField(g, apply_L(t, psi.analytic()));

  SpinorField dpsi = fd_derivative(psi, fd_order(mode));
  std::vector<Spinor2> out(g.n_points);
  for (int i = 0; i < g.n_points; ++i)
    out[i] = dpsi[i] + t.sigma.eval(g.node(i)) * psi[i];
  return SpinorField(g, std::move(out));
}

Analytic<Spinor2> apply_L_dagger(const DarbouxTransform& t, const Analytic<Spinor2>& psi) {
  if (!psi.deriv) throw Error("apply_L_dagger: spinor function carries no derivative chain");
  return a_add(a_scale(a_deriv(psi), -1.0), a_apply(a_transpose(t.sigma), psi));
}

SpinorField apply_L_dagger(const DarbouxTransform& t, const SpinorField& psi, DerivMode mode) {
  const GridSpec& g = psi.grid();
  if (mode == DerivMode::Analytic && psi.has_analytic_deriv())
    return SpinorField(g, apply_L_dagger(t, psi.analytic()));

  SpinorField dpsi = fd_derivative(psi, fd_order(mode));
  std::vector<Spinor2> out(g.n_points);
  for (int i = 0; i < g.n_points; ++i)
    out[i] = -dpsi[i] + t.sigma.eval(g.node(i)).transpose() * psi[i];
  return SpinorField(g, std::move(out));
}

namespace {

// informational: no growth at the window edges relative to the interior
bool window_bounded(const Analytic<Spinor2>& f, const GridSpec& g) {
  double interior = 0.0;
  for (int i = 1; i < g.n_points - 1; ++i)
    interior = std::max(interior, f.eval(g.node(i)).max_norm());
  const double edges =
      std::max(f.eval(g.x_min).max_norm(), f.eval(g.x_max).max_norm());
  return edges <= interior;
}

}  // namespace

std::pair<SeedSolution, SeedSolution> kernel_spinors_h1(const DarbouxTransform& t) {
  Analytic<Mat2> w = a_inv(a_transpose(guarded(t.seeds.u)));
  const DiracHamiltonian h1 = t.h1();

  auto make = [&](int j, double energy, const char* label) {
    SeedSolution s;
    s.energy = energy;
    s.fun = a_column(w, j);
    s.bounded = window_bounded(s.fun, t.seeds.grid);
    s.label = label;
    const double res = eigen_residual(h1, s.sample(t.seeds.grid), energy);
    if (res > 1e-8)
      throw SeedNotEigen("kernel_spinors_h1: column " + std::to_string(j) +
                         " fails its eigen-residual against h1 (" + std::to_string(res) + ")");
    return s;
  };

  return {make(0, t.eps1(), "kernel spinor of h1 at eps1"),
          make(1, t.eps2(), "kernel spinor of h1 at eps2")};
}

DarbouxTransform chain(const DarbouxTransform& t, const SeedSolution& s1,
                       const SeedSolution& s2) {
  return make_darboux_transform(s1, s2, t.h1(), t.seeds.grid);
}

}  // namespace ddx
