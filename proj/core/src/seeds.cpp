#include "ddx/seeds.hpp"

#include <cmath>
#include <utility>

#include "ddx/kummer.hpp"

namespace ddx {

double SeedSolution::l2_norm(const GridSpec& grid) const {
  const double h = grid.spacing();
  double acc = 0.0;
  for (int i = 0; i < grid.n_points; ++i) {
    const Spinor2 v = fun.eval(grid.node(i));
    const double w = (i == 0 || i == grid.n_points - 1) ? 0.5 : 1.0;
    acc += w * (v.c1 * v.c1 + v.c2 * v.c2);
  }
  return std::sqrt(acc * h);
}

GridSpec free_reference_grid() { return GridSpec(-5.0, 5.0, 2001); }
GridSpec coulomb_reference_grid() { return GridSpec(0.05, 15.0, 2001); }

// ---------------------------------------------------------------- free model

void FreeSeedParams::validate() const {
  if (!(m > 0.0)) throw InvalidParams("FreeSeedParams: m must be positive");
  if (!(std::abs(E) > 0.0 && std::abs(E) < m))
    throw InvalidParams("FreeSeedParams: need 0 < |E| < m");
  if (!(std::abs(c) < k() / E))
    throw InvalidParams("FreeSeedParams: need |c| < k/E (and hence E > 0)");
}

double FreeSeedParams::k() const { return std::sqrt(m * m - E * E); }

double FreeSeedParams::two_alpha() const {
  const double kk = k();
  return 0.5 * std::log((m - kk) / (m + kk));
}

double HyperbolicTerm::operator()(double x) const {
  return ch * std::cosh(k * x + shift) + sh * std::sinh(k * x + shift);
}

HyperbolicTerm HyperbolicTerm::derivative() const {
  return {k, shift, k * sh, k * ch};
}

Analytic<Spinor2> hyperbolic_spinor(const HyperbolicTerm& c1, const HyperbolicTerm& c2,
                                    int depth) {
  Analytic<Spinor2> r;
  r.eval = [c1, c2](double x) { return Spinor2{c1(x), c2(x)}; };
  if (depth > 0)
    r.deriv = std::make_shared<const Analytic<Spinor2>>(
        hyperbolic_spinor(c1.derivative(), c2.derivative(), depth - 1));
  return r;
}

std::pair<SeedSolution, SeedSolution> free_seed_pair(const FreeSeedParams& p) {
  p.validate();
  const double k = p.k();
  const double ta = p.two_alpha();
  const double r = p.c * p.E / k;

  SeedSolution u1;
  u1.energy = p.E;
  u1.fun = hyperbolic_spinor({k, 0.0, 1.0, r}, {k, ta, 1.0, r});
  u1.bounded = false;
  u1.label = "free seed u1";

  SeedSolution u2;
  u2.energy = -p.E;
  u2.fun = hyperbolic_spinor({k, 0.0, -1.0, 0.0}, {k, ta, 1.0, 0.0});
  u2.bounded = false;
  u2.label = "free seed u2";

  return {std::move(u1), std::move(u2)};
}

// ------------------------------------------------------------- Coulomb model

namespace {
constexpr double kRoundTripTol = 1e-9;
constexpr double kSeedResidualTol = 1e-9;
}  // namespace

bool CoulombLevel::degenerate() const {
  return std::abs(lambda) <= 1e-10 * params.M;
}

bool CoulombLevel::roundtrip_valid() const {
  return degenerate() || roundtrip_residual <= kRoundTripTol;
}

CoulombLevel coulomb_energy(const CoulombParams& p, int n, Branch branch, bool validate) {
  p.validate();
  if (n < 0) throw InvalidParams("coulomb_energy: n must be non-negative");

  CoulombLevel lv;
  lv.params = p;
  lv.n = n;
  lv.branch = branch;
  lv.mu = p.mu();

  const double nm = n + lv.mu;
  const double disc = p.alpha * p.alpha + nm * nm - p.beta * p.beta;
  if (disc < 0.0)
    throw InvalidParams("coulomb_energy: alpha^2 + (n+mu)^2 - beta^2 < 0");

  const double denom = p.alpha * p.alpha + nm * nm;
  lv.E = p.M * (-p.alpha * p.beta + branch_sign(branch) * nm * std::sqrt(disc)) / denom;
  lv.lambda = std::sqrt(std::max(0.0, p.M * p.M - lv.E * lv.E));

  if (lv.degenerate()) {
    lv.roundtrip_residual = std::numeric_limits<double>::quiet_NaN();
  } else {
    const double n_rt = -(p.alpha * lv.E / lv.lambda + p.beta * p.M / lv.lambda + lv.mu);
    lv.roundtrip_residual = std::abs(n_rt - n);
    if (validate && lv.roundtrip_residual > kRoundTripTol)
      throw BranchInvalid("coulomb_energy: branch fails the quantization round-trip (residual " +
                          std::to_string(lv.roundtrip_residual) + ")");
  }
  return lv;
}

double ExpPowPoly::operator()(double x) const {
  double p = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * x + *it;
  return std::pow(x, mu) * std::exp(-lambda * x) * p;
}

ExpPowPoly ExpPowPoly::derivative() const {
  // d/dx [x^mu e^(-l x) p] = x^(mu-1) e^(-l x) [(mu + j) p_j - l p_(j-1)]_j
  ExpPowPoly d;
  d.mu = mu - 1.0;
  d.lambda = lambda;
  d.coeffs.assign(coeffs.size() + 1, 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    d.coeffs[j] += (mu + j) * coeffs[j];
    d.coeffs[j + 1] -= lambda * coeffs[j];
  }
  while (d.coeffs.size() > 1 && d.coeffs.back() == 0.0) d.coeffs.pop_back();
  return d;
}

Analytic<Spinor2> exp_pow_poly_spinor(const ExpPowPoly& c1, const ExpPowPoly& c2,
                                      int depth) {
  Analytic<Spinor2> r;
  r.eval = [c1, c2](double x) { return Spinor2{c1(x), c2(x)}; };
  if (depth > 0)
    r.deriv = std::make_shared<const Analytic<Spinor2>>(
        exp_pow_poly_spinor(c1.derivative(), c2.derivative(), depth - 1));
  return r;
}

namespace {

// coefficients of 1F1(-n, b; s*x) as a polynomial in x, degree n
std::vector<double> kummer_poly_coeffs(int n, double b, double s) {
  std::vector<double> c(n + 1, 0.0);
  double t = 1.0;
  c[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    t *= (-n + j) * s / ((b + j) * (j + 1));
    c[j + 1] = t;
  }
  return c;
}

std::vector<double> add_scaled(const std::vector<double>& a, double fa,
                               const std::vector<double>& b, double fb) {
  std::vector<double> r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += fa * a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += fb * b[i];
  return r;
}

double poly_max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

SeedSolution coulomb_solution(const CoulombLevel& level) {
  if (level.degenerate())
    throw InvalidLevel(
        "coulomb_solution: lambda = 0 level is degenerate; use coulomb_seed_pair_simplified");
  const CoulombParams& p = level.params;
  const int n = level.n;
  const double lam = level.lambda;
  const double b = 2.0 * level.mu + 1.0;
  const double C = -p.k + (p.alpha * p.M + p.beta * level.E) / lam;

  // polynomial parts of the two components, in powers of x
  std::vector<double> f_n = kummer_poly_coeffs(n, b, 2.0 * lam);
  std::vector<double> f_n1 =
      n >= 1 ? kummer_poly_coeffs(n - 1, b, 2.0 * lam) : std::vector<double>{0.0};
  std::vector<double> p1 = add_scaled(f_n1, -static_cast<double>(n), f_n, -C);
  const double s2 = -lam / (p.M + level.E);
  std::vector<double> p2 = add_scaled(f_n1, -static_cast<double>(n) * s2, f_n, C * s2);

  const double scale = std::max(poly_max_abs(p1), poly_max_abs(p2));
  if (scale <= 1e-14 * std::max(1.0, std::abs(C)))
    throw InvalidLevel(
        "coulomb_solution: closed form degenerates identically at this level/branch; "
        "use coulomb_seed_pair_simplified");

  SeedSolution s;
  s.energy = level.E;
  s.fun = exp_pow_poly_spinor({level.mu, lam, std::move(p1)}, {level.mu, lam, std::move(p2)});
  s.bounded = true;
  s.label = "coulomb solution n = " + std::to_string(n);

  DiracHamiltonian h{coulomb_potential(p)};
  const double res = eigen_residual(h, s.sample(coulomb_reference_grid()), s.energy);
  if (res > kSeedResidualTol)
    throw InvalidLevel("coulomb_solution: closed form fails the eigen-residual check (" +
                       std::to_string(res) + "); invalid level/branch combination");
  return s;
}

std::pair<SeedSolution, SeedSolution> coulomb_seed_pair_simplified(const CoulombParams& p,
                                                                   Branch branch0,
                                                                   Branch branch1) {
  p.validate();
  if (p.alpha == p.beta)
    throw InvalidParams("coulomb_seed_pair_simplified: alpha == beta makes c1 singular");

  const CoulombLevel l0 = coulomb_energy(p, 0, branch0, /*validate=*/false);
  const CoulombLevel l1 = coulomb_energy(p, 1, branch1, /*validate=*/false);
  const double mu = l0.mu;
  const double c1 = (mu - p.k) / (p.alpha - p.beta);
  const double c2 =
      l1.lambda / (1.0 + 2.0 * mu) + (l1.E + p.M) * c1 / (1.0 + 2.0 * mu);
  // c1*c3 assembled directly so it stays finite when c1 = 0
  const double c1c3 = (c1 * l1.lambda + p.M - l1.E) / (1.0 + 2.0 * mu);

  SeedSolution u1;
  u1.energy = l0.E;
  u1.fun = exp_pow_poly_spinor({mu, l0.lambda, {1.0}}, {mu, l0.lambda, {c1}});
  u1.bounded = l0.lambda > 0.0 && !l0.degenerate();
  u1.label = "coulomb simplified seed n = 0";

  SeedSolution u2;
  u2.energy = l1.E;
  u2.fun = exp_pow_poly_spinor({mu, l1.lambda, {1.0, -c2}}, {mu, l1.lambda, {c1, -c1c3}});
  u2.bounded = l1.lambda > 0.0 && !l1.degenerate();
  u2.label = "coulomb simplified seed n = 1";

  DiracHamiltonian h{coulomb_potential(p)};
  const GridSpec ref = coulomb_reference_grid();
  const double r0 = eigen_residual(h, u1.sample(ref), u1.energy);
  const double r1 = eigen_residual(h, u2.sample(ref), u2.energy);
  if (r0 > kSeedResidualTol || r1 > kSeedResidualTol)
    throw InvalidParams(
        "coulomb_seed_pair_simplified: the n = 0 / n = 1 levels do not exist for these "
        "parameters and branches (eigen residuals " +
        std::to_string(r0) + ", " + std::to_string(r1) + ")");

  return {std::move(u1), std::move(u2)};
}

// ------------------------------------------------------------ ODE integration

SpinorField shooting_solve(const DiracHamiltonian& h, double energy, Spinor2 psi0,
                           const GridSpec& grid) {
  h.domain().require(grid, "shooting_solve");
  constexpr double kOverflow = 1e150;

  const auto& v = h.potential;
  auto rhs = [&v, energy](double x, const Spinor2& s) {
    Mat2 m = v(x);
    m.a11 -= energy;
    m.a22 -= energy;
    return kJ * (m * s);
  };

  const double hstep = grid.spacing();
  std::vector<Spinor2> out(grid.n_points);
  out[0] = psi0;
  Spinor2 y = psi0;
  for (int i = 1; i < grid.n_points; ++i) {
    const double x = grid.node(i - 1);
    const Spinor2 k1 = rhs(x, y);
    const Spinor2 k2 = rhs(x + 0.5 * hstep, y + k1 * (0.5 * hstep));
    const Spinor2 k3 = rhs(x + 0.5 * hstep, y + k2 * (0.5 * hstep));
    const Spinor2 k4 = rhs(x + hstep, y + k3 * hstep);
    y += (k1 + (k2 + k3) * 2.0 + k4) * (hstep / 6.0);
    if (y.max_norm() > kOverflow)
      throw OverflowError("shooting_solve: solution exceeded 1e150 near x = " +
                          std::to_string(grid.node(i)));
    out[i] = y;
  }
  return SpinorField(grid, std::move(out));
}

}  // namespace ddx
