#ifndef DDX_SEEDS_HPP
#define DDX_SEEDS_HPP

#include <string>
#include <vector>

#include "ddx/hamiltonian.hpp"

namespace ddx {

/// Eigenspinor of a Dirac Hamiltonian with its energy and exact evaluators.
/// Seeds are allowed to be unbounded; the flag is informational.
struct SeedSolution {
  double energy = 0.0;
  Analytic<Spinor2> fun;  // value + derivative chain
  bool bounded = false;
  std::string label;

  Spinor2 operator()(double x) const { return fun.eval(x); }
  Spinor2 derivative(double x) const { return fun.deriv->eval(x); }

  SpinorField sample(const GridSpec& grid) const { return SpinorField(grid, fun); }

  /// Trapezoid L2 norm on a grid; reported, never imposed.
  double l2_norm(const GridSpec& grid) const;
};

/// Reference grids used for seed validation and the verification suites.
GridSpec free_reference_grid();     // [-5, 5], 2001 nodes
GridSpec coulomb_reference_grid();  // [0.05, 15], 2001 nodes

// ---------------------------------------------------------------- free model

/// Parameters of the hyperbolic free-particle seed pair. Constraints:
/// m > 0, 0 < |E| < m and |c| < k/E with k = sqrt(m^2 - E^2) (the last
/// one also forces E > 0; it keeps det u nodeless).
struct FreeSeedParams {
  double m;
  double E;
  double c;

  void validate() const;
  double k() const;          // sqrt(m^2 - E^2)
  double two_alpha() const;  // log sqrt((m-k)/(m+k))
};

/// The pair (u1 at energy +E, u2 at energy -E) with exact derivatives.
std::pair<SeedSolution, SeedSolution> free_seed_pair(const FreeSeedParams& p);

// ------------------------------------------------------------- Coulomb model

enum class Branch { Plus, Minus };

inline int branch_sign(Branch b) { return b == Branch::Plus ? +1 : -1; }

/// One level of the generalized Coulomb spectrum. E is the closed-form
/// energy for (n, branch); lambda = sqrt(M^2 - E^2). The quantization
/// round-trip recovers n from (E, lambda) whenever lambda > 0; its residual
/// is recorded here (NaN for the degenerate lambda = 0 level).
struct CoulombLevel {
  CoulombParams params;
  int n = 0;
  Branch branch = Branch::Plus;
  double mu = 0.0;
  double lambda = 0.0;
  double E = 0.0;
  double roundtrip_residual = 0.0;

  bool degenerate() const;       // lambda ~ 0
  bool roundtrip_valid() const;  // residual <= 1e-9 (degenerate levels pass)
};

/// Closed-form energy of level (n, branch). With validate = true a failed
/// round-trip raises BranchInvalid; with validate = false the level is
/// returned with its residual for inspection (spectrum tables).
CoulombLevel coulomb_energy(const CoulombParams& p, int n, Branch branch,
                            bool validate = true);

/// Bound-type solution of the generalized Coulomb problem at a given level,
/// built from terminating Kummer polynomials, with exact derivatives.
/// Requires lambda > 0 and a level whose closed form really solves the
/// equation; the constructor verifies the eigen-residual on the reference
/// grid and raises InvalidLevel otherwise (the n = 0 level must use
/// coulomb_seed_pair_simplified).
SeedSolution coulomb_solution(const CoulombLevel& level);

/// The (n = 0, n = 1) seed pair in the compact two-coefficient form. The
/// branch defaults (+, -) reproduce the standard choice; c1 and the product
/// c1*c3 are kept as independent quantities because c1 can vanish while
/// c1*c3 stays finite. Existence of both levels for the given parameters is
/// verified by eigen-residual.
std::pair<SeedSolution, SeedSolution> coulomb_seed_pair_simplified(
    const CoulombParams& p, Branch branch0 = Branch::Plus, Branch branch1 = Branch::Minus);

// ------------------------------------------------------------ ODE integration

/// Integrate h psi = E psi as the first-order system psi' = J (v - E) psi
/// with classical fixed-step RK4 from grid.x_min, starting at psi0.
/// The result carries no analytic evaluator. Blow-up beyond 1e150 raises
/// OverflowError.
SpinorField shooting_solve(const DiracHamiltonian& h, double energy, Spinor2 psi0,
                           const GridSpec& grid);

// ------------------------------------------------- analytic building blocks

/// A*cosh(k x + s) + B*sinh(k x + s); closed under differentiation.
struct HyperbolicTerm {
  double k = 1.0;
  double shift = 0.0;
  double ch = 0.0;
  double sh = 0.0;

  double operator()(double x) const;
  HyperbolicTerm derivative() const;
};

/// x^mu e^(-lambda x) p(x) with polynomial p; closed under differentiation
/// (mu drops by one, p picks up degree-preserving terms).
struct ExpPowPoly {
  double mu = 0.0;
  double lambda = 0.0;
  std::vector<double> coeffs{1.0};  // p(x) = sum coeffs[j] x^j

  double operator()(double x) const;
  ExpPowPoly derivative() const;
};

Analytic<Spinor2> hyperbolic_spinor(const HyperbolicTerm& c1, const HyperbolicTerm& c2,
                                    int depth = 4);
Analytic<Spinor2> exp_pow_poly_spinor(const ExpPowPoly& c1, const ExpPowPoly& c2,
                                      int depth = 4);

}  // namespace ddx

#endif  // DDX_SEEDS_HPP
