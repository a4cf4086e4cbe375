#ifndef DDX_DARBOUX_HPP
#define DDX_DARBOUX_HPP

#include <utility>

#include "ddx/seeds.hpp"

namespace ddx {

/// Matrix of seed eigenspinors u = (u1, u2) with lambda = diag(eps1, eps2),
/// validated against its Hamiltonian on a working grid: both columns solve
/// h0 u_j = eps_j u_j and det u is nodeless there.
struct SeedMatrix {
  SeedSolution seed1;
  SeedSolution seed2;
  Mat2 lambda;        // diag(eps1, eps2), caller order preserved
  Analytic<Mat2> u;   // columns (u1, u2), derivative chain from the seeds
  DiracHamiltonian h0;
  GridSpec grid;      // grid the invariants were validated on

  double eps1() const { return lambda.a11; }
  double eps2() const { return lambda.a22; }
};

/// Validates and assembles the seed matrix. Throws DegenerateSeeds when
/// eps1 == eps2, SeedNotEigen when a column fails its eigen-residual, and
/// SingularSeedMatrix (with the offending x) when det u vanishes at a node.
SeedMatrix build_seed_matrix(const SeedSolution& s1, const SeedSolution& s2,
                             const DiracHamiltonian& h0, const GridSpec& grid);

/// sigma(x) = J (u lambda u^-1 - v0(x)): the derivative-free route. Exact
/// at any point, which is what makes the partner potential a closure.
Analytic<Mat2> sigma_analytic(const SeedMatrix& u);

/// sigma(x) = -u_x u^-1, the defining route; used as a cross-check of
/// sigma_analytic, not as the default.
Analytic<Mat2> sigma_direct(const SeedMatrix& u);

/// Partner potential evaluating the determinant form
///   v1 = -J v0 J + (eps1 - eps2)/det(u) * [[d1, d2], [d2, -d1]],
/// d1 = u11 u22 + u12 u21, d2 = u21 u22 - u11 u12. Symmetric by
/// construction. Evaluation outside the validated grid re-checks det u
/// locally and throws SingularSeedMatrix at the offending point.
Potential partner_potential(const SeedMatrix& u);

/// The assembled first-order transformation L = d/dx + sigma between h0 and
/// h1 = J d/dx + v1. Immutable; applications are pure.
struct DarbouxTransform {
  SeedMatrix seeds;
  Analytic<Mat2> sigma;
  Potential v1;

  double eps1() const { return seeds.eps1(); }
  double eps2() const { return seeds.eps2(); }
  const DiracHamiltonian& h0() const { return seeds.h0; }
  DiracHamiltonian h1() const { return DiracHamiltonian{v1}; }
};

/// Builds the transform and certifies that L annihilates both seeds on the
/// working grid.
DarbouxTransform make_darboux_transform(const SeedMatrix& u);

DarbouxTransform make_darboux_transform(const SeedSolution& s1, const SeedSolution& s2,
                                        const DiracHamiltonian& h0, const GridSpec& grid);

/// L psi = psi' + sigma psi. Analytic path when available, finite
/// differences of the mode's order otherwise.
SpinorField apply_L(const DarbouxTransform& t, const SpinorField& psi,
                    DerivMode mode = DerivMode::Analytic);
Analytic<Spinor2> apply_L(const DarbouxTransform& t, const Analytic<Spinor2>& psi);

/// Adjoint action L^dag psi = -psi' + sigma^T psi (sigma is real).
SpinorField apply_L_dagger(const DarbouxTransform& t, const SpinorField& psi,
                           DerivMode mode = DerivMode::Analytic);
Analytic<Spinor2> apply_L_dagger(const DarbouxTransform& t, const Analytic<Spinor2>& psi);

/// Kernel spinors of h1: the columns of (u^T)^-1 at energies eps1, eps2.
/// Each is certified by its eigen-residual against h1 on the working grid.
std::pair<SeedSolution, SeedSolution> kernel_spinors_h1(const DarbouxTransform& t);

/// Iterate the construction with h1 as the new starting Hamiltonian. The
/// supplied seeds must be eigen-solutions of h1 (validated); chaining with
/// the kernel spinors of h1 inverts the transform.
DarbouxTransform chain(const DarbouxTransform& t, const SeedSolution& s1,
                       const SeedSolution& s2);

}  // namespace ddx

#endif  // DDX_DARBOUX_HPP
