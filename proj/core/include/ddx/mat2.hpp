#ifndef DDX_MAT2_HPP
#define DDX_MAT2_HPP

#include <algorithm>
#include <cmath>

#include "ddx/errors.hpp"

namespace ddx {

/// Real 2x2 matrix. The whole algebra of the library lives here:
/// potentials, seed matrices, transformation coefficients.
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  constexpr Mat2() = default;
  constexpr Mat2(double m11, double m12, double m21, double m22)
      : a11(m11), a12(m12), a21(m21), a22(m22) {}

  constexpr double det() const { return a11 * a22 - a12 * a21; }
  constexpr double trace() const { return a11 + a22; }

  constexpr Mat2 transpose() const { return {a11, a21, a12, a22}; }

  double max_norm() const {
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
  }

  bool finite() const {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) &&
           std::isfinite(a22);
  }

  constexpr Mat2& operator+=(const Mat2& o) {
    a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
    return *this;
  }
  constexpr Mat2& operator-=(const Mat2& o) {
    a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
    return *this;
  }
  constexpr Mat2& operator*=(double s) {
    a11 *= s; a12 *= s; a21 *= s; a22 *= s;
    return *this;
  }
};

constexpr Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
constexpr Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
constexpr Mat2 operator*(Mat2 a, double s) { return a *= s; }
constexpr Mat2 operator*(double s, Mat2 a) { return a *= s; }
constexpr Mat2 operator-(const Mat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }

constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

/// Two-component spinor value at a point.
struct Spinor2 {
  double c1 = 0.0;
  double c2 = 0.0;

  constexpr Spinor2() = default;
  constexpr Spinor2(double a, double b) : c1(a), c2(b) {}

  double max_norm() const { return std::max(std::abs(c1), std::abs(c2)); }
  bool finite() const { return std::isfinite(c1) && std::isfinite(c2); }

  constexpr Spinor2& operator+=(const Spinor2& o) {
    c1 += o.c1; c2 += o.c2;
    return *this;
  }
  constexpr Spinor2& operator-=(const Spinor2& o) {
    c1 -= o.c1; c2 -= o.c2;
    return *this;
  }
  constexpr Spinor2& operator*=(double s) {
    c1 *= s; c2 *= s;
    return *this;
  }
};

constexpr Spinor2 operator+(Spinor2 a, const Spinor2& b) { return a += b; }
constexpr Spinor2 operator-(Spinor2 a, const Spinor2& b) { return a -= b; }
constexpr Spinor2 operator*(Spinor2 a, double s) { return a *= s; }
constexpr Spinor2 operator*(double s, Spinor2 a) { return a *= s; }
constexpr Spinor2 operator-(const Spinor2& a) { return {-a.c1, -a.c2}; }

constexpr Spinor2 operator*(const Mat2& m, const Spinor2& v) {
  return {m.a11 * v.c1 + m.a12 * v.c2, m.a21 * v.c1 + m.a22 * v.c2};
}

// Constant matrices. All arithmetic in the library is real: the equation's
// i*sigma2 is stored as the real matrix J = [[0,1],[-1,0]], which satisfies
// J*J = -I exactly. sigma2 itself (complex) never appears.
inline constexpr Mat2 kIdentity{1.0, 0.0, 0.0, 1.0};
inline constexpr Mat2 kJ{0.0, 1.0, -1.0, 0.0};
inline constexpr Mat2 kSigma1{0.0, 1.0, 1.0, 0.0};
inline constexpr Mat2 kSigma3{1.0, 0.0, 0.0, -1.0};
inline constexpr Mat2 kZero{0.0, 0.0, 0.0, 0.0};

/// Inverse with a scale-relative singularity threshold: |det| must exceed
/// 1e-12 * max(1, ||m||_inf^2). The threshold is relative because seed
/// determinants can grow like x^(2*mu) without being singular.
inline Mat2 mat2_inv(const Mat2& m) {
  const double d = m.det();
  const double scale = std::max(1.0, m.max_norm() * m.max_norm());
  if (std::abs(d) <= 1e-12 * scale) {
    throw SingularMatrix("mat2_inv: determinant " + std::to_string(d) +
                         " below singularity threshold");
  }
  const double inv_d = 1.0 / d;
  return {m.a22 * inv_d, -m.a12 * inv_d, -m.a21 * inv_d, m.a11 * inv_d};
}

/// Commutator [a, b] = ab - ba.
constexpr Mat2 commutator(const Mat2& a, const Mat2& b) {
  return a * b - b * a;
}

}  // namespace ddx

#endif  // DDX_MAT2_HPP
