#include "ddx/field.hpp"

namespace ddx {

Analytic<Spinor2> a_apply(const Analytic<Mat2>& m, const Analytic<Spinor2>& v) {
  Analytic<Spinor2> r;
  r.eval = [me = m.eval, ve = v.eval](double x) { return me(x) * ve(x); };
  if (m.deriv && v.deriv) {
    r.deriv = std::make_shared<const Analytic<Spinor2>>(
        a_add(a_apply(*m.deriv, v), a_apply(m, *v.deriv)));
  }
  return r;
}

Analytic<Mat2> a_mul(const Analytic<Mat2>& a, const Analytic<Mat2>& b) {
  Analytic<Mat2> r;
  r.eval = [ae = a.eval, be = b.eval](double x) { return ae(x) * be(x); };
  if (a.deriv && b.deriv) {
    r.deriv = std::make_shared<const Analytic<Mat2>>(
        a_add(a_mul(*a.deriv, b), a_mul(a, *b.deriv)));
  }
  return r;
}

Analytic<Mat2> a_inv(const Analytic<Mat2>& a) {
  Analytic<Mat2> r;
  r.eval = [ae = a.eval](double x) { return mat2_inv(ae(x)); };
  if (a.deriv) {
    // (A^-1)' = -A^-1 A' A^-1. The recursion consumes one chain link per
    // level, so the inverse built from the shortened chain terminates it.
    Analytic<Mat2> inv_lower = a_inv(a_drop_last(a));
    r.deriv = std::make_shared<const Analytic<Mat2>>(
        a_scale(a_mul(a_mul(inv_lower, *a.deriv), inv_lower), -1.0));
  }
  return r;
}

Analytic<Spinor2> a_apply_const(const Mat2& m, const Analytic<Spinor2>& v) {
  Analytic<Spinor2> r;
  r.eval = [m, ve = v.eval](double x) { return m * ve(x); };
  if (v.deriv)
    r.deriv = std::make_shared<const Analytic<Spinor2>>(a_apply_const(m, *v.deriv));
  return r;
}

Analytic<Mat2> a_mul_const(const Mat2& m, const Analytic<Mat2>& a) {
  Analytic<Mat2> r;
  r.eval = [m, ae = a.eval](double x) { return m * ae(x); };
  if (a.deriv)
    r.deriv = std::make_shared<const Analytic<Mat2>>(a_mul_const(m, *a.deriv));
  return r;
}

Analytic<Mat2> a_mul_const_right(const Analytic<Mat2>& a, const Mat2& m) {
  Analytic<Mat2> r;
  r.eval = [m, ae = a.eval](double x) { return ae(x) * m; };
  if (a.deriv)
    r.deriv = std::make_shared<const Analytic<Mat2>>(a_mul_const_right(*a.deriv, m));
  return r;
}

Analytic<Mat2> a_transpose(const Analytic<Mat2>& a) {
  Analytic<Mat2> r;
  r.eval = [ae = a.eval](double x) { return ae(x).transpose(); };
  if (a.deriv)
    r.deriv = std::make_shared<const Analytic<Mat2>>(a_transpose(*a.deriv));
  return r;
}

Analytic<Spinor2> a_column(const Analytic<Mat2>& a, int j) {
  Analytic<Spinor2> r;
  r.eval = [ae = a.eval, j](double x) {
    const Mat2 m = ae(x);
    return j == 0 ? Spinor2{m.a11, m.a21} : Spinor2{m.a12, m.a22};
  };
  if (a.deriv)
    r.deriv = std::make_shared<const Analytic<Spinor2>>(a_column(*a.deriv, j));
  return r;
}

Analytic<Mat2> a_const(const Mat2& value, int depth) {
  Analytic<Mat2> r;
  r.eval = [value](double) { return value; };
  if (depth > 0)
    r.deriv = std::make_shared<const Analytic<Mat2>>(a_const(kZero, depth - 1));
  return r;
}

Analytic<Spinor2> a_const(const Spinor2& value, int depth) {
  Analytic<Spinor2> r;
  r.eval = [value](double) { return value; };
  if (depth > 0)
    r.deriv = std::make_shared<const Analytic<Spinor2>>(a_const(Spinor2{0.0, 0.0}, depth - 1));
  return r;
}

int fd_order(DerivMode mode) { return mode == DerivMode::Fd4 ? 4 : 2; }

int fd_margin(int order, int depth) {
  // central stencil reach is order/2 per application; one extra node of slack
  return depth * (order / 2 + 1) + 2;
}

namespace {

template <class T>
T stencil5(const std::vector<T>& v, int i0, double c0, double c1, double c2,
           double c3, double c4) {
  return v[i0] * c0 + v[i0 + 1] * c1 + v[i0 + 2] * c2 + v[i0 + 3] * c3 + v[i0 + 4] * c4;
}

}  // namespace

template <class T>
SampledField<T> fd_derivative(const SampledField<T>& f, int order) {
  if (order != 2 && order != 4)
    throw InvalidParams("fd_derivative: order must be 2 or 4");
  const GridSpec& g = f.grid();
  const int n = g.n_points;
  if (n < 9) throw GridTooSmall("fd_derivative: need at least 9 nodes");
  const double h = g.spacing();
  const auto& v = f.values();
  std::vector<T> d(n);

  if (order == 2) {
    const double i2h = 1.0 / (2.0 * h);
    d[0] = (v[0] * -3.0 + v[1] * 4.0 + v[2] * -1.0) * i2h;
    for (int i = 1; i < n - 1; ++i) d[i] = (v[i + 1] - v[i - 1]) * i2h;
    d[n - 1] = (v[n - 1] * 3.0 + v[n - 2] * -4.0 + v[n - 3] * 1.0) * i2h;
  } else {
    const double i12h = 1.0 / (12.0 * h);
    d[0] = stencil5(v, 0, -25.0, 48.0, -36.0, 16.0, -3.0) * i12h;
    d[1] = stencil5(v, 0, -3.0, -10.0, 18.0, -6.0, 1.0) * i12h;
    for (int i = 2; i < n - 2; ++i)
      d[i] = (v[i - 2] - v[i + 2] + (v[i + 1] - v[i - 1]) * 8.0) * i12h;
    d[n - 2] = stencil5(v, n - 5, -1.0, 6.0, -18.0, 10.0, 3.0) * i12h;
    d[n - 1] = stencil5(v, n - 5, 3.0, -16.0, 36.0, -48.0, 25.0) * i12h;
  }
  return SampledField<T>(g, std::move(d));
}

template SampledField<Mat2> fd_derivative(const SampledField<Mat2>&, int);
template SampledField<Spinor2> fd_derivative(const SampledField<Spinor2>&, int);

}  // namespace ddx
