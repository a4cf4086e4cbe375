#ifndef DDX_FIELD_HPP
#define DDX_FIELD_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ddx/errors.hpp"
#include "ddx/mat2.hpp"

namespace ddx {

/// Uniform 1D grid on [x_min, x_max] with n_points nodes.
struct GridSpec {
  double x_min;
  double x_max;
  int n_points;

  GridSpec(double lo, double hi, int n) : x_min(lo), x_max(hi), n_points(n) {
    if (!(lo < hi)) throw InvalidParams("GridSpec: x_min must be < x_max");
    if (n < 9) throw GridTooSmall("GridSpec: need at least 9 nodes");
  }

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double node(int i) const { return x_min + i * spacing(); }
  bool operator==(const GridSpec& o) const {
    return x_min == o.x_min && x_max == o.x_max && n_points == o.n_points;
  }
};

/// Evaluator with an optional chain of exact derivatives. Operators built
/// from Analytic inputs propagate the chain as deep as the inputs allow, so
/// composed quantities (h psi, L psi, ...) stay exactly differentiable.
template <class T>
struct Analytic {
  std::function<T(double)> eval;
  std::shared_ptr<const Analytic<T>> deriv;  // null when no exact derivative

  T operator()(double x) const { return eval(x); }
  bool has_deriv() const { return deriv != nullptr; }

  /// Number of exact derivatives available on the chain.
  int depth() const {
    int d = 0;
    for (auto p = deriv; p; p = p->deriv) ++d;
    return d;
  }
};

template <class T>
Analytic<T> make_analytic(std::function<T(double)> f) {
  return {std::move(f), nullptr};
}

template <class T>
Analytic<T> make_analytic(std::function<T(double)> f, Analytic<T> df) {
  return {std::move(f), std::make_shared<const Analytic<T>>(std::move(df))};
}

// ---- combinators: each result carries the deepest derivative chain the
// ---- inputs support (sum, product and matrix-action rules).

template <class T>
Analytic<T> a_add(const Analytic<T>& a, const Analytic<T>& b) {
  Analytic<T> r;
  r.eval = [ae = a.eval, be = b.eval](double x) { return ae(x) + be(x); };
  if (a.deriv && b.deriv)
    r.deriv = std::make_shared<const Analytic<T>>(a_add(*a.deriv, *b.deriv));
  return r;
}

template <class T>
Analytic<T> a_sub(const Analytic<T>& a, const Analytic<T>& b) {
  Analytic<T> r;
  r.eval = [ae = a.eval, be = b.eval](double x) { return ae(x) - be(x); };
  if (a.deriv && b.deriv)
    r.deriv = std::make_shared<const Analytic<T>>(a_sub(*a.deriv, *b.deriv));
  return r;
}

template <class T>
Analytic<T> a_scale(const Analytic<T>& a, double s) {
  Analytic<T> r;
  r.eval = [ae = a.eval, s](double x) { return ae(x) * s; };
  if (a.deriv)
    r.deriv = std::make_shared<const Analytic<T>>(a_scale(*a.deriv, s));
  return r;
}

/// Matrix-times-spinor with the product rule on the chain.
Analytic<Spinor2> a_apply(const Analytic<Mat2>& m, const Analytic<Spinor2>& v);

/// Matrix-times-matrix with the product rule on the chain.
Analytic<Mat2> a_mul(const Analytic<Mat2>& a, const Analytic<Mat2>& b);

/// Pointwise inverse; derivative -A^-1 A' A^-1 recursively.
Analytic<Mat2> a_inv(const Analytic<Mat2>& a);

/// Constant-matrix action J*v etc.
Analytic<Spinor2> a_apply_const(const Mat2& m, const Analytic<Spinor2>& v);
Analytic<Mat2> a_mul_const(const Mat2& m, const Analytic<Mat2>& a);
Analytic<Mat2> a_mul_const_right(const Analytic<Mat2>& a, const Mat2& m);

/// Pointwise transpose (chain passes through).
Analytic<Mat2> a_transpose(const Analytic<Mat2>& a);

/// Column j (0 or 1) of a matrix function as a spinor function.
Analytic<Spinor2> a_column(const Analytic<Mat2>& a, int j);

/// Constant function of the requested chain depth (all derivatives zero).
Analytic<Mat2> a_const(const Mat2& value, int depth = 3);
Analytic<Spinor2> a_const(const Spinor2& value, int depth = 3);

/// The derivative as a standalone Analytic (shifts the chain by one).
template <class T>
Analytic<T> a_deriv(const Analytic<T>& a) {
  if (!a.deriv) throw Error("a_deriv: no analytic derivative on the chain");
  return *a.deriv;
}

/// Copy with the deepest chain link removed (depth reduced by one).
template <class T>
Analytic<T> a_drop_last(const Analytic<T>& a) {
  Analytic<T> r;
  r.eval = a.eval;
  if (a.deriv && a.deriv->deriv)
    r.deriv = std::make_shared<const Analytic<T>>(a_drop_last(*a.deriv));
  return r;
}

/// Matrix- or spinor-valued function sampled on a uniform grid, optionally
/// carrying the analytic evaluator it was sampled from.
template <class T>
class SampledField {
public:
  SampledField(GridSpec grid, std::vector<T> values)
      : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.n_points)
      throw InvalidParams("SampledField: values length != n_points");
  }

  SampledField(GridSpec grid, Analytic<T> fun) : grid_(grid), analytic_(std::move(fun)) {
    values_.reserve(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) values_.push_back(analytic_->eval(grid.node(i)));
  }

  const GridSpec& grid() const { return grid_; }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](int i) const { return values_[i]; }
  int size() const { return grid_.n_points; }

  bool has_analytic() const { return analytic_.has_value(); }
  bool has_analytic_deriv() const { return analytic_ && analytic_->has_deriv(); }
  const Analytic<T>& analytic() const { return *analytic_; }

  double max_norm() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, v.max_norm());
    return m;
  }

  /// Max norm over nodes [margin, n-1-margin].
  double max_norm_interior(int margin) const {
    double m = 0.0;
    for (int i = margin; i < size() - margin; ++i) m = std::max(m, values_[i].max_norm());
    return m;
  }

private:
  GridSpec grid_;
  std::vector<T> values_;
  std::optional<Analytic<T>> analytic_;
};

using SpinorField = SampledField<Spinor2>;
using MatField = SampledField<Mat2>;

/// How operators obtain derivatives of their operands.
///   Analytic: use the exact derivative chain when present, order-4 finite
///             differences as the fallback;
///   Fd2/Fd4:  always use finite differences of the stated order.
enum class DerivMode { Analytic, Fd2, Fd4 };

int fd_order(DerivMode mode);

/// Finite-difference derivative: central stencils of the given order in the
/// interior, one-sided stencils of the same order at the boundary nodes.
template <class T>
SampledField<T> fd_derivative(const SampledField<T>& f, int order);

/// Nodes at each end contaminated by one-sided stencils after `depth`
/// nested derivative applications of the given order.
int fd_margin(int order, int depth = 2);

extern template SampledField<Mat2> fd_derivative(const SampledField<Mat2>&, int);
extern template SampledField<Spinor2> fd_derivative(const SampledField<Spinor2>&, int);

}  // namespace ddx

#endif  // DDX_FIELD_HPP
