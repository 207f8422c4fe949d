#ifndef WACM_JET_HPP
#define WACM_JET_HPP

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wacm {

// Chart dimensions stay small (<= 9), so jet storage is fixed-capacity and
// never touches the heap.
inline constexpr int kMaxDim = 9;

using JetGrad = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::AutoAlign, kMaxDim, 1>;
using JetHess = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::AutoAlign, kMaxDim, kMaxDim>;

/// Truncated order-2 multivariate Taylor jet: value, gradient and (symmetric)
/// Hessian of a scalar quantity with respect to the chart coordinates.
///
/// A default-constructed jet has dimension 0 and acts as the constant 0;
/// binary operations promote dimensions so that plain doubles and constants
/// mix freely with seeded coordinates.
class Jet {
public:
  double val = 0.0;
  JetGrad grad;  // size d
  JetHess hess;  // d x d, symmetric

  Jet() = default;

  explicit Jet(double v) : val(v) {}

  static Jet constant(double v, int dim) {
    Jet j(v);
    j.grad = JetGrad::Zero(dim);
    j.hess = JetHess::Zero(dim, dim);
    return j;
  }

  /// Coordinate i seeded for differentiation: value v, gradient e_i, zero Hessian.
  static Jet variable(double v, int i, int dim) {
    Jet j = constant(v, dim);
    j.grad[i] = 1.0;
    return j;
  }

  int dim() const { return static_cast<int>(grad.size()); }

  // Derivative reads that treat dimension-0 jets as constants.
  double dval(int k) const { return grad.size() ? grad[k] : 0.0; }
  double ddval(int i, int j) const { return grad.size() ? hess(i, j) : 0.0; }

  Jet& operator+=(const Jet& o) { *this = *this + o; return *this; }
  Jet& operator-=(const Jet& o) { *this = *this - o; return *this; }
  Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
  Jet& operator+=(double s) { val += s; return *this; }
  Jet& operator-=(double s) { val -= s; return *this; }
  Jet& operator*=(double s) { *this = *this * s; return *this; }

  friend Jet operator-(const Jet& a) {
    Jet r(a);
    r.val = -r.val;
    r.grad = -r.grad;
    r.hess = -r.hess;
    return r;
  }

  friend Jet operator+(Jet a, Jet b) {
    promote(a, b);
    a.val += b.val;
    if (b.dim() > 0) { a.grad += b.grad; a.hess += b.hess; }
    return a;
  }

  friend Jet operator-(Jet a, Jet b) {
    promote(a, b);
    a.val -= b.val;
    if (b.dim() > 0) { a.grad -= b.grad; a.hess -= b.hess; }
    return a;
  }

  friend Jet operator*(Jet a, Jet b) {
    promote(a, b);
    Jet r = Jet::constant(a.val * b.val, a.dim());
    if (a.dim() > 0) {
      r.grad = a.grad * b.val + b.grad * a.val;
      r.hess = a.hess * b.val + b.hess * a.val
             + a.grad * b.grad.transpose() + b.grad * a.grad.transpose();
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

  friend Jet operator+(const Jet& a, double s) { Jet r(a); r.val += s; return r; }
  friend Jet operator+(double s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, double s) { Jet r(a); r.val -= s; return r; }
  friend Jet operator-(double s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(const Jet& a, double s) {
    Jet r(a); r.val *= s; r.grad *= s; r.hess *= s; return r;
  }
  friend Jet operator*(double s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
  friend Jet operator/(double s, const Jet& a) { return inverse(a) * s; }

  friend Jet inverse(const Jet& b) {
    if (b.val == 0.0) throw std::domain_error("jet: division by zero value");
    const double iv = 1.0 / b.val;
    Jet r = Jet::constant(iv, b.dim());
    if (b.dim() > 0) {
      r.grad = -b.grad * (iv * iv);
      r.hess = -b.hess * (iv * iv)
             + 2.0 * (iv * iv * iv) * b.grad * b.grad.transpose();
    }
    return r;
  }

  friend Jet sqrt(const Jet& a) {
    if (a.val <= 0.0) throw std::domain_error("jet: sqrt of non-positive value");
    const double s = std::sqrt(a.val);
    Jet r = Jet::constant(s, a.dim());
    if (a.dim() > 0) {
      r.grad = a.grad / (2.0 * s);
      r.hess = a.hess / (2.0 * s) - a.grad * a.grad.transpose() / (4.0 * s * s * s);
    }
    return r;
  }

  friend Jet pow(const Jet& a, int n) {
    if (n < 0) return inverse(pow(a, -n));
    Jet r = Jet::constant(1.0, a.dim());
    Jet base = a;
    int e = n;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

private:
  static void promote(Jet& a, Jet& b) {
    if (a.dim() == b.dim()) return;
    if (a.dim() == 0) { double v = a.val; a = Jet::constant(v, b.dim()); return; }
    if (b.dim() == 0) { double v = b.val; b = Jet::constant(v, a.dim()); return; }
    throw std::logic_error("jet: mixing jets of different dimensions");
  }
};

/// Seeded chart point: coordinate i carries gradient e_i.
using JetV = std::vector<Jet>;

inline JetV seed_point(const Eigen::VectorXd& p) {
  const int d = static_cast<int>(p.size());
  JetV x(d);
  for (int i = 0; i < d; ++i) x[i] = Jet::variable(p[i], i, d);
  return x;
}

// Value-level helpers so generic field code compiles for both double and Jet.
inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.val; }

inline double inverse(double x) { return 1.0 / x; }

}  // namespace wacm

#endif
