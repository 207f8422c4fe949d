#include "wacm/forms.hpp"

#include <algorithm>
#include <numeric>

namespace wacm {

Vec exterior_derivative_0(const Jet& f) {
  Vec out(f.dim());
  for (int i = 0; i < f.dim(); ++i) out[i] = f.grad[i];
  return out;
}

Grid2<double> exterior_derivative_1(const JetV& w) {
  const int d = static_cast<int>(w.size());
  Grid2<double> out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = 0.5 * (w[j].dval(i) - w[i].dval(j));
  return out;
}

Grid3<double> exterior_derivative_2(const Grid2<Jet>& b) {
  const int d = b.rows();
  Grid3<double> out(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j, k) =
            (b(j, k).dval(i) + b(k, i).dval(j) + b(i, j).dval(k)) / 3.0;
  return out;
}

Grid3<double> exterior_derivative_2_cov(const PointGeometry& G, const Grid2<Jet>& b) {
  const int d = G.d;
  // (nabla_i b)_jk = d_i b_jk - Gamma^m_ij b_mk - Gamma^m_ik b_jm
  Grid3<double> nb(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double s = b(j, k).dval(i);
        for (int m = 0; m < d; ++m)
          s -= G.gamma(m, i, j) * b(m, k).val + G.gamma(m, i, k) * b(j, m).val;
        nb(i, j, k) = s;
      }
  Grid3<double> out(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j, k) = (nb(i, j, k) + nb(j, k, i) + nb(k, i, j)) / 3.0;
  return out;
}

Grid3<double> cyclic_derivative_bilinear(const PointGeometry& G, const Grid2<double>& b,
                                         const Grid3<double>& db_raw) {
  const int d = G.d;
  Grid3<double> nb(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double s = db_raw(i, j, k);
        for (int m = 0; m < d; ++m)
          s -= G.gamma(m, i, j) * b(m, k) + G.gamma(m, i, k) * b(j, m);
        nb(i, j, k) = s;
      }
  Grid3<double> out(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j, k) = (nb(i, j, k) + nb(j, k, i) + nb(k, i, j)) / 3.0;
  return out;
}

Grid3<double> cyclic_wedge(const Vec& eta, const Grid2<double>& b) {
  const int d = static_cast<int>(eta.size());
  Grid3<double> out(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j, k) = (eta[i] * b(j, k) + eta[j] * b(k, i) + eta[k] * b(i, j)) / 3.0;
  return out;
}

Grid2<double> wedge11(const Vec& a, const Vec& b) {
  const int d = static_cast<int>(a.size());
  Grid2<double> out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = 0.5 * (a[i] * b[j] - a[j] * b[i]);
  return out;
}

Grid3<double> wedge12(const Vec& a, const Grid2<double>& b) {
  const int d = static_cast<int>(a.size());
  Grid3<double> out(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j, k) = (a[i] * b(j, k) + a[j] * b(k, i) + a[k] * b(i, j)) / 3.0;
  return out;
}

Grid4<double> wedge22(const Grid2<double>& a, const Grid2<double>& b) {
  const int d = a.rows();
  Grid4<double> out(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          out(i, j, k, l) = (a(i, j) * b(k, l) - a(i, k) * b(j, l) + a(i, l) * b(j, k) +
                             a(j, k) * b(i, l) - a(j, l) * b(i, k) + a(k, l) * b(i, j)) /
                            6.0;
  return out;
}

Grid4<double> wedge13(const Vec& a, const Grid3<double>& b) {
  const int d = static_cast<int>(a.size());
  Grid4<double> out(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          out(i, j, k, l) = (a[i] * b(j, k, l) - a[j] * b(i, k, l) + a[k] * b(i, j, l) -
                             a[l] * b(i, j, k)) /
                            4.0;
  return out;
}

FormValue wedge(const FormValue& a, const FormValue& b) {
  FormValue out;
  if (a.degree == 1 && b.degree == 1) {
    out.degree = 2;
    out.r2 = wedge11(a.r1, b.r1);
  } else if (a.degree == 1 && b.degree == 2) {
    out.degree = 3;
    out.r3 = wedge12(a.r1, b.r2);
  } else if (a.degree == 2 && b.degree == 1) {
    out.degree = 3;
    out.r3 = wedge12(b.r1, a.r2);  // graded-commutative: sign (+) for (2,1)
  } else if (a.degree == 2 && b.degree == 2) {
    out.degree = 4;
    out.r4 = wedge22(a.r2, b.r2);
  } else if (a.degree == 1 && b.degree == 3) {
    out.degree = 4;
    out.r4 = wedge13(a.r1, b.r3);
  } else if (a.degree == 3 && b.degree == 1) {
    out.degree = 4;
    out.r4 = wedge13(b.r1, a.r3);  // (-1)^{3*1} = -1
    for (int i = 0; i < out.r4.size(0); ++i)
      for (int j = 0; j < out.r4.size(1); ++j)
        for (int k = 0; k < out.r4.size(2); ++k)
          for (int l = 0; l < out.r4.size(3); ++l) out.r4(i, j, k, l) *= -1.0;
  } else {
    throw UnsupportedError("wedge: unsupported degree pair");
  }
  return out;
}

double form_apply(const Grid2<double>& w, const Vec& X, const Vec& Y) {
  const int d = w.rows();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += w(i, j) * X[i] * Y[j];
  return s;
}

double form_apply(const Grid3<double>& w, const Vec& X, const Vec& Y, const Vec& Z) {
  const int d = w.size(0);
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) s += w(i, j, k) * X[i] * Y[j] * Z[k];
  return s;
}

double form_apply(const Grid4<double>& w, const Vec& X, const Vec& Y, const Vec& Z,
                  const Vec& V) {
  const int d = w.size(0);
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) s += w(i, j, k, l) * X[i] * Y[j] * Z[k] * V[l];
  return s;
}

double contact_volume(const Vec& eta, const Grid2<double>& deta) {
  const int d = static_cast<int>(eta.size());
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  double total = 0.0;
  do {
    // permutation parity by inversion count
    int inv = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (idx[a] > idx[b]) ++inv;
    double term = eta[idx[0]];
    for (int a = 1; a + 1 < d; a += 2) term *= deta(idx[a], idx[a + 1]);
    total += (inv % 2 == 0 ? term : -term);
  } while (std::next_permutation(idx.begin(), idx.end()));
  double fact = 1.0;
  for (int a = 2; a <= d; ++a) fact *= a;
  return total / fact;
}

}  // namespace wacm
