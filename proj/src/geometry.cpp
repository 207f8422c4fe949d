#include "wacm/geometry.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>

namespace wacm {

double PointGeometry::gnorm(const Vec& a) const {
  return std::sqrt(std::max(0.0, ip(a, a)));
}

Vec PointGeometry::curv(const Vec& X, const Vec& Y, const Vec& Z) const {
  Vec out = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (X[i] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (Y[j] == 0.0) continue;
      const double xy = X[i] * Y[j];
      for (int k = 0; k < d; ++k) {
        if (Z[k] == 0.0) continue;
        const double w = xy * Z[k];
        for (int m = 0; m < d; ++m) out[m] += w * riem(i, j, k, m);
      }
    }
  }
  return out;
}

double PointGeometry::curv4(const Vec& X, const Vec& Y, const Vec& Z, const Vec& V) const {
  return ip(curv(X, Y, Z), V);
}

Vec PointGeometry::conn(const Vec& V, const Vec& X) const {
  Vec out = Vec::Zero(d);
  for (int m = 0; m < d; ++m) {
    double s = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) s += V[i] * X[j] * gamma(m, i, j);
    out[m] = s;
  }
  return out;
}

namespace {

PointGeometry build_geometry(const Grid2<Jet>& gj, const Vec& p, const std::string& where) {
  const int d = static_cast<int>(p.size());
  PointGeometry G;
  G.d = d;
  G.x = p;
  G.g = Mat(d, d);
  G.dg = Grid3<double>(d, d, d);
  G.ddg = Grid4<double>(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Jet& c = gj(i, j);
      G.g(i, j) = c.val;
      for (int k = 0; k < d; ++k) {
        G.dg(k, i, j) = c.dval(k);
        for (int l = 0; l < d; ++l) G.ddg(k, l, i, j) = c.ddval(k, l);
      }
    }

  Eigen::LLT<Mat> llt(G.g);
  if (llt.info() != Eigen::Success)
    throw SingularMetricError(where + ": metric not positive definite at sampled point");
  G.g_inv = G.g.inverse();

  G.dginv = Grid3<double>(d, d, d);
  for (int k = 0; k < d; ++k) {
    Mat dgk(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dgk(i, j) = G.dg(k, i, j);
    Mat m = -G.g_inv * dgk * G.g_inv;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) G.dginv(k, i, j) = m(i, j);
  }

  G.gamma = Grid3<double>(d, d, d);
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int l = 0; l < d; ++l)
          s += G.g_inv(m, l) * (G.dg(i, j, l) + G.dg(j, i, l) - G.dg(l, i, j));
        G.gamma(m, i, j) = 0.5 * s;
      }

  G.dgamma = Grid4<double>(d, d, d, d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double s = 0.0;
          for (int l = 0; l < d; ++l) {
            s += G.dginv(k, m, l) * (G.dg(i, j, l) + G.dg(j, i, l) - G.dg(l, i, j));
            s += G.g_inv(m, l) * (G.ddg(k, i, j, l) + G.ddg(k, j, i, l) - G.ddg(k, l, i, j));
          }
          G.dgamma(k, m, i, j) = 0.5 * s;
        }

  // R(e_i,e_j)e_k = (d_i Gamma^m_jk - d_j Gamma^m_ik
  //                  + Gamma^l_jk Gamma^m_il - Gamma^l_ik Gamma^m_jl) e_m
  G.riem = Grid4<double>(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          double s = G.dgamma(i, m, j, k) - G.dgamma(j, m, i, k);
          for (int l = 0; l < d; ++l)
            s += G.gamma(l, j, k) * G.gamma(m, i, l) - G.gamma(l, i, k) * G.gamma(m, j, l);
          G.riem(i, j, k, m) = s;
        }

  G.rlow = Grid4<double>(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double s = 0.0;
          for (int m = 0; m < d; ++m) s += G.g(l, m) * G.riem(i, j, k, m);
          G.rlow(i, j, k, l) = s;
        }

  return G;
}

}  // namespace

PointGeometry point_geometry(const Chart& chart, const Vec& p) {
  chart.require(p);
  Grid2<Jet> gj = chart.metric(seed_point(p));
  return build_geometry(gj, p, chart.name);
}

PointGeometry point_geometry_from_jets(const Grid2<Jet>& gj, const Vec& p) {
  return build_geometry(gj, p, "chart");
}

namespace {

// (nabla_i T)^k_j = d_i T^k_j + Gamma^k_im T^m_j - Gamma^m_ij T^k_m
Grid3<double> cov1_t11(const PointGeometry& G, const Grid2<Jet>& T) {
  const int d = G.d;
  Grid3<double> out(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        double s = T(k, j).dval(i);
        for (int m = 0; m < d; ++m)
          s += G.gamma(k, i, m) * T(m, j).val - G.gamma(m, i, j) * T(k, m).val;
        out(i, k, j) = s;
      }
  return out;
}

}  // namespace

CovDeriv covariant_derivative(const Chart& chart, const TensorField& T, const Vec& p) {
  PointGeometry G = point_geometry(chart, p);
  const int d = G.d;
  const JetV x = seed_point(p);
  CovDeriv out;
  out.valence = T.valence;

  switch (T.valence) {
    case Valence::Vector: {
      JetV v = T.rank1(x);
      out.r2 = Grid2<double>(d, d);
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
          double s = v[k].dval(i);
          for (int m = 0; m < d; ++m) s += G.gamma(k, i, m) * v[m].val;
          out.r2(i, k) = s;
        }
      return out;
    }
    case Valence::OneForm: {
      JetV w = T.rank1(x);
      out.r2 = Grid2<double>(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double s = w[j].dval(i);
          for (int m = 0; m < d; ++m) s -= G.gamma(m, i, j) * w[m].val;
          out.r2(i, j) = s;
        }
      return out;
    }
    case Valence::T11: {
      out.r3 = cov1_t11(G, T.rank2(x));
      return out;
    }
    case Valence::T02: {
      Grid2<Jet> b = T.rank2(x);
      out.r3 = Grid3<double>(d, d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            double s = b(j, k).dval(i);
            for (int m = 0; m < d; ++m)
              s -= G.gamma(m, i, j) * b(m, k).val + G.gamma(m, i, k) * b(j, m).val;
            out.r3(i, j, k) = s;
          }
      return out;
    }
    case Valence::T03: {
      Grid3<Jet> b = T.rank3(x);
      out.r4 = Grid4<double>(d, d, d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
              double s = b(j, k, l).dval(i);
              for (int m = 0; m < d; ++m)
                s -= G.gamma(m, i, j) * b(m, k, l).val + G.gamma(m, i, k) * b(j, m, l).val +
                     G.gamma(m, i, l) * b(j, k, m).val;
              out.r4(i, j, k, l) = s;
            }
      return out;
    }
  }
  throw UnsupportedError("covariant_derivative: unsupported valence");
}

Grid4<double> second_covariant_derivative_11(const Chart& chart, const TensorField& T,
                                             const Vec& p) {
  if (T.valence != Valence::T11)
    throw UnsupportedError("second covariant derivative: only (1,1) fields supported");
  PointGeometry G = point_geometry(chart, p);
  const int d = G.d;
  Grid2<Jet> Tj = T.rank2(seed_point(p));

  // nabla T and its raw partials from order-2 jets of T and dGamma.
  Grid3<double> nT = cov1_t11(G, Tj);
  Grid4<double> dnT(d, d, d, d);  // d_i (nabla_j T)^k_l
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double s = Tj(k, l).ddval(i, j);
          for (int m = 0; m < d; ++m) {
            s += G.dgamma(i, k, j, m) * Tj(m, l).val + G.gamma(k, j, m) * Tj(m, l).dval(i);
            s -= G.dgamma(i, m, j, l) * Tj(k, m).val + G.gamma(m, j, l) * Tj(k, m).dval(i);
          }
          dnT(i, j, k, l) = s;
        }

  Grid4<double> out(d, d, d, d);  // ((nabla^2_{e_i,e_j} T) e_l)^k
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double s = dnT(i, j, k, l);
          for (int m = 0; m < d; ++m) {
            s += G.gamma(k, i, m) * nT(j, m, l);
            s -= G.gamma(m, i, j) * nT(m, k, l);
            s -= G.gamma(m, i, l) * nT(j, k, m);
          }
          out(i, j, k, l) = s;
        }
  return out;
}

Vec riemann(const Chart& chart, const Vec& p, const Vec& X, const Vec& Y, const Vec& Z) {
  return point_geometry(chart, p).curv(X, Y, Z);
}

FiniteDifferenceGeometry finite_difference_geometry(const Chart& chart, const Vec& p,
                                                    double step) {
  const int d = chart.dim;
  const double h = step;
  auto gv = [&](const Vec& q) { return chart.metric_value(q); };

  FiniteDifferenceGeometry F;
  F.g = gv(p);
  Mat ginv = F.g.inverse();

  Grid3<double> dg(d, d, d);
  for (int k = 0; k < d; ++k) {
    Vec pp = p, pm = p;
    pp[k] += h;
    pm[k] -= h;
    Mat diff = (gv(pp) - gv(pm)) / (2.0 * h);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dg(k, i, j) = diff(i, j);
  }

  Grid4<double> ddg(d, d, d, d);
  for (int k = 0; k < d; ++k)
    for (int l = k; l < d; ++l) {
      Mat diff;
      if (k == l) {
        Vec pp = p, pm = p;
        pp[k] += h;
        pm[k] -= h;
        diff = (gv(pp) - 2.0 * F.g + gv(pm)) / (h * h);
      } else {
        Vec a = p, b = p, c = p, e = p;
        a[k] += h; a[l] += h;
        b[k] += h; b[l] -= h;
        c[k] -= h; c[l] += h;
        e[k] -= h; e[l] -= h;
        diff = (gv(a) - gv(b) - gv(c) + gv(e)) / (4.0 * h * h);
      }
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          ddg(k, l, i, j) = diff(i, j);
          ddg(l, k, i, j) = diff(i, j);
        }
    }

  Grid3<double> dginv(d, d, d);
  for (int k = 0; k < d; ++k) {
    Mat dgk(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dgk(i, j) = dg(k, i, j);
    Mat m = -ginv * dgk * ginv;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dginv(k, i, j) = m(i, j);
  }

  F.gamma = Grid3<double>(d, d, d);
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int l = 0; l < d; ++l)
          s += ginv(m, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        F.gamma(m, i, j) = 0.5 * s;
      }

  F.dgamma = Grid4<double>(d, d, d, d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double s = 0.0;
          for (int l = 0; l < d; ++l) {
            s += dginv(k, m, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
            s += ginv(m, l) * (ddg(k, i, j, l) + ddg(k, j, i, l) - ddg(k, l, i, j));
          }
          F.dgamma(k, m, i, j) = 0.5 * s;
        }

  F.rlow = Grid4<double>(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double up = 0.0;
          for (int m = 0; m < d; ++m) {
            double s = F.dgamma(i, m, j, k) - F.dgamma(j, m, i, k);
            for (int q = 0; q < d; ++q)
              s += F.gamma(q, j, k) * F.gamma(m, i, q) - F.gamma(q, i, k) * F.gamma(m, j, q);
            up += F.g(l, m) * s;
          }
          F.rlow(i, j, k, l) = up;
        }
  return F;
}

}  // namespace wacm
