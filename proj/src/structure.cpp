#include "wacm/structure.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "wacm/forms.hpp"
#include "wacm/sampling.hpp"

namespace wacm {

const char* hyp_name(Hyp h) {
  switch (h) {
    case Hyp::HANY: return "HANY";
    case Hyp::H0: return "H0";
    case Hyp::H1: return "H1";
    case Hyp::H2a: return "H2a";
    case Hyp::H2b: return "H2b";
    case Hyp::H3: return "H3";
    case Hyp::HSAS: return "HSAS";
  }
  return "?";
}

Vec StructureData::dphi(const Vec& X, const Vec& Y) const {
  Vec out = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (X[i] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (Y[j] == 0.0) continue;
      const double w = X[i] * Y[j];
      for (int k = 0; k < d; ++k) out[k] += w * nphi(i, k, j);
    }
  }
  return out;
}

Vec StructureData::dh(const Vec& X, const Vec& Y) const {
  Vec out = Vec::Zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double w = X[i] * Y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < d; ++k) out[k] += w * nh(i, k, j);
    }
  return out;
}

Vec StructureData::dQt(const Vec& X, const Vec& Y) const {
  Vec out = Vec::Zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double w = X[i] * Y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < d; ++k) out[k] += w * nQ(i, k, j);
    }
  return out;
}

Vec StructureData::dphih(const Vec& X, const Vec& Y) const {
  return dphi(X, h * Y) + phi * dh(X, Y);
}

Vec StructureData::d2phi(const Vec& X, const Vec& Y, const Vec& Z) const {
  Vec out = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (X[i] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (Y[j] == 0.0) continue;
      const double xy = X[i] * Y[j];
      for (int l = 0; l < d; ++l) {
        if (Z[l] == 0.0) continue;
        const double w = xy * Z[l];
        for (int k = 0; k < d; ++k) out[k] += w * n2phi(i, j, k, l);
      }
    }
  }
  return out;
}

double StructureData::deta(const Vec& X, const Vec& Y) const {
  return form_apply(deta_form, X, Y);
}

double StructureData::delta4(const Vec& X, const Vec& Y, const Vec& Z, const Vec& V) const {
  return curv4(X, Y, Qt * Z, V) + curv4(X, Y, Z, Qt * V) - curv4(Qt * X, Y, Z, V) -
         curv4(X, Qt * Y, Z, V);
}

Vec StructureData::nijenhuis(const Vec& X, const Vec& Y) const {
  // [phi X, phi Y] - phi[phi X, Y] - phi[X, phi Y]; coordinate fields with
  // constant components commute, so phi^2 [X,Y] drops.
  const Vec pX = phi * X, pY = phi * Y;
  auto dphi_field = [this](const Vec& along, const Vec& arg) {
    // along^i d_i (phi arg)^k for constant arg
    Vec out = Vec::Zero(d);
    for (int i = 0; i < d; ++i) {
      if (along[i] == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        if (arg[j] == 0.0) continue;
        const double w = along[i] * arg[j];
        for (int k = 0; k < d; ++k) out[k] += w * dphi_raw(i, k, j);
      }
    }
    return out;
  };
  const Vec br_pp = dphi_field(pX, Y) - dphi_field(pY, X);   // [phi X, phi Y]
  const Vec br_p1 = -dphi_field(Y, X);                       // [phi X, Y]
  const Vec br_p2 = dphi_field(X, Y);                        // [X, phi Y]
  return br_pp - phi * br_p1 - phi * br_p2;
}

StructureData structure_data(const WeakStructure& S, const Vec& p) {
  S.chart.require(p);
  const int d = S.chart.dim;
  const JetV x = seed_point(p);

  StructureData G;
  G.d = d;
  G.geo = point_geometry_from_jets(S.chart.metric(x), p);

  const Grid2<Jet> phij = S.phi(x);
  const Grid2<Jet> Qj = S.Q(x);
  const JetV xij = S.xi(x);
  const JetV etaj = S.eta(x);

  G.phi = Mat(d, d);
  G.Q = Mat(d, d);
  G.xi = Vec(d);
  G.eta = Vec(d);
  G.dphi_raw = Grid3<double>(d, d, d);
  G.ddphi_raw = Grid4<double>(d, d, d, d);
  G.dQ_raw = Grid3<double>(d, d, d);
  G.dxi_raw = Mat(d, d);
  G.ddxi_raw = Grid3<double>(d, d, d);
  G.deta_raw = Mat(d, d);

  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      const Jet& c = phij(k, j);
      G.phi(k, j) = c.val;
      const Jet& q = Qj(k, j);
      G.Q(k, j) = q.val;
      for (int i = 0; i < d; ++i) {
        G.dphi_raw(i, k, j) = c.dval(i);
        G.dQ_raw(i, k, j) = q.dval(i);
        for (int m = 0; m < d; ++m) G.ddphi_raw(i, m, k, j) = c.ddval(i, m);
      }
    }
  for (int k = 0; k < d; ++k) {
    G.xi[k] = xij[k].val;
    G.eta[k] = etaj[k].val;
    for (int i = 0; i < d; ++i) {
      G.dxi_raw(i, k) = xij[k].dval(i);
      G.deta_raw(i, k) = etaj[k].dval(i);
      for (int j = 0; j < d; ++j) G.ddxi_raw(i, j, k) = xij[k].ddval(i, j);
    }
  }

  G.Qt = G.Q - Mat::Identity(d, d);

  G.nabla_xi = Mat(d, d);  // (k,i) = (nabla_{e_i} xi)^k
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      double s = G.dxi_raw(i, k);
      for (int m = 0; m < d; ++m) s += G.geo.gamma(k, i, m) * G.xi[m];
      G.nabla_xi(k, i) = s;
    }
  G.h = G.nabla_xi + G.phi;

  G.dh_raw = Grid3<double>(d, d, d);  // d_i h^k_j
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        double s = G.ddxi_raw(i, j, k) + G.dphi_raw(i, k, j);
        for (int m = 0; m < d; ++m)
          s += G.geo.dgamma(i, k, j, m) * G.xi[m] + G.geo.gamma(k, j, m) * G.dxi_raw(i, m);
        G.dh_raw(i, k, j) = s;
      }

  auto cov_t11 = [&](const Mat& T, const Grid3<double>& dT) {
    Grid3<double> out(d, d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
          double s = dT(i, k, j);
          for (int m = 0; m < d; ++m)
            s += G.geo.gamma(k, i, m) * T(m, j) - G.geo.gamma(m, i, j) * T(k, m);
          out(i, k, j) = s;
        }
    return out;
  };

  G.nphi = cov_t11(G.phi, G.dphi_raw);
  G.nh = cov_t11(G.h, G.dh_raw);
  G.nQ = cov_t11(G.Q, G.dQ_raw);

  G.neta = Mat(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = G.deta_raw(i, j);
      for (int m = 0; m < d; ++m) s -= G.geo.gamma(m, i, j) * G.eta[m];
      G.neta(i, j) = s;
    }

  // second covariant derivative of phi
  Grid4<double> dnphi(d, d, d, d);  // d_i (nabla_j phi)^k_l
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double s = G.ddphi_raw(i, j, k, l);
          for (int m = 0; m < d; ++m) {
            s += G.geo.dgamma(i, k, j, m) * G.phi(m, l) + G.geo.gamma(k, j, m) * G.dphi_raw(i, m, l);
            s -= G.geo.dgamma(i, m, j, l) * G.phi(k, m) + G.geo.gamma(m, j, l) * G.dphi_raw(i, k, m);
          }
          dnphi(i, j, k, l) = s;
        }
  G.n2phi = Grid4<double>(d, d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double s = dnphi(i, j, k, l);
          for (int m = 0; m < d; ++m) {
            s += G.geo.gamma(k, i, m) * G.nphi(j, m, l);
            s -= G.geo.gamma(m, i, j) * G.nphi(m, k, l);
            s -= G.geo.gamma(m, i, l) * G.nphi(j, k, m);
          }
          G.n2phi(i, j, k, l) = s;
        }

  JetV etc = etaj;
  G.deta_form = exterior_derivative_1(etc);

  return G;
}

double rel_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

double rel_residual(const StructureData& G, const Vec& lhs, const Vec& rhs) {
  return G.gnorm(lhs - rhs) / (1.0 + G.gnorm(lhs) + G.gnorm(rhs));
}

bool AxiomReport::all_pass() const {
  if (!structural_failures.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

namespace {

/// Smallest generalized eigenvalue of the g-self-adjoint operator M.
double min_g_eigenvalue(const StructureData& G, const Mat& M) {
  Eigen::LLT<Mat> llt(G.geo.g);
  Mat L = llt.matrixL();
  Mat sym = L.transpose() * M * L.transpose().triangularView<Eigen::Upper>().solve(
                                Mat::Identity(G.d, G.d));
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (sym + sym.transpose()));
  return es.eigenvalues().minCoeff();
}

}  // namespace

AxiomReport validate_structure(const WeakStructure& S, int points, std::uint64_t seed,
                               double tol) {
  AxiomReport rep;
  rep.model = S.name;
  rep.points = points;
  rep.seed = seed;

  SampleSet samples = draw_samples(S.chart, points, 4, seed);

  struct Acc {
    const char* id;
    const char* desc;
    double max = 0.0;
  };
  Acc acc[] = {
      {"AX-1", "g(phi X, phi Y) = g(X, Q Y) - eta(X) eta(Y)"},
      {"AX-2", "eta(xi) = 1 and phi xi = 0"},
      {"AX-3", "eta o phi = 0"},
      {"AX-4", "eta o Q = eta"},
      {"AX-5", "[Q, phi] = 0"},
      {"AX-6", "phi skew-symmetric, Q self-adjoint"},
      {"AX-Q", "Q positive definite"},
      {"AX-D", "eta is the g-dual of xi"},
  };

  for (size_t pi = 0; pi < samples.points.size(); ++pi) {
    StructureData G;
    try {
      G = structure_data(S, samples.points[pi]);
    } catch (const SingularMetricError& e) {
      rep.structural_failures.push_back(e.what());
      continue;
    }
    const double qmin = min_g_eigenvalue(G, G.Q);
    acc[6].max = std::max(acc[6].max, qmin > 1e-10 ? 0.0 : 1.0 - qmin);

    // pointwise (arity 0 / 1 in basis directions)
    acc[1].max = std::max(acc[1].max, rel_residual(G.eta_of(G.xi), 1.0));
    acc[1].max = std::max(acc[1].max, G.gnorm(G.phi * G.xi) / (1.0 + G.gnorm(G.xi)));

    Vec eta_dual = G.geo.g * G.xi;
    acc[7].max = std::max(acc[7].max, (eta_dual - G.eta).norm() / (1.0 + G.eta.norm()));

    for (const auto& tup : samples.tuples[pi]) {
      const Vec &X = tup[0], &Y = tup[1];
      acc[0].max = std::max(
          acc[0].max, rel_residual(G.ip(G.phi * X, G.phi * Y),
                                   G.ip(X, G.Q * Y) - G.eta_of(X) * G.eta_of(Y)));
      acc[2].max = std::max(acc[2].max, std::abs(G.eta_of(G.phi * X)) / (1.0 + 1.0));
      acc[3].max = std::max(acc[3].max, rel_residual(G.eta_of(G.Q * X), G.eta_of(X)));
      acc[4].max =
          std::max(acc[4].max, rel_residual(G, G.Q * (G.phi * X), G.phi * (G.Q * X)));
      acc[5].max =
          std::max(acc[5].max, rel_residual(G.ip(G.phi * X, Y), -G.ip(X, G.phi * Y)));
      acc[5].max =
          std::max(acc[5].max, rel_residual(G.ip(G.Q * X, Y), G.ip(X, G.Q * Y)));
    }
  }

  for (const Acc& a : acc) {
    AxiomCheck c;
    c.id = a.id;
    c.description = a.desc;
    c.max_residual = a.max;
    c.pass = a.max < tol;
    rep.checks.push_back(c);
  }
  return rep;
}

DerivedTensors compute_h(const StructureData& G) {
  DerivedTensors out;
  out.h = G.h;
  out.qTilde = G.Qt;
  out.nabla_xi = G.nabla_xi;
  out.h_xi_residual = G.gnorm(G.h * G.xi);
  Vec eh = G.h.transpose() * G.eta;  // (eta o h)_j = eta_k h^k_j
  out.eta_h_residual = eh.norm();
  // g-adjoint: h^* = g^{-1} h^T g
  Mat hstar = G.geo.g_inv * G.h.transpose() * G.geo.g;
  out.skew_residual = (G.h + hstar).norm() / (1.0 + G.h.norm());
  out.geodesic_residual = G.gnorm(G.nabla_xi * G.xi);
  Mat h2 = G.h * G.h;
  Eigen::SelfAdjointEigenSolver<Mat> es;
  Eigen::LLT<Mat> llt(G.geo.g);
  Mat L = llt.matrixL();
  Mat sym = L.transpose() * h2 *
            L.transpose().triangularView<Eigen::Upper>().solve(Mat::Identity(G.d, G.d));
  es.compute(0.5 * (sym + sym.transpose()));
  out.h_norm = std::sqrt(std::max(0.0, -es.eigenvalues().minCoeff()));
  return out;
}

DerivedTensors compute_h(const WeakStructure& S, const Vec& p) {
  return compute_h(structure_data(S, p));
}

double nearly_sasakian_residual(const StructureData& G, const Vec& Y) {
  Vec lhs = G.dphi(Y, Y);
  Vec rhs = G.ip(Y, Y) * G.xi - G.eta_of(Y) * Y;
  return rel_residual(G, lhs, rhs);
}

double nearly_sasakian_residual(const WeakStructure& S, const Vec& p, const Vec& Y) {
  return nearly_sasakian_residual(structure_data(S, p), Y);
}

SasakianResiduals sasakian_residuals(const StructureData& G, const Vec& X, const Vec& Y) {
  SasakianResiduals r;
  Vec lhs = G.dphi(X, Y);
  Vec rhs = G.ip(X, Y) * G.xi - G.eta_of(Y) * X;
  r.formula = rel_residual(G, lhs, rhs);
  Vec nij = G.nijenhuis(X, Y);
  Vec dterm = -2.0 * G.deta(X, Y) * G.xi;
  r.normality = rel_residual(G, nij, dterm);
  return r;
}

SasakianResiduals sasakian_residuals(const WeakStructure& S, const Vec& p, const Vec& X,
                                     const Vec& Y) {
  return sasakian_residuals(structure_data(S, p), X, Y);
}

double delta(const WeakStructure& S, const Vec& p, const Vec& X, const Vec& Y, const Vec& Z,
             const Vec& V) {
  return structure_data(S, p).delta4(X, Y, Z, V);
}

std::vector<Vec> ker_eta_basis(const StructureData& G) {
  const int d = G.d;
  int drop = 0;
  for (int i = 1; i < d; ++i)
    if (std::abs(G.eta[i]) > std::abs(G.eta[drop])) drop = i;

  std::vector<Vec> basis;
  std::vector<Vec> ortho;  // xi first, then accepted ker-eta vectors
  ortho.push_back(G.xi / G.gnorm(G.xi));
  for (int i = 0; i < d; ++i) {
    if (i == drop) continue;
    Vec v = Vec::Unit(d, i);
    for (const Vec& u : ortho) v -= G.ip(v, u) * u;
    const double len = G.gnorm(v);
    if (len < 1e-10) continue;
    v /= len;
    ortho.push_back(v);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace wacm
