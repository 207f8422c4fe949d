#include "wacm/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace wacm {

namespace {

// ---------------------------------------------------------------------------
// scalar-generic helpers (S = double or Jet)

template <class S>
S dot_amb(const std::vector<S>& a, const std::vector<S>& b) {
  S s = a[0] * b[0];
  for (size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class S>
S norm2(const std::vector<S>& x) {
  return dot_amb(x, x);
}

/// Gauss-Jordan solve M X = B for small systems, pivoting on values.
template <class S>
Grid2<S> solve_linear(Grid2<S> M, Grid2<S> B) {
  const int n = M.rows();
  const int m = B.cols();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(value_of(M(r, col))) > std::abs(value_of(M(piv, col)))) piv = r;
    if (std::abs(value_of(M(piv, col))) < 1e-14)
      throw SingularMetricError("solve_linear: singular system");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(M(piv, c), M(col, c));
      for (int c = 0; c < m; ++c) std::swap(B(piv, c), B(col, c));
    }
    S inv_p = inverse(M(col, col));
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      S f = M(r, col) * inv_p;
      for (int c = col; c < n; ++c) M(r, c) = M(r, c) - f * M(col, c);
      for (int c = 0; c < m; ++c) B(r, c) = B(r, c) - f * B(col, c);
    }
  }
  Grid2<S> X(n, m);
  for (int r = 0; r < n; ++r) {
    S inv_p = inverse(M(r, r));
    for (int c = 0; c < m; ++c) X(r, c) = B(r, c) * inv_p;
  }
  return X;
}

/// Inverse stereographic embedding P : R^d -> S^d subset R^{d+1} from the
/// north pole, with the coordinate frame E_i = dP/du_i in closed form.
template <class S>
void stereographic_frame(const std::vector<S>& u, std::vector<S>& P,
                         std::vector<std::vector<S>>& E) {
  const int d = static_cast<int>(u.size());
  S w = inverse(1.0 + norm2(u));
  P.assign(d + 1, S{});
  for (int i = 0; i < d; ++i) P[i] = 2.0 * u[i] * w;
  P[d] = (norm2(u) - 1.0) * w;

  E.assign(d, std::vector<S>(d + 1, S{}));
  S w2 = w * w;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      E[i][j] = (-4.0) * u[i] * u[j] * w2;
      if (i == j) E[i][j] += 2.0 * w;
    }
    E[i][d] = 4.0 * u[i] * w2;
  }
}

/// Complex structure on R^{2m}: J e_{2k} = e_{2k+1}, J e_{2k+1} = -e_{2k}.
template <class S>
std::vector<S> ambient_J(const std::vector<S>& x) {
  std::vector<S> out(x.size(), S{});
  for (size_t k = 0; k + 1 < x.size(); k += 2) {
    out[k] = -x[k + 1];
    out[k + 1] = x[k];
  }
  return out;
}

// Fano lines of the octonion table, zero-indexed.
constexpr std::array<std::array<int, 3>, 7> kFano = {
    {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}}};

struct CrossTable {
  int target[7][7] = {};
  int sign[7][7] = {};
  CrossTable() {
    for (const auto& line : kFano) {
      const int a = line[0], b = line[1], c = line[2];
      set(a, b, c);
      set(b, c, a);
      set(c, a, b);
    }
  }
  void set(int i, int j, int k) {
    target[i][j] = k;
    sign[i][j] = 1;
    target[j][i] = k;
    sign[j][i] = -1;
  }
};

const CrossTable& cross_table() {
  static const CrossTable t;
  return t;
}

template <class S>
std::vector<S> cross7(const std::vector<S>& a, const std::vector<S>& b) {
  const CrossTable& t = cross_table();
  std::vector<S> out(7, S{});
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (t.sign[i][j] == 0) continue;
      if (t.sign[i][j] > 0)
        out[t.target[i][j]] += a[i] * b[j];
      else
        out[t.target[i][j]] += -(a[i] * b[j]);
    }
  return out;
}

Vec const_box(int d, double v) { return Vec::Constant(d, v); }

}  // namespace

Eigen::VectorXd octonion_cross(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  std::vector<double> av(a.data(), a.data() + 7), bv(b.data(), b.data() + 7);
  std::vector<double> c = cross7(av, bv);
  return Eigen::Map<Eigen::VectorXd>(c.data(), 7);
}

Chart euclidean_chart(int d) {
  Chart chart;
  chart.dim = d;
  chart.name = "euclidean-r" + std::to_string(d);
  chart.box_lo = const_box(d, -1.0);
  chart.box_hi = const_box(d, 1.0);
  chart.in_domain = [](const Vec&) { return true; };
  auto metric = [d](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    (void)x;
    Grid2<S> g(d, d);
    for (int i = 0; i < d; ++i) g(i, i) = S{} + 1.0;
    return g;
  };
  bind_metric(chart, metric);
  return chart;
}

Chart sphere_chart(int d) {
  Chart chart;
  chart.dim = d;
  chart.name = "sphere-s" + std::to_string(d);
  chart.box_lo = const_box(d, -1.2);
  chart.box_hi = const_box(d, 1.2);
  // the only singular locus (the projection pole) sits at infinity; keep a
  // generous bound so spectral perturbation stays well conditioned
  chart.in_domain = [](const Vec& p) { return p.norm() < 5.0; };
  auto metric = [d](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    S w = inverse(1.0 + norm2(x));
    S f = 4.0 * w * w;
    Grid2<S> g(d, d);
    for (int i = 0; i < d; ++i) g(i, i) = f;
    return g;
  };
  bind_metric(chart, metric);
  return chart;
}

WeakStructure build_sasakian_r2n1(int n) {
  const int d = 2 * n + 1;
  WeakStructure S;
  S.name = "sas-r" + std::to_string(d);
  S.declared = Hyp::H3;
  S.profile = {true, true, true};

  Chart chart;
  chart.dim = d;
  chart.name = S.name;
  chart.box_lo = const_box(d, -1.0);
  chart.box_hi = const_box(d, 1.0);
  chart.in_domain = [](const Vec&) { return true; };

  // coordinates: x^i = u[0..n), y^i = u[n..2n), z = u[2n]
  auto eta_comps = [n, d](const auto& u) {
    using Sc = std::decay_t<decltype(u[0])>;
    std::vector<Sc> eta(d, Sc{});
    for (int i = 0; i < n; ++i) eta[i] = -0.5 * u[n + i];
    eta[d - 1] = Sc{} + 0.5;
    return eta;
  };

  auto metric = [n, d, eta_comps](const auto& u) {
    using Sc = std::decay_t<decltype(u[0])>;
    auto eta = eta_comps(u);
    Grid2<Sc> g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        g(i, j) = eta[i] * eta[j];
        if (i == j && i < 2 * n) g(i, j) += 0.25;
      }
    return g;
  };
  bind_metric(chart, metric);
  S.chart = chart;

  S.phi = [n, d](const JetV& u) {
    Grid2<Jet> phi(d, d);
    for (int j = 0; j < n; ++j) {
      phi(n + j, j) = Jet(-1.0);           // phi(dx_j) = -dy_j
      phi(j, n + j) = Jet(1.0);            // phi(dy_j) = dx_j + y^j dz
      phi(d - 1, n + j) = u[n + j];
    }
    return phi;
  };
  S.Q = [d](const JetV&) {
    Grid2<Jet> Q(d, d);
    for (int i = 0; i < d; ++i) Q(i, i) = Jet(1.0);
    return Q;
  };
  S.xi = [d](const JetV&) {
    JetV xi(d, Jet(0.0));
    xi[d - 1] = Jet(2.0);
    return xi;
  };
  S.eta = [eta_comps](const JetV& u) { return eta_comps(u); };
  return S;
}

WeakStructure build_sasakian_sphere(int n) {
  const int d = 2 * n + 1;
  WeakStructure S;
  S.name = "sas-s" + std::to_string(d);
  S.declared = Hyp::H3;
  S.profile = {true, true, true};

  Chart chart = sphere_chart(d);
  chart.name = S.name;
  S.chart = chart;

  // chart components of a tangent ambient field: solve (E^T E) c = E^T v
  auto tangent_to_chart = [d](const auto& E, const auto& rhs_cols) {
    using Sc = std::decay_t<decltype(E[0][0])>;
    Grid2<Sc> M(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) M(i, j) = dot_amb(E[i], E[j]);
    return solve_linear(M, rhs_cols);
  };

  S.phi = [d, tangent_to_chart](const JetV& u) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    stereographic_frame(u, P, E);
    // columns: E^T tan(J E_j) = E^T (J E_j - <J E_j, P> P)
    Grid2<Jet> B(d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<Jet> JE = ambient_J(E[j]);
      Jet ncomp = dot_amb(JE, P);
      std::vector<Jet> v(d + 1);
      for (int a = 0; a <= d; ++a) v[a] = JE[a] - ncomp * P[a];
      for (int i = 0; i < d; ++i) B(i, j) = dot_amb(E[i], v);
    }
    return tangent_to_chart(E, B);
  };
  S.xi = [d, tangent_to_chart](const JetV& u) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    stereographic_frame(u, P, E);
    std::vector<Jet> xi_amb = ambient_J(P);
    for (Jet& c : xi_amb) c = -c;
    Grid2<Jet> B(d, 1);
    for (int i = 0; i < d; ++i) B(i, 0) = dot_amb(E[i], xi_amb);
    Grid2<Jet> X = tangent_to_chart(E, B);
    JetV out(d);
    for (int i = 0; i < d; ++i) out[i] = X(i, 0);
    return out;
  };
  S.eta = [d](const JetV& u) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    stereographic_frame(u, P, E);
    std::vector<Jet> xi_amb = ambient_J(P);
    for (Jet& c : xi_amb) c = -c;
    JetV out(d);
    for (int i = 0; i < d; ++i) out[i] = dot_amb(xi_amb, E[i]);
    return out;
  };
  S.Q = [d](const JetV&) {
    Grid2<Jet> Q(d, d);
    for (int i = 0; i < d; ++i) Q(i, i) = Jet(1.0);
    return Q;
  };
  return S;
}

WeakStructure build_nearly_sasakian_s5() {
  const int d = 5;
  WeakStructure S;
  S.name = "nsas-s5";
  S.declared = Hyp::H3;
  S.profile = {false, false, false};

  Chart chart = sphere_chart(d);
  chart.name = S.name;
  // induced metric of the radius-1/sqrt2 sphere: 2 (1+|u|^2)^{-2} delta
  auto metric = [d](const auto& x) {
    using Sc = std::decay_t<decltype(x[0])>;
    Sc w = inverse(1.0 + norm2(x));
    Sc f = 2.0 * w * w;
    Grid2<Sc> g(d, d);
    for (int i = 0; i < d; ++i) g(i, i) = f;
    return g;
  };
  bind_metric(chart, metric);
  S.chart = chart;

  // S^5 realized as the geodesic sphere of radius pi/4 about e_7 in the
  // nearly Kaehler S^6 = unit sphere of Im O: p(u) = (q(u)/sqrt2, 1/sqrt2)
  // with q the stereographic unit S^5 in R^6. That hypersurface is totally
  // umbilical with shape operator the identity, and the induced structure
  //   nu = sqrt2 e_7 - p,  xi = -J nu = sqrt2 (e_7 x p),
  //   phi X = tan(p x X)   (nu component removed)
  // is nearly Sasakian and non-Sasakian.
  auto frame7 = [](const JetV& u, std::vector<Jet>& P7,
                   std::vector<std::vector<Jet>>& E7) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    stereographic_frame(u, P, E);
    const double is2 = 1.0 / std::sqrt(2.0);
    P7.assign(7, Jet{});
    for (int a = 0; a < 6; ++a) P7[a] = P[a] * is2;
    P7[6] = Jet(is2);
    E7.assign(5, std::vector<Jet>(7, Jet{}));
    for (int i = 0; i < 5; ++i)
      for (int a = 0; a < 6; ++a) E7[i][a] = E[i][a] * is2;
  };
  auto normal7 = [](const std::vector<Jet>& P) {
    // unit normal inside S^6 (outward from the e_7 pole)
    std::vector<Jet> nu(7);
    for (int a = 0; a < 7; ++a) nu[a] = P[a];
    nu[6] -= std::sqrt(2.0);
    return nu;
  };
  auto xi7 = [normal7](const std::vector<Jet>& P) {
    // -J nu = nu x p
    return cross7(normal7(P), P);
  };
  auto tangent_to_chart = [d](const std::vector<std::vector<Jet>>& E, Grid2<Jet> B) {
    Grid2<Jet> M(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) M(i, j) = dot_amb(E[i], E[j]);
    return solve_linear(M, B);
  };

  S.phi = [d, frame7, normal7, tangent_to_chart](const JetV& u) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    frame7(u, P, E);
    std::vector<Jet> nrm = normal7(P);
    Grid2<Jet> B(d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<Jet> JE = cross7(P, E[j]);
      Jet ncomp = dot_amb(JE, nrm);
      std::vector<Jet> v(7);
      for (int a = 0; a < 7; ++a) v[a] = JE[a] - ncomp * nrm[a];
      for (int i = 0; i < d; ++i) B(i, j) = dot_amb(E[i], v);
    }
    return tangent_to_chart(E, B);
  };
  S.xi = [d, frame7, xi7, tangent_to_chart](const JetV& u) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    frame7(u, P, E);
    std::vector<Jet> xi_amb = xi7(P);
    Grid2<Jet> B(d, 1);
    for (int i = 0; i < d; ++i) B(i, 0) = dot_amb(E[i], xi_amb);
    Grid2<Jet> X = tangent_to_chart(E, B);
    JetV out(d);
    for (int i = 0; i < d; ++i) out[i] = X(i, 0);
    return out;
  };
  S.eta = [d, frame7, xi7](const JetV& u) {
    std::vector<Jet> P;
    std::vector<std::vector<Jet>> E;
    frame7(u, P, E);
    std::vector<Jet> xi_amb = xi7(P);
    JetV out(d);
    for (int i = 0; i < d; ++i) out[i] = dot_amb(xi_amb, E[i]);
    return out;
  };
  S.Q = [d](const JetV&) {
    Grid2<Jet> Q(d, d);
    for (int i = 0; i < d; ++i) Q(i, i) = Jet(1.0);
    return Q;
  };
  return S;
}

WeakStructure build_weak_deformation(const WeakStructure& base, double a) {
  if (a <= 0.0) throw std::invalid_argument("weak deformation requires a > 0");
  WeakStructure S = base;
  std::ostringstream name;
  name << "weak-" << base.name.substr(base.name.find('-') + 1) << "-a" << a;
  S.name = name.str();
  S.chart.name = S.name;
  S.declared = (a == 1.0) ? base.declared : Hyp::H0;
  S.profile = (a == 1.0) ? base.profile : Profile{false, false, false};

  const int d = base.chart.dim;
  auto base_phi = base.phi;
  S.phi = [base_phi, a, d](const JetV& u) {
    Grid2<Jet> phi = base_phi(u);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) phi(i, j) = phi(i, j) * a;
    return phi;
  };
  auto base_xi = base.xi;
  auto base_eta = base.eta;
  S.Q = [base_xi, base_eta, a, d](const JetV& u) {
    JetV xi = base_xi(u);
    JetV eta = base_eta(u);
    Grid2<Jet> Q(d, d);
    const double a2 = a * a;
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        Q(k, j) = (1.0 - a2) * xi[k] * eta[j];
        if (k == j) Q(k, j) += a2;
      }
    return Q;
  };
  return S;
}

const std::vector<ModelEntry>& model_registry() {
  static const std::vector<ModelEntry> registry = [] {
    std::vector<ModelEntry> entries;
    auto add = [&entries](WeakStructure s) {
      ModelEntry e;
      e.name = s.name;
      e.dim = s.chart.dim;
      e.declared = s.declared;
      e.profile = s.profile;
      e.structure = std::move(s);
      entries.push_back(std::move(e));
    };
    add(build_sasakian_r2n1(2));
    add(build_sasakian_r2n1(3));
    add(build_sasakian_sphere(2));
    add(build_sasakian_sphere(3));
    add(build_nearly_sasakian_s5());
    WeakStructure base = build_sasakian_r2n1(2);
    add(build_weak_deformation(base, 1.5));
    add(build_weak_deformation(base, 2.0));
    std::sort(entries.begin(), entries.end(),
              [](const ModelEntry& a, const ModelEntry& b) { return a.name < b.name; });
    return entries;
  }();
  return registry;
}

const ModelEntry& find_model(const std::string& name) {
  for (const ModelEntry& e : model_registry())
    if (e.name == name) return e;
  throw UnknownNameError("unknown model: " + name);
}

std::vector<std::string> model_names() {
  std::vector<std::string> names;
  for (const ModelEntry& e : model_registry()) names.push_back(e.name);
  return names;
}

}  // namespace wacm
