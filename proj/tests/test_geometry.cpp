#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wacm/geometry.hpp"
#include "wacm/models.hpp"
#include "wacm/sampling.hpp"
#include "wacm/structure.hpp"

using namespace wacm;

TEST_CASE("flat space has vanishing Christoffel symbols and curvature") {
  Chart chart = euclidean_chart(3);
  Vec p(3);
  p << 0.4, -0.2, 0.9;
  PointGeometry G = point_geometry(chart, p);
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(G.gamma(m, i, j) == doctest::Approx(0.0));
  std::mt19937_64 rng(1);
  Vec X = sample_unit_vector(3, rng), Y = sample_unit_vector(3, rng),
      Z = sample_unit_vector(3, rng);
  CHECK(G.curv(X, Y, Z).norm() < 1e-14);
}

TEST_CASE("round S^2 in the stereographic chart matches the conformal closed form") {
  // g = e^{2 lam} delta with lam = log(2/(1+|x|^2)):
  // Gamma^k_ij = d_j lam delta^k_i + d_i lam delta^k_j - d^k lam delta_ij
  Chart chart = sphere_chart(2);
  Vec p(2);
  p << 0.3, -0.1;
  PointGeometry G = point_geometry(chart, p);
  const double n2 = p.squaredNorm();
  Vec dlam = -2.0 * p / (1.0 + n2);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double expected = (k == i ? dlam[j] : 0.0) + (k == j ? dlam[i] : 0.0) -
                          (i == j ? dlam[k] : 0.0);
        CHECK(G.gamma(k, i, j) == doctest::Approx(expected).epsilon(1e-12));
      }
}

TEST_CASE("Christoffel symbols match the finite-difference oracle on the Sasakian R^5 metric") {
  const ModelEntry& e = find_model("sas-r5");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Vec p = sample_point(e.structure.chart, rng);
    PointGeometry G = point_geometry(e.structure.chart, p);
    FiniteDifferenceGeometry F = finite_difference_geometry(e.structure.chart, p, 1e-5);
    double worst = 0.0;
    for (int m = 0; m < 5; ++m)
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          worst = std::max(worst, std::abs(G.gamma(m, i, j) - F.gamma(m, i, j)) /
                                      (1.0 + std::abs(F.gamma(m, i, j))));
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("metric compatibility: nabla g = 0 on every model chart") {
  for (const ModelEntry& e : model_registry()) {
    SampleSet s = draw_samples(e.structure.chart, 8, 1, 3);
    for (const Vec& p : s.points) {
      TensorField g_field;
      g_field.valence = Valence::T02;
      auto metric = e.structure.chart.metric;
      g_field.rank2 = [metric](const JetV& x) { return metric(x); };
      CovDeriv ng = covariant_derivative(e.structure.chart, g_field, p);
      double worst = 0.0;
      const int d = e.dim;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) worst = std::max(worst, std::abs(ng.r3(i, j, k)));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("the identity (1,1)-tensor is parallel and its second derivative vanishes") {
  Chart chart = sphere_chart(3);
  Vec p(3);
  p << 0.2, 0.5, -0.3;
  TensorField id_field;
  id_field.valence = Valence::T11;
  id_field.rank2 = [](const JetV& x) {
    const int d = static_cast<int>(x.size());
    Grid2<Jet> T(d, d);
    for (int i = 0; i < d; ++i) T(i, i) = Jet(1.0);
    return T;
  };
  CovDeriv nT = covariant_derivative(chart, id_field, p);
  Grid4<double> n2T = second_covariant_derivative_11(chart, id_field, p);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) {
        worst = std::max(worst, std::abs(nT.r3(i, k, j)));
        for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(n2T(i, j, k, l)));
      }
  CHECK(worst < 1e-12);
}

TEST_CASE("Sasakian R^5 satisfies the covariant-derivative characterization") {
  const ModelEntry& e = find_model("sas-r5");
  std::mt19937_64 rng(17);
  Vec p = sample_point(e.structure.chart, rng);
  StructureData G = structure_data(e.structure, p);
  for (int trial = 0; trial < 10; ++trial) {
    Vec X = sample_unit_vector(5, rng), Y = sample_unit_vector(5, rng);
    Vec lhs = G.dphi(X, Y);
    Vec rhs = G.ip(X, Y) * G.xi - G.eta_of(Y) * X;
    CHECK(rel_residual(G, lhs, rhs) < 1e-9);
  }
}

TEST_CASE("curvature symmetries hold at random samples") {
  std::mt19937_64 rng(23);
  for (const char* name : {"sas-r5", "nsas-s5", "sas-s7"}) {
    const ModelEntry& e = find_model(name);
    SampleSet s = draw_samples(e.structure.chart, 5, 4, 29);
    for (size_t pi = 0; pi < s.points.size(); ++pi) {
      PointGeometry G = point_geometry(e.structure.chart, s.points[pi]);
      for (const auto& t : s.tuples[pi]) {
        const Vec &X = t[0], &Y = t[1], &Z = t[2], &V = t[3];
        const double scale = 1.0 + std::abs(G.curv4(X, Y, Z, V));
        CHECK(std::abs(G.curv4(X, Y, Z, V) + G.curv4(Y, X, Z, V)) / scale < 1e-9);
        CHECK(std::abs(G.curv4(X, Y, Z, V) + G.curv4(X, Y, V, Z)) / scale < 1e-9);
        CHECK(std::abs(G.curv4(X, Y, Z, V) - G.curv4(Z, V, X, Y)) / scale < 1e-9);
        // first Bianchi
        Vec bianchi = G.curv(X, Y, Z) + G.curv(Y, Z, X) + G.curv(Z, X, Y);
        CHECK(G.gnorm(bianchi) < 1e-9);
      }
    }
  }
}

TEST_CASE("round unit spheres have constant curvature one") {
  for (const char* name : {"sas-s5", "sas-s7"}) {
    const ModelEntry& e = find_model(name);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
      Vec p = sample_point(e.structure.chart, rng);
      PointGeometry G = point_geometry(e.structure.chart, p);
      Vec X = sample_unit_vector(e.dim, rng), Y = sample_unit_vector(e.dim, rng),
          Z = sample_unit_vector(e.dim, rng);
      Vec expected = G.ip(Y, Z) * X - G.ip(X, Z) * Y;
      CHECK(G.gnorm(G.curv(X, Y, Z) - expected) / (1.0 + G.gnorm(expected)) < 1e-9);
    }
  }
}

namespace {

// random polynomial (1,1)-field with seeded coefficients
TensorField random_polynomial_field(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> A(d * d), B(d * d * d), C(d * d * d * d);
  for (double& v : A) v = u(rng);
  for (double& v : B) v = u(rng);
  for (double& v : C) v = u(rng);
  TensorField T;
  T.valence = Valence::T11;
  T.rank2 = [d, A, B, C](const JetV& x) {
    Grid2<Jet> out(d, d);
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        Jet v(A[k * d + j]);
        for (int m = 0; m < d; ++m) {
          v += B[(k * d + j) * d + m] * x[m];
          for (int n = 0; n < d; ++n)
            v += C[((k * d + j) * d + m) * d + n] * x[m] * x[n];
        }
        out(k, j) = v;
      }
    return out;
  };
  return T;
}

}  // namespace

TEST_CASE("Ricci identity for arbitrary polynomial (1,1)-fields on round S^3") {
  Chart chart = sphere_chart(3);
  TensorField T = random_polynomial_field(3, 101);
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int trial = 0; trial < 6; ++trial) {
    Vec p(3);
    p << u(rng), u(rng), u(rng);
    PointGeometry G = point_geometry(chart, p);
    Grid4<double> n2T = second_covariant_derivative_11(chart, T, p);
    Grid2<Jet> Tj = T.rank2(seed_point(p));
    Mat Tm(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Tm(i, j) = Tj(i, j).val;

    Vec X = sample_unit_vector(3, rng), Y = sample_unit_vector(3, rng),
        V = sample_unit_vector(3, rng), Z = sample_unit_vector(3, rng);
    auto n2 = [&](const Vec& A, const Vec& B, const Vec& C) {
      Vec out = Vec::Zero(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) {
            const double w = A[i] * B[j] * C[l];
            if (w == 0.0) continue;
            for (int k = 0; k < 3; ++k) out[k] += w * n2T(i, j, k, l);
          }
      return out;
    };
    // commutation formula: (nabla2_{X,Y} - nabla2_{Y,X}) T = [R_{X,Y}, T]
    const double lhs = G.ip(n2(X, Y, V) - n2(Y, X, V), Z);
    const double rhs = G.ip(G.curv(X, Y, Tm * V) - Tm * G.curv(X, Y, V), Z);
    CHECK(rel_residual(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("lower-slot asymmetry of the second derivative equals the curvature term") {
  Chart chart = sphere_chart(2);
  TensorField T = random_polynomial_field(2, 202);
  Vec p(2);
  p << 0.25, -0.4;
  PointGeometry G = point_geometry(chart, p);
  Grid4<double> n2T = second_covariant_derivative_11(chart, T, p);
  Grid2<Jet> Tj = T.rank2(seed_point(p));
  Mat Tm(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Tm(i, j) = Tj(i, j).val;

  // (nabla2_{i,j} - nabla2_{j,i}) T = [R(e_i,e_j), T]
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) {
        Vec comm = Vec::Zero(2);
        for (int k = 0; k < 2; ++k) comm[k] = n2T(i, j, k, l) - n2T(j, i, k, l);
        Vec el = Vec::Unit(2, l);
        Vec curv_term =
            G.curv(Vec::Unit(2, i), Vec::Unit(2, j), Tm * el) -
            Tm * G.curv(Vec::Unit(2, i), Vec::Unit(2, j), el);
        CHECK((comm - curv_term).norm() < 1e-9);
      }
}

TEST_CASE("domain and singular-metric errors") {
  Chart chart = sphere_chart(3);
  Vec far(3);
  far << 10.0, 0.0, 0.0;
  CHECK_THROWS_AS((void)point_geometry(chart, far), DomainError);

  Chart bad;
  bad.dim = 2;
  bad.name = "degenerate";
  bad.box_lo = Vec::Constant(2, -1.0);
  bad.box_hi = Vec::Constant(2, 1.0);
  bad.in_domain = [](const Vec&) { return true; };
  auto metric = [](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    Grid2<S> g(2, 2);
    g(0, 0) = x[0] * x[0];  // vanishes at x0 = 0
    g(1, 1) = S{} + 1.0;
    return g;
  };
  bind_metric(bad, metric);
  Vec origin = Vec::Zero(2);
  CHECK_THROWS_AS((void)point_geometry(bad, origin), SingularMetricError);
}
