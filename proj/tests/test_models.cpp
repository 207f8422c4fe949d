#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wacm/forms.hpp"
#include "wacm/models.hpp"
#include "wacm/sampling.hpp"
#include "wacm/spectral.hpp"
#include "wacm/structure.hpp"

using namespace wacm;

TEST_CASE("registry contents and lookup") {
  std::vector<std::string> names = model_names();
  CHECK(names ==
        std::vector<std::string>{"nsas-s5", "sas-r5", "sas-r7", "sas-s5", "sas-s7",
                                 "weak-r5-a1.5", "weak-r5-a2"});
  CHECK(find_model("nsas-s5").dim == 5);
  CHECK(find_model("sas-r7").dim == 7);
  CHECK_FALSE(find_model("nsas-s5").profile.sasakian);
  CHECK(find_model("sas-s5").profile.sasakian);
  CHECK_THROWS_AS((void)find_model("no-such-model"), UnknownNameError);
}

TEST_CASE("octonion cross product: table antisymmetry and norm identity") {
  std::mt19937_64 rng(3);
  // basis products
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Vec ei = Vec::Unit(7, i), ej = Vec::Unit(7, j);
      Vec cij = octonion_cross(ei, ej);
      Vec cji = octonion_cross(ej, ei);
      CHECK((cij + cji).norm() < 1e-15);
      if (i == j) CHECK(cij.norm() < 1e-15);
      else CHECK(cij.norm() == doctest::Approx(1.0));
      CHECK(std::abs(cij.dot(ei)) < 1e-15);
      CHECK(std::abs(cij.dot(ej)) < 1e-15);
    }
  // bilinearity and |X x Y|^2 = |X|^2 |Y|^2 - <X,Y>^2 on random vectors
  std::normal_distribution<double> n(0.0, 1.0);
  auto rand7 = [&] {
    Vec v(7);
    for (int i = 0; i < 7; ++i) v[i] = n(rng);
    return v;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Vec X = rand7(), Y = rand7(), Z = rand7();
    const double a = n(rng);
    CHECK((octonion_cross(X + a * Z, Y) - octonion_cross(X, Y) -
           a * octonion_cross(Z, Y))
              .norm() < 1e-12);
    const double lhs = octonion_cross(X, Y).squaredNorm();
    const double rhs = X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(std::abs(octonion_cross(X, Y).dot(X)) < 1e-10);
  }
}

TEST_CASE("stereographic sphere chart has the conformal round metric") {
  Chart chart = sphere_chart(5);
  std::mt19937_64 rng(7);
  Vec p = sample_point(chart, rng);
  Mat g = chart.metric_value(p);
  const double f = 4.0 / std::pow(1.0 + p.squaredNorm(), 2);
  CHECK((g - f * Mat::Identity(5, 5)).norm() < 1e-14);
}

TEST_CASE("Sasakian spheres: curvature, contact relation, contact volume") {
  std::mt19937_64 rng(11);
  const ModelEntry& e = find_model("sas-s5");
  SampleSet s = draw_samples(e.structure.chart, 5, 4, 13);
  for (size_t pi = 0; pi < s.points.size(); ++pi) {
    StructureData G = structure_data(e.structure, s.points[pi]);
    for (const auto& t : s.tuples[pi]) {
      const Vec &X = t[0], &Y = t[1], &Z = t[2];
      Vec expected = G.ip(Y, Z) * X - G.ip(X, Z) * Y;
      CHECK(rel_residual(G, G.curv(X, Y, Z), expected) < 1e-9);
      CHECK(rel_residual(G.deta(X, Y), G.ip(X, G.phi * Y)) < 1e-9);
    }
    CHECK(std::abs(contact_volume(G.eta, G.deta_form)) > 1e-8);
  }
}

TEST_CASE("nearly Sasakian S^5 profile: h nonzero, non-Sasakian, nearly Sasakian") {
  const ModelEntry& e = find_model("nsas-s5");
  SampleSet s = draw_samples(e.structure.chart, 20, 4, 17);
  std::vector<double> lambda2;
  for (size_t pi = 0; pi < s.points.size(); ++pi) {
    StructureData G = structure_data(e.structure, s.points[pi]);
    for (const auto& t : s.tuples[pi]) {
      CHECK(nearly_sasakian_residual(G, t[0]) < 1e-8);
    }
    SpectrumResult sp = h2_spectrum(G);
    REQUIRE(sp.cluster_values.size() == 2);
    CHECK(sp.cluster_mult[0] == 4);
    CHECK(sp.cluster_mult[1] == 1);
    lambda2.push_back(-sp.cluster_values[0]);
  }
  // h^2 spectrum identical across points, with the golden eigenvalue -1
  for (double l2 : lambda2) CHECK(l2 == doctest::Approx(lambda2.front()).epsilon(1e-8));
  CHECK(lambda2.front() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("weak deformation algebra") {
  WeakStructure base = build_sasakian_r2n1(2);
  CHECK_THROWS_AS((void)build_weak_deformation(base, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)build_weak_deformation(base, -1.5), std::invalid_argument);

  // a = 1 reduces to the base fields exactly
  WeakStructure same = build_weak_deformation(base, 1.0);
  std::mt19937_64 rng(23);
  Vec p = sample_point(base.chart, rng);
  JetV x = seed_point(p);
  Grid2<Jet> f0 = base.phi(x), f1 = same.phi(x);
  Grid2<Jet> q1 = same.Q(x);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(f0(i, j).val == doctest::Approx(f1(i, j).val));
      CHECK(q1(i, j).val == doctest::Approx(i == j ? 1.0 : 0.0));
    }

  // a = 1.5: compatibility holds with Qt != 0
  const ModelEntry& e = find_model("weak-r5-a1.5");
  StructureData G = structure_data(e.structure, p);
  CHECK(G.Qt.norm() > 0.1);
  for (int trial = 0; trial < 8; ++trial) {
    Vec X = sample_unit_vector(5, rng), Y = sample_unit_vector(5, rng);
    CHECK(rel_residual(G.ip(G.phi * X, G.phi * Y),
                       G.ip(X, G.Q * Y) - G.eta_of(X) * G.eta_of(Y)) < 1e-10);
  }

  // a = 2: [Q, phi] = 0 and eta o Q = eta
  const ModelEntry& e2 = find_model("weak-r5-a2");
  StructureData G2 = structure_data(e2.structure, p);
  for (int trial = 0; trial < 8; ++trial) {
    Vec X = sample_unit_vector(5, rng);
    CHECK(G2.gnorm(G2.Q * (G2.phi * X) - G2.phi * (G2.Q * X)) < 1e-12);
    CHECK(rel_residual(G2.eta_of(G2.Q * X), G2.eta_of(X)) < 1e-12);
  }
}

TEST_CASE("corrupting the metric scale breaks the Sasakian characterization") {
  WeakStructure bad = build_sasakian_r2n1(2);
  Chart chart = bad.chart;
  auto base_metric = chart.metric;
  auto base_value = chart.metric_value;
  chart.metric = [base_metric](const JetV& x) {
    Grid2<Jet> g = base_metric(x);
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g(i, j) = g(i, j) * 2.0;
    return g;
  };
  chart.metric_value = [base_value](const Vec& p) { return Mat(2.0 * base_value(p)); };
  bad.chart = chart;

  std::mt19937_64 rng(31);
  Vec p = sample_point(bad.chart, rng);
  StructureData G = structure_data(bad, p);
  double worst = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    Vec X = sample_unit_vector(5, rng), Y = sample_unit_vector(5, rng);
    Vec lhs = G.dphi(X, Y);
    Vec rhs = G.ip(X, Y) * G.xi - G.eta_of(Y) * X;
    worst = std::max(worst, rel_residual(G, lhs, rhs));
  }
  CHECK(worst >= 0.1);
}

TEST_CASE("declared profiles match measured behavior") {
  std::mt19937_64 rng(41);
  for (const ModelEntry& e : model_registry()) {
    SampleSet s = draw_samples(e.structure.chart, 5, 4, 43);
    double h_norm = 0.0, sas = 0.0, wc = 0.0;
    for (size_t pi = 0; pi < s.points.size(); ++pi) {
      StructureData G = structure_data(e.structure, s.points[pi]);
      h_norm = std::max(h_norm, compute_h(G).h_norm);
      for (const auto& t : s.tuples[pi]) {
        SasakianResiduals r = sasakian_residuals(G, t[0], t[1]);
        sas = std::max(sas, std::max(r.formula, r.normality));
        wc = std::max(wc, rel_residual(G.deta(t[0], t[1]), G.ip(t[0], G.phi * t[1])));
      }
    }
    INFO(e.name);
    CHECK(e.profile.h_zero == (h_norm < 1e-8));
    CHECK(e.profile.sasakian == (sas < 1e-8));
    CHECK(e.profile.weak_contact == (wc < 1e-8));
  }
}
