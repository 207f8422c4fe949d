#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wacm/models.hpp"
#include "wacm/sampling.hpp"
#include "wacm/structure.hpp"

using namespace wacm;

TEST_CASE("every registered structure passes the axiom suite") {
  for (const ModelEntry& e : model_registry()) {
    AxiomReport rep = validate_structure(e.structure, 20, 42);
    INFO(e.name);
    CHECK(rep.all_pass());
    for (const AxiomCheck& c : rep.checks) {
      INFO(c.id << " " << c.max_residual);
      CHECK(c.max_residual < 1e-8);
    }
  }
}

TEST_CASE("a non-skew perturbation of phi is caught by the skewness axiom") {
  WeakStructure bad = build_sasakian_r2n1(2);
  auto base_phi = bad.phi;
  bad.phi = [base_phi](const JetV& x) {
    Grid2<Jet> phi = base_phi(x);
    // symmetric perturbation on several entries
    phi(0, 1) += 0.01;
    phi(1, 0) += 0.01;
    phi(2, 3) += 0.01;
    phi(3, 2) += 0.01;
    phi(0, 4) += 0.01;
    phi(4, 0) += 0.01;
    phi(2, 2) += 0.01;
    return phi;
  };
  AxiomReport rep = validate_structure(bad, 10, 7);
  CHECK_FALSE(rep.all_pass());
  double skew_res = 0.0;
  for (const AxiomCheck& c : rep.checks)
    if (c.id == "AX-6") skew_res = c.max_residual;
  CHECK(skew_res >= 5e-3);
}

TEST_CASE("h vanishes on Sasakian models and has unit norm on the nearly Sasakian sphere") {
  std::mt19937_64 rng(5);
  for (const char* name : {"sas-r5", "sas-s5", "sas-r7", "sas-s7"}) {
    const ModelEntry& e = find_model(name);
    Vec p = sample_point(e.structure.chart, rng);
    DerivedTensors dt = compute_h(e.structure, p);
    INFO(name);
    CHECK(dt.h_norm < 1e-10);
    CHECK(dt.qTilde.norm() < 1e-12);
  }
  const ModelEntry& e = find_model("nsas-s5");
  SampleSet s = draw_samples(e.structure.chart, 10, 1, 99);
  for (const Vec& p : s.points) {
    DerivedTensors dt = compute_h(e.structure, p);
    CHECK(dt.h_norm > 0.5);
    CHECK(dt.h_norm == doctest::Approx(1.0).epsilon(1e-9));  // golden value
    CHECK(dt.h_xi_residual < 1e-9);
    CHECK(dt.eta_h_residual < 1e-9);
    CHECK(dt.skew_residual < 1e-9);
    CHECK(dt.geodesic_residual < 1e-9);
  }
}

TEST_CASE("nearly Sasakian residual distinguishes the corpus") {
  std::mt19937_64 rng(11);
  {
    const ModelEntry& e = find_model("sas-r5");
    Vec p = sample_point(e.structure.chart, rng);
    Vec Y = sample_unit_vector(5, rng);
    CHECK(nearly_sasakian_residual(e.structure, p, Y) < 1e-9);
  }
  {
    const ModelEntry& e = find_model("nsas-s5");
    Vec p = sample_point(e.structure.chart, rng);
    Vec Y = sample_unit_vector(5, rng);
    CHECK(nearly_sasakian_residual(e.structure, p, Y) < 1e-8);
  }
  {
    const ModelEntry& e = find_model("weak-r5-a2");
    Vec p = sample_point(e.structure.chart, rng);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial)
      worst = std::max(worst,
                       nearly_sasakian_residual(e.structure, p, sample_unit_vector(5, rng)));
    CHECK(worst >= 0.1);
  }
}

TEST_CASE("Sasakian residual pair: formula and normality") {
  std::mt19937_64 rng(13);
  {
    const ModelEntry& e = find_model("sas-s7");
    Vec p = sample_point(e.structure.chart, rng);
    Vec X = sample_unit_vector(7, rng), Y = sample_unit_vector(7, rng);
    SasakianResiduals r = sasakian_residuals(e.structure, p, X, Y);
    CHECK(r.formula < 1e-8);
    CHECK(r.normality < 1e-8);
  }
  {
    const ModelEntry& e = find_model("nsas-s5");
    SampleSet s = draw_samples(e.structure.chart, 5, 8, 17);
    double worst_formula = 0.0;
    for (size_t pi = 0; pi < s.points.size(); ++pi) {
      StructureData G = structure_data(e.structure, s.points[pi]);
      for (const auto& t : s.tuples[pi]) {
        SasakianResiduals r = sasakian_residuals(G, t[0], t[1]);
        worst_formula = std::max(worst_formula, r.formula);
      }
    }
    CHECK(worst_formula >= 0.1);
  }
  {
    const ModelEntry& e = find_model("weak-r5-a1.5");
    SampleSet s = draw_samples(e.structure.chart, 4, 8, 19);
    double worst_norm = 0.0;
    for (size_t pi = 0; pi < s.points.size(); ++pi) {
      StructureData G = structure_data(e.structure, s.points[pi]);
      for (const auto& t : s.tuples[pi]) {
        SasakianResiduals r = sasakian_residuals(G, t[0], t[1]);
        worst_norm = std::max(worst_norm, r.normality);
      }
    }
    CHECK(worst_norm > 1e-3);  // deformation is not normal
  }
}

TEST_CASE("delta tensor: zero for Q = id, multilinear, symmetric per the remark") {
  std::mt19937_64 rng(23);
  {
    const ModelEntry& e = find_model("nsas-s5");
    Vec p = sample_point(e.structure.chart, rng);
    StructureData G = structure_data(e.structure, p);
    Vec X = sample_unit_vector(5, rng), Y = sample_unit_vector(5, rng),
        Z = sample_unit_vector(5, rng), V = sample_unit_vector(5, rng);
    CHECK(std::abs(G.delta4(X, Y, Z, V)) < 1e-12);  // Qt = 0 kills every term
  }
  {
    // multilinearity on a structure with Qt != 0
    const ModelEntry& e = find_model("weak-r5-a1.5");
    Vec p = sample_point(e.structure.chart, rng);
    StructureData G = structure_data(e.structure, p);
    Vec X = sample_unit_vector(5, rng), X2 = sample_unit_vector(5, rng),
        Y = sample_unit_vector(5, rng), Z = sample_unit_vector(5, rng),
        V = sample_unit_vector(5, rng);
    const double a = 0.37, b = -1.21;
    const double lhs = G.delta4(a * X + b * X2, Y, Z, V);
    const double rhs = a * G.delta4(X, Y, Z, V) + b * G.delta4(X2, Y, Z, V);
    CHECK(rel_residual(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("eta is the g-dual of xi") {
  std::mt19937_64 rng(29);
  for (const ModelEntry& e : model_registry()) {
    Vec p = sample_point(e.structure.chart, rng);
    StructureData G = structure_data(e.structure, p);
    CHECK((G.geo.g * G.xi - G.eta).norm() / (1.0 + G.eta.norm()) < 1e-10);
  }
}

TEST_CASE("ker-eta basis is g-orthonormal and annihilated by eta") {
  std::mt19937_64 rng(31);
  const ModelEntry& e = find_model("nsas-s5");
  Vec p = sample_point(e.structure.chart, rng);
  StructureData G = structure_data(e.structure, p);
  std::vector<Vec> basis = ker_eta_basis(G);
  REQUIRE(static_cast<int>(basis.size()) == G.d - 1);
  for (size_t a = 0; a < basis.size(); ++a) {
    CHECK(std::abs(G.eta_of(basis[a])) < 1e-12);
    for (size_t b = 0; b < basis.size(); ++b)
      CHECK(G.ip(basis[a], basis[b]) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
  }
}

TEST_CASE("H1 consequences hold on the nearly Sasakian sphere") {
  std::mt19937_64 rng(37);
  const ModelEntry& e = find_model("nsas-s5");
  Vec p = sample_point(e.structure.chart, rng);
  StructureData G = structure_data(e.structure, p);
  // nabla_xi Qt = 0 and skewness of nabla phi
  for (int trial = 0; trial < 6; ++trial) {
    Vec X = sample_unit_vector(5, rng), Y = sample_unit_vector(5, rng),
        Z = sample_unit_vector(5, rng);
    CHECK(G.gnorm(G.dQt(G.xi, X)) < 1e-8);
    CHECK(rel_residual(G.ip(G.dphi(Y, X), Z), -G.ip(G.dphi(Y, Z), X)) < 1e-9);
  }
}
