#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wacm/models.hpp"
#include "wacm/sampling.hpp"
#include "wacm/spectral.hpp"
#include "wacm/structure.hpp"

using namespace wacm;

TEST_CASE("Sasakian models have the trivial h^2 spectrum") {
  std::mt19937_64 rng(3);
  const ModelEntry& e = find_model("sas-r5");
  Vec p = sample_point(e.structure.chart, rng);
  SpectrumResult sp = h2_spectrum(structure_data(e.structure, p));
  REQUIRE(sp.cluster_values.size() == 1);
  CHECK(sp.cluster_mult[0] == 5);
  CHECK(std::abs(sp.cluster_values[0]) < 1e-10);
  CHECK(sp.zero_multiplicity == 5);
  CHECK(sp.lambdas.empty());
}

TEST_CASE("nearly Sasakian sphere: spectrum shape, projectors, invariance") {
  std::mt19937_64 rng(7);
  const ModelEntry& e = find_model("nsas-s5");
  Vec p = sample_point(e.structure.chart, rng);
  StructureData G = structure_data(e.structure, p);
  SpectrumResult sp = h2_spectrum(G);

  REQUIRE(sp.cluster_values.size() == 2);
  CHECK(sp.cluster_mult[0] == 4);
  CHECK(sp.cluster_mult[1] == 1);
  CHECK(sp.zero_multiplicity == 1);  // odd, spanned by xi
  CHECK(sp.eigenvalues.maxCoeff() < 1e-10);  // nonpositive
  REQUIRE(sp.lambdas.size() == 1);
  CHECK(sp.lambdas[0] == doctest::Approx(1.0).epsilon(1e-9));

  // projector algebra: idempotent, g-self-adjoint, complete
  Mat I = Mat::Identity(5, 5);
  Mat sum = Mat::Zero(5, 5);
  for (const Mat& P : sp.projectors) {
    CHECK((P * P - P).norm() < 1e-10);
    Mat Pstar = G.geo.g_inv * P.transpose() * G.geo.g;
    CHECK((Pstar - P).norm() < 1e-9);
    sum += P;
  }
  CHECK((sum - I).norm() < 1e-10);

  // the zero cluster is [xi]; D_0 is trivial here
  CHECK((sp.projectors[sp.zero_cluster] - sp.P_xi).norm() < 1e-9);
  CHECK(sp.P_D0.norm() < 1e-9);
  CHECK(g_operator_norm(G, G.Qt * sp.P_D0) < 1e-8);

  // eigendistributions are phi- and h-invariant
  const Mat& P1 = sp.projectors[0];
  CHECK(g_operator_norm(G, (I - P1) * G.phi * P1) < 1e-8);
  CHECK(g_operator_norm(G, (I - P1) * G.h * P1) < 1e-8);
}

TEST_CASE("spectrum constancy across points") {
  {
    ConstancyResult c = spectrum_constancy(find_model("nsas-s5").structure, 30, 42);
    CHECK(c.deviation < 1e-7);
    CHECK(c.multiplicities_constant);
    CHECK(c.multiplicities == std::vector<int>{4, 1});
  }
  {
    ConstancyResult c = spectrum_constancy(find_model("sas-s7").structure, 10, 42);
    CHECK(c.deviation < 1e-9);
  }
}

TEST_CASE("a patchwise-rescaled metric is detected by the constancy check") {
  WeakStructure bad = find_model("nsas-s5").structure;
  Chart chart = bad.chart;
  auto base_metric = chart.metric;
  auto base_value = chart.metric_value;
  // smooth nonuniform rescaling: changes the h^2 eigenvalues point to point
  chart.metric = [base_metric](const JetV& x) {
    Grid2<Jet> g = base_metric(x);
    Jet s = 1.0 + 0.2 * x[0] * x[0];
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g(i, j) = g(i, j) * s;
    return g;
  };
  chart.metric_value = [base_value](const Vec& p) {
    return Mat((1.0 + 0.2 * p[0] * p[0]) * base_value(p));
  };
  bad.chart = chart;
  ConstancyResult c = spectrum_constancy(bad, 20, 42);
  CHECK(c.deviation > 1e-3);
}

TEST_CASE("totally geodesic and integrability residuals") {
  std::mt19937_64 rng(11);
  {
    // [xi] + D_1 spans the whole tangent space on the nearly Sasakian sphere
    const ModelEntry& e = find_model("nsas-s5");
    Vec p = sample_point(e.structure.chart, rng);
    StructureData G = structure_data(e.structure, p);
    TgResult tg = totally_geodesic_residual(G, DistSelector::XiDi, 0);
    CHECK(tg.dist_dim == 5);
    CHECK(tg.tg_residual < 1e-7);
    CHECK(tg.integrability < 1e-7);
    CHECK(tg.integrability_eta < 1e-7);

    // [xi] + D_0 = [xi]: the geodesic flow line
    TgResult tg0 = totally_geodesic_residual(G, DistSelector::XiD0);
    CHECK(tg0.dist_dim == 1);
    CHECK(tg0.tg_residual < 1e-7);

    TgResult tga = totally_geodesic_residual(G, DistSelector::XiAll);
    CHECK(tga.dist_dim == 5);
    CHECK(tga.tg_residual < 1e-7);
  }
  {
    // on a Sasakian model the zero cluster is everything
    const ModelEntry& e = find_model("sas-r5");
    Vec p = sample_point(e.structure.chart, rng);
    StructureData G = structure_data(e.structure, p);
    TgResult tg = totally_geodesic_residual(G, DistSelector::XiD0);
    CHECK(tg.dist_dim == 5);
    CHECK(tg.tg_residual < 1e-10);
    CHECK(tg.integrability < 1e-10);
  }
}

TEST_CASE("near-degenerate clusters raise the crossing diagnostic") {
  WeakStructure tiny = build_weak_deformation(build_sasakian_r2n1(2), 1.002);
  std::mt19937_64 rng(13);
  Vec p = sample_point(tiny.chart, rng);
  StructureData G = structure_data(tiny, p);
  // h = (a-1) phi has h^2 eigenvalue -4e-6: resolvable but within the guard band
  CHECK_THROWS_WITH_AS((void)totally_geodesic_residual(G, DistSelector::XiAll),
                       doctest::Contains("projector not smooth"), std::runtime_error);
}

TEST_CASE("g-operator norm sanity") {
  std::mt19937_64 rng(17);
  const ModelEntry& e = find_model("sas-s5");
  Vec p = sample_point(e.structure.chart, rng);
  StructureData G = structure_data(e.structure, p);
  // phi is a partial isometry: unit norm
  CHECK(g_operator_norm(G, G.phi) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(g_operator_norm(G, Mat(2.5 * Mat::Identity(5, 5))) == doctest::Approx(2.5));
}
