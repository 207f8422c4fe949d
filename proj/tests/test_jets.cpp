#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wacm/jet.hpp"

using namespace wacm;

namespace {

// rational + sqrt composite of the kind the model metrics use
Jet sample_fn(const JetV& x) {
  Jet n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  Jet w = inverse(1.0 + n2);
  Jet q = (x[0] * x[1] - 3.0 * x[2]) * w;
  return q * q + sqrt(1.0 + n2) - 0.5 * x[1] * pow(x[0], 3);
}

double sample_fn_value(const Eigen::Vector3d& p) {
  JetV x = {Jet(p[0]), Jet(p[1]), Jet(p[2])};
  return sample_fn(x).val;
}

}  // namespace

TEST_CASE("jet arithmetic matches analytic derivatives of simple composites") {
  // f = (a*b)/(1+a^2), df/da and d2f/da2 known in closed form
  const double a = 0.7, b = -1.3;
  JetV x = {Jet::variable(a, 0, 2), Jet::variable(b, 1, 2)};
  Jet f = (x[0] * x[1]) * inverse(1.0 + x[0] * x[0]);

  const double den = 1.0 + a * a;
  CHECK(f.val == doctest::Approx(a * b / den).epsilon(1e-14));
  CHECK(f.grad[0] == doctest::Approx(b * (1.0 - a * a) / (den * den)).epsilon(1e-12));
  CHECK(f.grad[1] == doctest::Approx(a / den).epsilon(1e-12));
  // d2f/dadb = (1-a^2)/(1+a^2)^2
  CHECK(f.hess(0, 1) == doctest::Approx((1.0 - a * a) / (den * den)).epsilon(1e-12));
  CHECK(f.hess(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("jet gradient and Hessian agree with central finite differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  const double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector3d p(u(rng), u(rng), u(rng));
    JetV x = seed_point(p);
    Jet f = sample_fn(x);

    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3d pp = p, pm = p;
      pp[i] += h;
      pm[i] -= h;
      const double fd = (sample_fn_value(pp) - sample_fn_value(pm)) / (2.0 * h);
      CHECK(std::abs(f.grad[i] - fd) / (1.0 + std::abs(fd)) < 1e-5);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Eigen::Vector3d pa = p, pb = p, pc = p, pd = p;
        pa[i] += h; pa[j] += h;
        pb[i] += h; pb[j] -= h;
        pc[i] -= h; pc[j] += h;
        pd[i] -= h; pd[j] -= h;
        const double fd = (sample_fn_value(pa) - sample_fn_value(pb) -
                           sample_fn_value(pc) + sample_fn_value(pd)) /
                          (4.0 * h * h);
        CHECK(std::abs(f.hess(i, j) - fd) / (1.0 + std::abs(fd)) < 1e-5);
      }
  }
}

TEST_CASE("jet Hessians stay symmetric through arithmetic") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Vector3d p(u(rng), u(rng), u(rng));
    Jet f = sample_fn(seed_point(p));
    CHECK((f.hess - f.hess.transpose()).norm() < 1e-14);
  }
}

TEST_CASE("constants and seeded coordinates mix") {
  Jet c(2.5);  // dimension-0 constant
  Jet x = Jet::variable(1.5, 0, 4);
  Jet y = c * x + 1.0;
  CHECK(y.val == doctest::Approx(4.75));
  CHECK(y.dim() == 4);
  CHECK(y.grad[0] == doctest::Approx(2.5));
  CHECK(y.dval(2) == 0.0);
  CHECK(c.dval(3) == 0.0);  // constant reads as zero derivative
}

TEST_CASE("pow uses exact chain rule") {
  Jet x = Jet::variable(0.9, 0, 1);
  Jet p = pow(x, 5);
  CHECK(p.val == doctest::Approx(std::pow(0.9, 5)));
  CHECK(p.grad[0] == doctest::Approx(5.0 * std::pow(0.9, 4)));
  CHECK(p.hess(0, 0) == doctest::Approx(20.0 * std::pow(0.9, 3)));
  Jet q = pow(x, -2);
  CHECK(q.val == doctest::Approx(std::pow(0.9, -2)));
  CHECK(q.grad[0] == doctest::Approx(-2.0 * std::pow(0.9, -3)));
}

TEST_CASE("domain errors") {
  Jet z = Jet::variable(0.0, 0, 1);
  CHECK_THROWS_AS((void)inverse(z), std::domain_error);
  Jet neg = Jet::variable(-1.0, 0, 1);
  CHECK_THROWS_AS((void)sqrt(neg), std::domain_error);
}
