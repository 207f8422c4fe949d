#ifndef WACM_CHART_HPP
#define WACM_CHART_HPP

#include <Eigen/Core>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wacm/grid.hpp"
#include "wacm/jet.hpp"

namespace wacm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluators for a field's components at a seeded chart point. Models return
/// order-2 jets of every component; value-level shortcuts exist where a plain
/// number suffices (finite-difference oracles, samplers).
using MetricJetFn = std::function<Grid2<Jet>(const JetV&)>;
using MetricValueFn = std::function<Mat(const Vec&)>;
using T11JetFn = std::function<Grid2<Jet>(const JetV&)>;
using VecJetFn = std::function<JetV(const JetV&)>;

/// One coordinate chart of a model manifold: dimension, admissible region and
/// the metric as a jet-evaluable field.
struct Chart {
  int dim = 0;
  std::string name;
  Vec box_lo, box_hi;  // sampling box (points are drawn here, then filtered)
  std::function<bool(const Vec&)> in_domain;
  MetricJetFn metric;
  MetricValueFn metric_value;  // fast path, same component functions

  bool admits(const Vec& p) const { return in_domain ? in_domain(p) : true; }

  void require(const Vec& p) const {
    if (!admits(p)) throw DomainError(name + ": point outside chart domain");
  }
};

/// Wraps a scalar-generic metric functor (callable on both double and Jet
/// coordinate vectors) into the two evaluators a Chart carries.
template <class F>
void bind_metric(Chart& chart, F f) {
  const int d = chart.dim;
  chart.metric = [f](const JetV& x) { return f(x); };
  chart.metric_value = [f, d](const Vec& p) {
    std::vector<double> x(p.data(), p.data() + p.size());
    Grid2<double> g = f(x);
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = g(i, j);
    return m;
  };
}

}  // namespace wacm

#endif
