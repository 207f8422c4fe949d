#include "wacm/sampling.hpp"

#include <array>
#include <stdexcept>

namespace wacm {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (int i = 0; i < 8; ++i) eat(static_cast<unsigned char>(seed >> (8 * i)));
  for (char c : tag) eat(static_cast<unsigned char>(c));
  return h;
}

Vec sample_point(const Chart& chart, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vec p(chart.dim);
    for (int i = 0; i < chart.dim; ++i)
      p[i] = chart.box_lo[i] + (chart.box_hi[i] - chart.box_lo[i]) * u(rng);
    if (chart.admits(p)) return p;
  }
  throw DomainError(chart.name + ": could not sample an admissible point");
}

Vec sample_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = n(rng);
    const double len = v.norm();
    if (len > 1e-8) return v / len;
  }
}

SampleSet draw_samples(const Chart& chart, int n_points, int n_tuples, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed, chart.name));
  SampleSet s;
  s.points.reserve(n_points);
  s.tuples.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    s.points.push_back(sample_point(chart, rng));
    s.tuples[i].resize(n_tuples);
    for (int t = 0; t < n_tuples; ++t)
      for (int a = 0; a < 4; ++a) s.tuples[i][t][a] = sample_unit_vector(chart.dim, rng);
  }
  return s;
}

}  // namespace wacm
