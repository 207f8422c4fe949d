#ifndef WACM_SAMPLING_HPP
#define WACM_SAMPLING_HPP

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wacm/chart.hpp"

namespace wacm {

/// FNV-1a; used to derive independent deterministic substreams per model so
/// results do not depend on evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag);

/// Uniform draw in the chart box, rejection-filtered by the domain predicate.
Vec sample_point(const Chart& chart, std::mt19937_64& rng);

/// Uniform direction on the coordinate unit sphere.
Vec sample_unit_vector(int dim, std::mt19937_64& rng);

/// Pre-drawn evaluation samples: points and, per point, K tuples of four unit
/// vectors (records of lower arity use a prefix).
struct SampleSet {
  std::vector<Vec> points;
  std::vector<std::vector<std::array<Vec, 4>>> tuples;  // [point][tuple][slot]
};

SampleSet draw_samples(const Chart& chart, int n_points, int n_tuples, std::uint64_t seed);

}  // namespace wacm

#endif
