#ifndef WACM_SPECTRAL_HPP
#define WACM_SPECTRAL_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "wacm/structure.hpp"

namespace wacm {

/// Eigenstructure of the g-self-adjoint operator h^2 at a point, clustered to
/// the stated tolerance. Projectors are g-orthogonal (P^2 = P, P^* = P).
struct SpectrumResult {
  Vec eigenvalues;                      // all d, ascending
  std::vector<double> cluster_values;   // representative per cluster, ascending
  std::vector<int> cluster_mult;
  std::vector<double> lambdas;          // sqrt(-value) for strictly negative clusters
  std::vector<Mat> projectors;          // per cluster
  Mat P_xi;                             // projector onto [xi]
  Mat P_D0;                             // zero cluster minus [xi]
  int zero_cluster = -1;                // index into clusters
  int zero_multiplicity = 0;            // multiplicity of 0 on TM (includes xi)
  double min_gap = 0.0;                 // smallest inter-cluster gap
};

SpectrumResult h2_spectrum(const StructureData& G, double cluster_tol = 1e-6);

/// Max deviation of matched eigenvalues across sampled points; also verifies
/// the multiplicity vector is identical everywhere.
struct ConstancyResult {
  double deviation = 0.0;
  bool multiplicities_constant = true;
  std::vector<int> multiplicities;  // from the first point
  std::vector<double> lambdas;
};

ConstancyResult spectrum_constancy(const WeakStructure& S, int points, std::uint64_t seed);

enum class DistSelector { XiD0, XiDi, XiAll };

/// Totally-geodesic and integrability residuals of the selected distribution
/// ([xi] + D_0, [xi] + D_i, or [xi] + all nonzero clusters), measured on
/// projected coordinate fields. Projector derivatives come from first-order
/// spectral perturbation of h^2; an eigenvalue crossing raises an error.
struct TgResult {
  double tg_residual = 0.0;            // max |(I-P) nabla_X Y|
  double integrability = 0.0;          // max |(I-P) [X,Y]|
  double integrability_eta = 0.0;      // max |eta([X,Y])| over ker-eta part
  int dist_dim = 0;
};

TgResult totally_geodesic_residual(const StructureData& G, DistSelector sel, int cluster_index = -1,
                                   double cluster_tol = 1e-6);

/// Operator norm with respect to g (largest singular value in a g-orthonormal
/// frame).
double g_operator_norm(const StructureData& G, const Mat& M);

}  // namespace wacm

#endif
