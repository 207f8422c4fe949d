#ifndef WACM_GEOMETRY_HPP
#define WACM_GEOMETRY_HPP

#include <Eigen/Core>

#include "wacm/chart.hpp"
#include "wacm/grid.hpp"
#include "wacm/jet.hpp"

namespace wacm {

/// Everything the Levi-Civita connection of a chart metric yields at one
/// point, to the order the metric jets support: Christoffel symbols, their
/// first partials and the curvature tensor.
///
/// Index conventions:
///   dg(k,i,j)        = d_k g_ij
///   ddg(k,l,i,j)     = d_k d_l g_ij
///   gamma(m,i,j)     = Gamma^m_ij
///   dgamma(l,m,i,j)  = d_l Gamma^m_ij
///   riem(i,j,k,m)    : R(e_i,e_j)e_k = riem(i,j,k,m) e_m
///   rlow(i,j,k,l)    = g(R(e_i,e_j)e_k, e_l)
/// with the curvature sign fixed by R_{X,Y} = nabla_X nabla_Y - nabla_Y
/// nabla_X - nabla_[X,Y]. The unit round sphere then satisfies
/// R_{X,Y}Z = g(Y,Z)X - g(X,Z)Y.
struct PointGeometry {
  int d = 0;
  Vec x;
  Mat g, g_inv;
  Grid3<double> dg;
  Grid4<double> ddg;
  Grid3<double> dginv;
  Grid3<double> gamma;
  Grid4<double> dgamma;
  Grid4<double> riem;
  Grid4<double> rlow;

  double ip(const Vec& a, const Vec& b) const { return a.dot(g * b); }
  double gnorm(const Vec& a) const;

  /// R_{X,Y}Z as a vector.
  Vec curv(const Vec& X, const Vec& Y, const Vec& Z) const;
  /// g(R_{X,Y}Z, V).
  double curv4(const Vec& X, const Vec& Y, const Vec& Z, const Vec& V) const;

  /// nabla_V X for a constant-component field X (pure connection term).
  Vec conn(const Vec& V, const Vec& X) const;
};

/// Builds the geometry cache from order-2 metric jets. Throws
/// SingularMetricError when the metric fails to be positive definite and
/// DomainError outside the chart domain.
PointGeometry point_geometry(const Chart& chart, const Vec& p);

/// Variant taking pre-evaluated metric jets (used by structures, which seed
/// the point once for all fields).
PointGeometry point_geometry_from_jets(const Grid2<Jet>& gj, const Vec& p);

enum class Valence { Vector, OneForm, T11, T02, T03 };

/// Tensor field with jet-evaluable components; rank-dependent evaluator slots.
struct TensorField {
  Valence valence = Valence::T11;
  std::function<JetV(const JetV&)> rank1;
  std::function<Grid2<Jet>(const JetV&)> rank2;
  std::function<Grid3<Jet>(const JetV&)> rank3;
};

/// First covariant derivative at p; the leading index of the result is the
/// derivative slot. Shapes: Vector -> (i,k), OneForm -> (i,j),
/// T11 -> (i,k,j) for (nabla_i T e_j)^k, T02 -> (i,j,k), T03 -> rank 4.
struct CovDeriv {
  Valence valence;
  Grid2<double> r2;
  Grid3<double> r3;
  Grid4<double> r4;
};

CovDeriv covariant_derivative(const Chart& chart, const TensorField& T, const Vec& p);

/// Second covariant derivative of a (1,1) field:
/// out(i,j,k,l) = ((nabla^2_{e_i,e_j} T) e_l)^k with
/// nabla^2_{X,Y} = nabla_X nabla_Y - nabla_{nabla_X Y}.
Grid4<double> second_covariant_derivative_11(const Chart& chart, const TensorField& T,
                                             const Vec& p);

/// R_{X,Y}Z at p (convenience wrapper building the cache).
Vec riemann(const Chart& chart, const Vec& p, const Vec& X, const Vec& Y, const Vec& Z);

/// Finite-difference oracle data built only from metric values: Christoffel
/// symbols, their partials and the lowered curvature, all with central
/// differences of the given step. Independent of the jet path.
struct FiniteDifferenceGeometry {
  Mat g;
  Grid3<double> gamma;
  Grid4<double> dgamma;
  Grid4<double> rlow;
};

FiniteDifferenceGeometry finite_difference_geometry(const Chart& chart, const Vec& p,
                                                    double step);

}  // namespace wacm

#endif
