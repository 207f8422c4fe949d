#ifndef WACM_FORMS_HPP
#define WACM_FORMS_HPP

#include <Eigen/Core>

#include "wacm/geometry.hpp"
#include "wacm/grid.hpp"
#include "wacm/jet.hpp"

namespace wacm {

// Forms are fully antisymmetric covariant tensors stored with all components.
// Normalization is the alternation convention throughout:
//   (d omega) = Alt(d_i omega),    (alpha ^ beta) = Alt(alpha x beta),
// so for a 1-form  d eta(X,Y) = (1/2){X eta(Y) - Y eta(X) - eta([X,Y])}
// and for a 2-form 3 d beta(X,Y,Z) = sum_cyc (nabla_X beta)(Y,Z), matching
// 3 (eta ^ beta)(X,Y,Z) = sum_cyc eta(X) beta(Y,Z).

/// d of a scalar field: the plain gradient.
Vec exterior_derivative_0(const Jet& f);

/// d of a 1-form from its component jets: (d w)_ij = (1/2)(d_i w_j - d_j w_i).
Grid2<double> exterior_derivative_1(const JetV& w);

/// d of a 2-form from its component jets (coordinate antisymmetrization).
Grid3<double> exterior_derivative_2(const Grid2<Jet>& b);

/// d of a 2-form via the covariant cyclic formula; agrees with the coordinate
/// path for antisymmetric b (kernel cross-check).
Grid3<double> exterior_derivative_2_cov(const PointGeometry& G, const Grid2<Jet>& b);

/// Cyclic derivative sum_cyc (nabla_X b)(Y,Z) of an arbitrary bilinear field,
/// divided by 3. For antisymmetric b this is d b; the identity catalog applies
/// it to bilinear fields that are not a priori antisymmetric.
Grid3<double> cyclic_derivative_bilinear(const PointGeometry& G, const Grid2<double>& b,
                                         const Grid3<double>& db_raw);

/// Cyclic wedge (1/3) sum_cyc eta(X) b(Y,Z) of a 1-form with a bilinear form.
Grid3<double> cyclic_wedge(const Vec& eta, const Grid2<double>& b);

Grid2<double> wedge11(const Vec& a, const Vec& b);
Grid3<double> wedge12(const Vec& a, const Grid2<double>& b);
Grid4<double> wedge22(const Grid2<double>& a, const Grid2<double>& b);
Grid4<double> wedge13(const Vec& a, const Grid3<double>& b);

/// Spec-facing wedge for component arrays carried in a CovDeriv-like union.
/// Supported degree pairs: (1,1), (1,2), (2,2), (1,3); anything else throws
/// UnsupportedError.
struct FormValue {
  int degree = 0;
  Vec r1;
  Grid2<double> r2;
  Grid3<double> r3;
  Grid4<double> r4;
};

FormValue wedge(const FormValue& a, const FormValue& b);

double form_apply(const Grid2<double>& w, const Vec& X, const Vec& Y);
double form_apply(const Grid3<double>& w, const Vec& X, const Vec& Y, const Vec& Z);
double form_apply(const Grid4<double>& w, const Vec& X, const Vec& Y, const Vec& Z,
                  const Vec& V);

/// The top-degree component (eta ^ (d eta)^n)(e_0, ..., e_{d-1}) as a direct
/// permutation sum; nonzero iff eta is a contact form at the point (d = 2n+1).
double contact_volume(const Vec& eta, const Grid2<double>& deta);

}  // namespace wacm

#endif
