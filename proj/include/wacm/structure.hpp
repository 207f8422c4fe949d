#ifndef WACM_STRUCTURE_HPP
#define WACM_STRUCTURE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wacm/chart.hpp"
#include "wacm/geometry.hpp"

namespace wacm {

/// Hypothesis lattice for identity records. HANY holds on any metric
/// manifold; H0 is the structure axiom set; H1 adds the nearly-Sasakian
/// condition; H2a adds parallelism of Qt on ker eta; H2b adds curvature
/// invariance of ker eta; H3 is H1 with both. HSAS marks rows that assume a
/// Sasakian structure.
enum class Hyp { HANY, H0, H1, H2a, H2b, H3, HSAS };

const char* hyp_name(Hyp h);

/// Qualitative footprint of a model: measured in acceptance runs and compared
/// against this declaration.
struct Profile {
  bool h_zero = false;
  bool sasakian = false;
  bool weak_contact = false;
};

/// A weak almost contact metric structure (phi, Q, xi, eta, g) with all
/// component fields jet-evaluable on one chart.
struct WeakStructure {
  Chart chart;
  std::string name;
  T11JetFn phi;
  T11JetFn Q;
  VecJetFn xi;   // vector components
  VecJetFn eta;  // covector components
  Hyp declared = Hyp::H0;
  Profile profile;
};

/// Per-point evaluation cache: field values, raw partials and covariant
/// derivatives of everything the identity catalog contracts. Operator
/// matrices act by column: (M X)^k = M(k,j) X^j.
struct StructureData {
  PointGeometry geo;
  int d = 0;

  Mat phi, Q, Qt, h, nabla_xi;
  Vec xi, eta;

  Grid3<double> dphi_raw;   // (i,k,j)   d_i phi^k_j
  Grid4<double> ddphi_raw;  // (i,j,k,l) d_i d_j phi^k_l
  Grid3<double> dQ_raw;
  Mat dxi_raw;              // (i,k)     d_i xi^k
  Grid3<double> ddxi_raw;   // (i,j,k)   d_i d_j xi^k
  Mat deta_raw;             // (i,j)     d_i eta_j
  Grid3<double> dh_raw;     // (i,k,j)   d_i h^k_j

  Grid3<double> nphi;   // (i,k,j)   ((nabla_i phi) e_j)^k
  Grid4<double> n2phi;  // (i,j,k,l) ((nabla^2_{i,j} phi) e_l)^k
  Grid3<double> nh;
  Grid3<double> nQ;     // equals nabla Qt
  Mat neta;             // (i,j)     (nabla_i eta)_j

  Grid2<double> deta_form;  // kernel d of eta (alternation convention)

  // -- contractions used by the identity evaluators --
  double ip(const Vec& a, const Vec& b) const { return a.dot(geo.g * b); }
  double gnorm(const Vec& a) const { return geo.gnorm(a); }
  double eta_of(const Vec& X) const { return eta.dot(X); }
  Vec curv(const Vec& X, const Vec& Y, const Vec& Z) const { return geo.curv(X, Y, Z); }
  double curv4(const Vec& X, const Vec& Y, const Vec& Z, const Vec& V) const {
    return geo.curv4(X, Y, Z, V);
  }
  Vec conn(const Vec& V, const Vec& X) const { return geo.conn(V, X); }

  Vec dphi(const Vec& X, const Vec& Y) const;              // (nabla_X phi) Y
  Vec dh(const Vec& X, const Vec& Y) const;                // (nabla_X h) Y
  Vec dQt(const Vec& X, const Vec& Y) const;               // (nabla_X Qt) Y
  Vec dphih(const Vec& X, const Vec& Y) const;             // (nabla_X (phi h)) Y
  Vec d2phi(const Vec& X, const Vec& Y, const Vec& Z) const;  // (nabla^2_{X,Y} phi) Z
  Vec deta_vec(const Vec& X) const;                        // index-raised nabla eta, unused slots
  double deta(const Vec& X, const Vec& Y) const;           // kernel d eta

  /// delta(X,Y,Z,V) = g(R_{X,Y} Qt Z, V) + g(R_{X,Y} Z, Qt V)
  ///                - g(R_{Qt X, Y} Z, V) - g(R_{X, Qt Y} Z, V)
  double delta4(const Vec& X, const Vec& Y, const Vec& Z, const Vec& V) const;

  /// Nijenhuis torsion [phi,phi](X,Y) for constant-component X, Y.
  Vec nijenhuis(const Vec& X, const Vec& Y) const;

  /// ker-eta projection X - eta(X) xi.
  Vec ker_project(const Vec& X) const { return X - eta_of(X) * xi; }
};

StructureData structure_data(const WeakStructure& S, const Vec& p);

/// Normalized residual ||L-R|| / (1 + ||L|| + ||R||); overloads for scalars
/// and g-vectors.
double rel_residual(double lhs, double rhs);
double rel_residual(const StructureData& G, const Vec& lhs, const Vec& rhs);

/// One axiom row of the structure validation report.
struct AxiomCheck {
  std::string id;
  std::string description;
  double max_residual = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::string model;
  int points = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomCheck> checks;
  std::vector<std::string> structural_failures;  // singular metric/Q entries
  bool all_pass() const;
};

/// Samples N points and verifies every H0 axiom: the compatibility identity,
/// eta(xi) = 1, phi xi = 0, eta o phi = 0, eta o Q = eta, [Q, phi] = 0, phi
/// skew, Q self-adjoint with positive eigenvalues, and eta-xi g-duality.
AxiomReport validate_structure(const WeakStructure& S, int points, std::uint64_t seed,
                               double tol = 1e-8);

/// h = nabla xi + phi and friends at a point, with invariant residuals.
struct DerivedTensors {
  Mat h;
  Mat qTilde;
  Mat nabla_xi;
  double h_xi_residual = 0.0;        // |h xi|
  double eta_h_residual = 0.0;       // |eta o h|
  double skew_residual = 0.0;        // ||h + h^*||
  double geodesic_residual = 0.0;    // |nabla_xi xi|
  double h_norm = 0.0;               // g-operator norm
};

DerivedTensors compute_h(const WeakStructure& S, const Vec& p);
DerivedTensors compute_h(const StructureData& G);

/// Residual of (nabla_Y phi)Y = g(Y,Y) xi - eta(Y) Y at p.
double nearly_sasakian_residual(const WeakStructure& S, const Vec& p, const Vec& Y);
double nearly_sasakian_residual(const StructureData& G, const Vec& Y);

/// Residuals of the Sasakian characterization: the covariant-derivative
/// formula and the normality tensor [phi,phi] + 2 d eta (x) xi.
struct SasakianResiduals {
  double formula = 0.0;
  double normality = 0.0;
};

SasakianResiduals sasakian_residuals(const WeakStructure& S, const Vec& p, const Vec& X,
                                     const Vec& Y);
SasakianResiduals sasakian_residuals(const StructureData& G, const Vec& X, const Vec& Y);

double delta(const WeakStructure& S, const Vec& p, const Vec& X, const Vec& Y, const Vec& Z,
             const Vec& V);

/// g-orthonormal basis of ker eta at p: Gram-Schmidt of coordinate vectors
/// against xi, dropping the coordinate with the largest |eta| component.
std::vector<Vec> ker_eta_basis(const StructureData& G);

}  // namespace wacm

#endif
