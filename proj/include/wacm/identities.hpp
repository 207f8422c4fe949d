#ifndef WACM_IDENTITIES_HPP
#define WACM_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wacm/models.hpp"
#include "wacm/report.hpp"
#include "wacm/structure.hpp"

namespace wacm {

/// LHS/RHS pairs produced by one identity evaluation; a record may bundle
/// several sub-equalities (the residual is the max, the raw difference the
/// concatenation).
struct Parts {
  std::vector<std::pair<Vec, Vec>> vecs;
  std::vector<std::pair<double, double>> scalars;
};

struct IdentityRecord {
  std::string id;          // stable public id, e.g. "L1-b"
  std::string alias;       // source equation tag, e.g. "E-nS-01b"
  Hyp hypothesis = Hyp::H0;
  int arity = 0;           // pointwise vector arguments consumed
  bool needs_fields = false;
  std::string anchor;      // source location + statement fragment
  std::string note;        // documented readings / erratum flags
  std::function<Parts(const StructureData&, const std::array<Vec, 4>&)> eval;
};

const std::vector<IdentityRecord>& identity_catalog();

/// Resolves a primary id or an equation alias; throws UnknownNameError.
const IdentityRecord& find_identity(const std::string& name);

std::vector<std::string> identity_ids();

/// Normalized residual of one record at one sample (max over bundled parts);
/// never NaN (degenerate samples are perturbed deterministically).
double evaluate_identity(const IdentityRecord& rec, const StructureData& G,
                         const std::array<Vec, 4>& args);

/// Flattened LHS-RHS for multilinearity probes.
Vec evaluate_identity_raw(const IdentityRecord& rec, const StructureData& G,
                          const std::array<Vec, 4>& args);

/// Hypothesis classes verified by sampling (max residual of the defining rows
/// under tol), plus whether the declared class survived verification.
struct HypStatus {
  bool h0 = false, h1 = false, h2a = false, h2b = false, h3 = false, hsas = false;
  bool declared_ok = false;
  double h0_residual = 0.0, h1_residual = 0.0, h2a_residual = 0.0, h2b_residual = 0.0,
         hsas_residual = 0.0;
  bool satisfies(Hyp h) const;
};

HypStatus verify_hypotheses(const WeakStructure& S, int points, int tuples,
                            std::uint64_t seed, double tol);

/// Full cross-product run; deterministic for fixed config (thread count does
/// not affect the payload).
CheckReport run_suite(const RunConfig& config);

enum class Verdict { Pass, Fail, Inapplicable };

const char* verdict_name(Verdict v);

struct GateResult {
  Verdict verdict = Verdict::Inapplicable;
  double max_residual = 0.0;
  std::string note;
};

/// Sasakian criterion gate: hypotheses are the structure axioms, the
/// covariant-derivative characterization and parallelism of Qt on ker eta;
/// conclusions are Qt = 0, h = 0, normality, and h phi = phi h = -Qt.
GateResult theorem_t01_gate(const WeakStructure& S, int points, int tuples,
                            std::uint64_t seed, double tol);

/// Dimension > 5 gate: hypotheses are the nearly-Sasakian condition with both
/// extra conditions; conclusions are phi h = -Qt, then h = Qt = 0 and the
/// Sasakian formula, with the two-form rows checked as intermediates.
GateResult theorem_th45_gate(const WeakStructure& S, int points, int tuples,
                             std::uint64_t seed, double tol);

/// Rank analysis of the wedge map beta -> (d eta) ^ beta from 2-forms into
/// 4-forms at a point. Requires eta to be contact there.
struct WedgeInjectivity {
  int kernel_dim = 0;
  int domain_dim = 0;  // C(d,2)
  int image_dim = 0;   // C(d,4)
  double sigma_max = 0.0;
  double contact_volume = 0.0;
};

WedgeInjectivity wedge_injectivity(const StructureData& G);

/// Same map for an arbitrary 2-form (used to exercise degenerate cases).
int wedge_kernel_dimension(const Grid2<double>& two_form, int d);

}  // namespace wacm

#endif
