#ifndef WACM_MODELS_HPP
#define WACM_MODELS_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "wacm/structure.hpp"

namespace wacm {

struct UnknownNameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- kernel test charts (no structure attached) --

/// Flat R^d.
Chart euclidean_chart(int d);

/// Round unit sphere S^d in the stereographic chart from the north pole,
/// g = 4 (1+|u|^2)^{-2} delta.
Chart sphere_chart(int d);

// -- structures --

/// Standard Sasakian structure on R^{2n+1}:
///   eta = (dz - sum y^i dx^i)/2,  xi = 2 d/dz,
///   g = eta (x) eta + (1/4) sum((dx^i)^2 + (dy^i)^2),
///   phi(dx_i) = -dy_i,  phi(dy_i) = dx_i + y^i d/dz.
WeakStructure build_sasakian_r2n1(int n);

/// Round S^{2n+1} in C^{n+1}: xi = J p, phi the tangential part of J,
/// stereographic chart. n in {2, 3}.
WeakStructure build_sasakian_sphere(int n);

/// S^5 as the equator of S^6 with the almost Hermitian structure J_p = p x .
/// (octonion cross product); the induced structure is nearly Sasakian and
/// non-Sasakian with h^2 = -2 (id - eta (x) xi).
WeakStructure build_nearly_sasakian_s5();

/// Scaled deformation of a Sasakian base: phi_a = a phi,
/// Q = a^2 id + (1-a^2) eta (x) xi. Weak almost contact metric for any a > 0;
/// neither weak contact metric nor nearly Sasakian for a != 1.
WeakStructure build_weak_deformation(const WeakStructure& base, double a);

/// Octonion cross product on R^7 (Cayley table e_i e_{i+1} = e_{i+3} mod 7).
Eigen::VectorXd octonion_cross(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

struct ModelEntry {
  std::string name;
  int dim = 0;
  Hyp declared = Hyp::H0;
  Profile profile;
  WeakStructure structure;
};

/// The shipped corpus: sas-r5, sas-r7, sas-s5, sas-s7, nsas-s5,
/// weak-r5-a1.5, weak-r5-a2. Immutable after first use.
const std::vector<ModelEntry>& model_registry();

const ModelEntry& find_model(const std::string& name);

/// Registry names, sorted.
std::vector<std::string> model_names();

}  // namespace wacm

#endif
