#pragma once

// When does a pair of derivations (sigma on M, tau on H) extend to a
// derivation of the extension A = M + H? Both characterizations are
// linear systems: one in a single map gamma: M -> H, one in a triple of
// such maps describing a homomorphism A -> A^3.
//
// Throughout, beta(h, x) means -beta(x, h), matching [h, x, w] = -[x, h, w].

#include "filippov/cube.hpp"
#include "filippov/extension.hpp"

#include <optional>

namespace filippov {

class DerivationPair {
 public:
  /// Throws InputError unless sigma is a derivation of m and tau of h.
  DerivationPair(const ThreeLieAlgebra& m, const ThreeLieAlgebra& h, LinearMap sigma, LinearMap tau);

  const LinearMap& sigma() const { return sigma_; }
  const LinearMap& tau() const { return tau_; }

 private:
  LinearMap sigma_;
  LinearMap tau_;
};

struct LinearSystem {
  Matrix matrix;
  Vector rhs;
};

struct GammaSolution {
  bool solvable = false;
  /// h x m; the solution with all free variables zero.
  LinearMap particular;
  /// Solution directions in the flattened unknowns, gamma_{a,i} at a*m + i.
  Subspace homogeneous;
};

/// Unknowns gamma_{a,i} (row a of H, column i of M) at a*m + i. Rows, in order:
///   tau mu(x_i,x_j,x_k) + gamma[x_i,x_j,x_k] = sum of mu(.., sigma x, ..)
///     + rho(x_i,x_j)gamma x_k + rho(x_k,x_i)gamma x_j + rho(x_j,x_k)gamma x_i
///   for i<j<k, one row per H component;
///   [tau, rho(x_i,x_j)] = rho(sigma x_i,x_j) + rho(x_i,sigma x_j)
///     + beta(gamma x_i, x_j) + beta(x_i, gamma x_j)
///   for i<j, applied to each H basis vector, one row per component;
///   [tau, beta(x_i,h_d)] = beta(sigma x_i,h_d) + beta(x_i,tau h_d) + ad(gamma x_i, h_d)
///   for each (i, d), applied to each H basis vector, one row per component.
LinearSystem build_extendability_system(const ExtensionSpec& spec, const DerivationPair& pair);

/// Solves the system above and re-verifies the particular solution.
GammaSolution solve_extendability(const ExtensionSpec& spec, const DerivationPair& pair);

/// [[sigma, 0], [gamma, tau]] on M + H.
LinearMap build_delta(const DerivationPair& pair, const LinearMap& gamma);

/// p delta = sigma p, delta i = i tau, and delta is a derivation of A.
CheckReport verify_diagram(const ExtensionSpec& spec, const DerivationPair& pair, const LinearMap& delta,
                           const CheckOptions& options = {});

/// For beta = 0 and (H, rho) a module: first checks the gamma-free condition
/// [tau, rho(x,y)] = rho(sigma x, y) + rho(x, sigma y), then solves the
/// mu-rows of the system with gamma(M) inside Z(H). Throws InputError if the
/// preconditions fail.
GammaSolution solve_beta_free(const ExtensionSpec& spec, const DerivationPair& pair);

struct TripleGamma {
  LinearMap gamma1;
  LinearMap gamma2;
  LinearMap gamma3;
};

/// The system for a homomorphism g: A -> A^3,
///   g(x + h) = (gamma1 x + sigma x + tau h, gamma2 x + x + h, gamma3 x + x + h),
/// extending (f_sigma, f_tau). Unknowns are gamma1 | gamma2 | gamma3, each
/// flattened like the single-gamma system.
LinearSystem build_triple_system(const ExtensionSpec& spec, const DerivationPair& pair);

/// Solves the triple system; on success the returned g is verified to be a
/// homomorphism into the cube carrier that commutes with i x i x i and
/// p x p x p.
std::optional<TripleGamma> solve_triple_gamma(const ExtensionSpec& spec, const DerivationPair& pair);

/// The 3(m+h) x (m+h) matrix of g.
LinearMap g_map(const ExtensionSpec& spec, const DerivationPair& pair, const TripleGamma& triple);

/// g is a homomorphism A -> A^3, g i = (i x i x i) f_tau and
/// (p x p x p) g = f_sigma p.
CheckReport verify_g(const ExtensionSpec& spec, const DerivationPair& pair, const LinearMap& g,
                     const CheckOptions& options = {});

/// gamma2 extended to A -> A by zero on H.
LinearMap center_extension(const ExtensionSpec& spec, const LinearMap& gamma2);

/// delta(x) = sigma x + gamma1 x - c(sigma x), delta(h) = tau h, where c is
/// `gamma_center`: an A -> A map vanishing on H, valued in H, and agreeing
/// with gamma2 on M. Throws InputError otherwise.
LinearMap delta_from_g(const ExtensionSpec& spec, const DerivationPair& pair, const TripleGamma& triple,
                       const LinearMap& gamma_center);

}  // namespace filippov
