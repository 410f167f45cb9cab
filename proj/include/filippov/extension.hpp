#pragma once

// Extensions A = M + H of a 3-Lie algebra H by a 3-Lie algebra M, built
// from a cocycle-like mu: M^3 -> H and two actions rho: M x M -> Der(H),
// beta: M x H -> Der(H). The bracket on A is
//   [x,y,z] = [x,y,z]_M + mu(x,y,z)   [x,y,h] = rho(x,y)h
//   [x,h1,h2] = beta(x,h1)h2          [h1,h2,h3] = [h1,h2,h3]_H
// and everything here checks when that bracket is a 3-Lie bracket.

#include "filippov/repmod.hpp"
#include "filippov/trilie.hpp"

#include <map>
#include <optional>
#include <utility>

namespace filippov {

/// Skew trilinear map M^3 -> H, stored on increasing triples.
class TriMapToH {
 public:
  TriMapToH() = default;
  TriMapToH(std::size_t m_dim, std::size_t h_dim);
  TriMapToH(std::size_t m_dim, std::size_t h_dim, const StructureTable& table);

  std::size_t m_dim() const { return m_dim_; }
  std::size_t h_dim() const { return h_dim_; }
  const StructureTable& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  Vector at(std::size_t i, std::size_t j, std::size_t k) const;
  Vector operator()(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const;

 private:
  std::size_t m_dim_ = 0;
  std::size_t h_dim_ = 0;
  StructureTable table_;
};

using MixedTable = std::map<std::pair<std::size_t, std::size_t>, Matrix>;

/// beta(x_i, h_a) as h x h matrices, bilinear in (x, h).
class MixedAction {
 public:
  MixedAction() = default;
  MixedAction(std::size_t m_dim, std::size_t h_dim);
  MixedAction(std::size_t m_dim, std::size_t h_dim, const MixedTable& table);

  std::size_t m_dim() const { return m_dim_; }
  std::size_t h_dim() const { return h_dim_; }
  const MixedTable& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  Matrix at(std::size_t i, std::size_t a) const;
  Matrix operator()(std::span<const Scalar> x, std::span<const Scalar> h) const;

 private:
  std::size_t m_dim_ = 0;
  std::size_t h_dim_ = 0;
  MixedTable table_;
};

/// A validated extension datum. Construction requires M and H to satisfy
/// the fundamental identity, every rho(x_i,x_j) and beta(x_i,h_a) to be a
/// derivation of H, and beta(x,h1)h2 = -beta(x,h2)h1, which is what makes
/// the MHH clause of the bracket skew.
class ExtensionSpec {
 public:
  ExtensionSpec(ThreeLieAlgebra m, ThreeLieAlgebra h, TriMapToH mu, PairAction rho, MixedAction beta);

  const ThreeLieAlgebra& m() const { return m_; }
  const ThreeLieAlgebra& h() const { return h_; }
  const TriMapToH& mu() const { return mu_; }
  const PairAction& rho() const { return rho_; }
  const MixedAction& beta() const { return beta_; }
  std::size_t m_dim() const { return m_.dim(); }
  std::size_t h_dim() const { return h_.dim(); }

 private:
  ThreeLieAlgebra m_;
  ThreeLieAlgebra h_;
  TriMapToH mu_;
  PairAction rho_;
  MixedAction beta_;
};

/// The bracketed algebra on M-basis ++ H-basis. Not assumed to be 3-Lie.
ThreeLieAlgebra assemble(const ExtensionSpec& spec);

// Individual conditions, each swept over full basis products.

/// rho(x,u)rho(y,z) + rho(y,z)rho(x,u) + rho(x,y)rho(z,u) + rho(z,u)rho(x,y)
///   - rho(x,z)rho(y,u) - rho(y,u)rho(x,z) = 0 over M^4.
CheckReport check_rho_quadratic(const ExtensionSpec& spec, const CheckOptions& options = {});
/// rho(x4,[x1,x2,x3]) = rho(x3,x1)rho(x4,x2) - rho(x2,x1)rho(x4,x3)
///   + rho(x2,x3)rho(x4,x1) - beta(x4, mu(x1,x2,x3)) over M^4.
CheckReport check_rho_bracket(const ExtensionSpec& spec, const CheckOptions& options = {});
/// beta(y,h2)beta(x,h1)h - beta(y,h)beta(x,h1)h2 - beta(x,h1)beta(y,h2)h
///   = [rho(x,y)h1, h2, h] over M^2 x H^3.
CheckReport check_beta_quadratic(const ExtensionSpec& spec, const CheckOptions& options = {});
/// ad(beta(x,h1)h3, h2) + ad(h3, beta(x,h1)h2) + ad(beta(x,h3)h2, h1)
///   = beta(x, [h1,h2,h3]) over M x H^3, applied to every H basis vector.
CheckReport check_beta_adjoint(const ExtensionSpec& spec, const CheckOptions& options = {});
/// [mu(x1,x2,x3), h1, h2] = rho(x2,x3)beta(x1,h1)h2 - rho(x1,x3)beta(x2,h1)h2
///   + rho(x1,x2)beta(x3,h1)h2 - beta([x1,x2,x3], h1)h2 over M^3 x H^2.
CheckReport check_mu_center(const ExtensionSpec& spec, const CheckOptions& options = {});
/// beta(x1,h1)rho(x2,x3)h2 + beta(x3,h2)rho(x1,x2)h1
///   = rho(x2,x3)beta(x1,h1)h2 + beta(x2,h2)rho(x1,x3)h1 over M^3 x H^2.
CheckReport check_beta_rho(const ExtensionSpec& spec, const CheckOptions& options = {});
/// mu(x1,x2,[x3,x4,x5]) - mu([x1,x2,x3],x4,x5) - mu(x3,[x1,x2,x4],x5) - mu(x3,x4,[x1,x2,x5])
///   = rho(x3,x4)mu(x1,x2,x5) - rho(x3,x5)mu(x1,x2,x4) - rho(x1,x2)mu(x3,x4,x5)
///   + rho(x4,x5)mu(x1,x2,x3) over M^5.
CheckReport check_mu_cocycle(const ExtensionSpec& spec, const CheckOptions& options = {});

struct ConditionLedger {
  std::vector<CheckReport> conditions;
  bool passed = true;
};

/// All seven conditions above. Their conjunction is equivalent to the
/// assembled bracket satisfying the fundamental identity.
ConditionLedger check_extension_conditions(const ExtensionSpec& spec, const CheckOptions& options = {});

/// Consequences among the conditions, checked on this spec:
///   given rho_bracket, rho_quadratic(t) holds iff rho_bracket_swap(t) holds;
///   given beta_quadratic, rho_on_bracket holds;
///   given beta_adjoint, beta_on_bracket holds.
CheckReport check_condition_implications(const ExtensionSpec& spec, const CheckOptions& options = {});

struct ModuleCriterion {
  bool is_module = false;
  /// beta(x_i, mu(x_j,x_k,x_l)) = 0 for all i and j<k<l.
  bool beta_mu_zero = false;
};

/// For a spec whose assembled algebra is 3-Lie: (H, rho) is an M-module
/// exactly when beta(M, mu(M,M,M)) = 0. Throws InputError if the assembled
/// algebra fails the fundamental identity.
ModuleCriterion check_module_criterion(const ExtensionSpec& spec, const CheckOptions& options = {});

struct BetaFreeCriterion {
  CheckReport mu_in_center;
  /// im rho(x,y) lies in Z(H). Together with the other two this is
  /// equivalent to the assembled algebra being 3-Lie.
  CheckReport rho_into_center;
  /// Every rho(x,y) commutes with every derivation of H. Reported for
  /// reference; it is not necessary for the assembled algebra to be 3-Lie.
  CheckReport rho_commutes_with_der;
  CheckReport mu_cocycle;
  bool passed = false;
};

/// Criterion for beta = 0 extensions by a module. Throws InputError unless
/// beta = 0 and (H, rho) is an M-module.
BetaFreeCriterion check_beta_free_criterion(const ExtensionSpec& spec, const CheckOptions& options = {});

/// Inclusion H -> A and projection A -> M.
LinearMap inclusion_map(const ExtensionSpec& spec);
LinearMap projection_map(const ExtensionSpec& spec);

/// 0 -> H -> A -> M -> 0 is an exact sequence of 3-Lie algebras. Throws
/// InputError if the assembled algebra fails the fundamental identity.
CheckReport check_exact_sequence(const ExtensionSpec& spec, const CheckOptions& options = {});

/// The H-block of A as a subspace.
Subspace h_block(const ExtensionSpec& spec);

}  // namespace filippov
