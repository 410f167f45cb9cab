#pragma once

// Skew pair actions rho(x, y) in End(V) of a 3-Lie algebra on a vector
// space, and the module identities they may satisfy.

#include "filippov/trilie.hpp"

#include <map>
#include <utility>

namespace filippov {

using PairTable = std::map<std::pair<std::size_t, std::size_t>, Matrix>;

class PairAction {
 public:
  PairAction() = default;
  /// Zero action.
  PairAction(std::size_t algebra_dim, std::size_t target_dim);
  PairAction(std::size_t algebra_dim, std::size_t target_dim, const PairTable& table);

  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  /// Nonzero entries on pairs i<j.
  const PairTable& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  /// rho(e_i, e_j), with the sign flip for i > j and zero for i == j.
  Matrix at(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coordinate vectors.
  Matrix operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;

 private:
  std::size_t algebra_dim_ = 0;
  std::size_t target_dim_ = 0;
  PairTable table_;
};

/// The adjoint action rho(x, y) = ad(x, y) of A on itself.
PairAction adjoint_action(const ThreeLieAlgebra& algebra);

/// Both defining identities of a module, on all basis 4-tuples:
///   [rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3],x4) - rho([x1,x2,x4],x3)
///   rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)
CheckReport check_representation(const ThreeLieAlgebra& algebra, const PairAction& rho,
                                 const CheckOptions& options = {});

/// The two identities every module satisfies:
///   rho([x,y,z],u) - rho([x,y,u],z) + rho([x,z,u],y) - rho([y,z,u],x) = 0
///   rho(x,u)rho(y,z) + rho(y,z)rho(x,u) + rho(x,y)rho(z,u) + rho(z,u)rho(x,y)
///     - rho(x,z)rho(y,u) - rho(y,u)rho(x,z) = 0
CheckReport check_module_consequences(const ThreeLieAlgebra& algebra, const PairAction& rho,
                                      const CheckOptions& options = {});

/// The second identity above as a matrix, for reuse by extension checks.
Matrix rho_quadratic_residual(const PairAction& rho, std::size_t x, std::size_t y, std::size_t z, std::size_t u);

}  // namespace filippov
