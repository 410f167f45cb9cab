#pragma once

// 3-Lie algebras given by structure constants, and the checks and solvers
// that only need a single algebra: bracket evaluation, the fundamental
// identity, derivations, center, ideals and homomorphisms.

#include "filippov/exactlin.hpp"
#include "filippov/report.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace filippov {

struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVector = std::vector<Term>;

/// Canonical structure constants: strictly increasing index triple to the
/// coordinate vector of [e_i, e_j, e_k]. Missing triples bracket to zero.
using StructureTable = std::map<std::array<std::size_t, 3>, Vector>;

/// A finite-dimensional ternary skew-symmetric algebra. Only strictly
/// increasing triples are stored; other orderings pick up the permutation
/// sign and triples with a repeated index bracket to zero. Whether the
/// fundamental identity holds is a separate check.
class ThreeLieAlgebra {
 public:
  ThreeLieAlgebra() = default;
  /// Abelian algebra with labels e1..en.
  explicit ThreeLieAlgebra(std::size_t dim);
  ThreeLieAlgebra(std::size_t dim, std::vector<std::string> labels, const StructureTable& table);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Nonzero canonical structure constants.
  StructureTable table() const;
  bool is_abelian() const { return entries_.empty(); }

  /// [e_i, e_j, e_k] as a sparse vector together with the permutation sign
  /// relative to the stored canonical triple. Returns nullptr for zero.
  const SparseVector* basis_bracket(std::size_t i, std::size_t j, std::size_t k, int& sign) const;
  Vector basis_bracket(std::size_t i, std::size_t j, std::size_t k) const;
  /// Trilinear extension to arbitrary coordinate vectors.
  Vector bracket(std::span<const Scalar> u, std::span<const Scalar> v, std::span<const Scalar> w) const;
  /// [u, e_j, e_k] for a coordinate vector u.
  Vector bracket_with_basis(std::span<const Scalar> u, std::size_t j, std::size_t k) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  void build_lookup();

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::array<std::size_t, 3>> keys_;
  std::vector<SparseVector> entries_;
  // Signed 1-based index into entries_ for every ordered triple; 0 = zero.
  std::vector<std::int32_t> lookup_;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix = "e");

/// A linear map between coordinate spaces, stored as a target x source matrix.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {}
  static LinearMap zero(std::size_t source_dim, std::size_t target_dim) {
    return LinearMap(Matrix(target_dim, source_dim));
  }
  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }

  std::size_t source_dim() const { return matrix_.cols(); }
  std::size_t target_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  Vector operator()(std::span<const Scalar> v) const { return matrix_.apply(v); }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix_ * b.matrix_); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  Matrix matrix_;
};

/// ab - ba for square maps of the same size.
LinearMap commutator(const LinearMap& a, const LinearMap& b);

/// Exhaustive check of [[x,y,z],u,v] = [[x,u,v],y,z] + [x,[y,u,v],z] + [x,y,[z,u,v]]
/// over basis tuples x<y<z, u<v. Multilinearity and skew-symmetry of both
/// sides make this complete.
CheckReport check_fundamental_identity(const ThreeLieAlgebra& algebra, const CheckOptions& options = {});

/// d[x1,x2,x3] = [d x1,x2,x3] + [x1,d x2,x3] + [x1,x2,d x3] on basis triples i<j<k.
CheckReport is_derivation(const ThreeLieAlgebra& algebra, const LinearMap& d, const CheckOptions& options = {});

/// ad(x, y): w -> [x, y, w].
LinearMap inner_derivation(const ThreeLieAlgebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y);

/// The linear system whose nullspace is Der(A). Unknown d_ab (row a,
/// column b) sits at column a * n + b; one row per (triple i<j<k, component).
Matrix derivation_system(const ThreeLieAlgebra& algebra);

/// Basis of Der(A), from the canonical nullspace basis of derivation_system.
std::vector<LinearMap> derivation_algebra(const ThreeLieAlgebra& algebra);

/// True when `map` is a linear combination of `basis`.
bool in_span(const std::vector<LinearMap>& basis, const LinearMap& map);

/// Z(A) = {z : [z, e_j, e_k] = 0 for all j < k}.
Subspace center(const ThreeLieAlgebra& algebra);

bool is_subalgebra(const ThreeLieAlgebra& algebra, const Subspace& s);
bool is_ideal(const ThreeLieAlgebra& algebra, const Subspace& s);
/// Ideal with [S, S, A] = 0 (which also gives [S, S, S] = 0).
bool is_abelian_ideal(const ThreeLieAlgebra& algebra, const Subspace& s);

/// f[x,y,z]_A = [f x, f y, f z]_B on basis triples of A.
CheckReport is_homomorphism(const LinearMap& f, const ThreeLieAlgebra& source, const ThreeLieAlgebra& target,
                            const CheckOptions& options = {});

}  // namespace filippov
