#pragma once

// Fixture algebras: abelian, the simple 4-dimensional algebra, and 3-Lie
// algebras built from a Lie algebra plus extra data (a trace-like
// functional, or an invariant metric).

#include "filippov/trilie.hpp"

#include <map>
#include <utility>

namespace filippov {

using LieTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

/// A Lie algebra by structure constants on pairs i<j. Jacobi is checked on
/// construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, const LieTable& table);

  std::size_t dim() const { return dim_; }
  const LieTable& table() const { return table_; }
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(std::span<const Scalar> u, std::span<const Scalar> v) const;

 private:
  std::size_t dim_ = 0;
  LieTable table_;
};

/// Symmetric nondegenerate bilinear form, given by its Gram matrix.
class MetricForm {
 public:
  MetricForm() = default;
  explicit MetricForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(std::span<const Scalar> u, std::span<const Scalar> v) const;

 private:
  Matrix gram_;
};

/// B([x,y],z) = -B(y,[x,z]) on all basis triples.
bool is_invariant(const MetricForm& form, const LieAlgebra& lie);

ThreeLieAlgebra abelian(std::size_t n);

/// [e_i,e_j,e_k] = eps_{ijkl} e_l with eps_1234 = +1.
ThreeLieAlgebra simple4();

/// Block direct sum, A-basis first. Labels are kept unless they clash.
ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b);

/// [x,y,z] = f(x)[y,z] + f(y)[z,x] + f(z)[x,y]. Requires f to kill [L,L].
ThreeLieAlgebra from_lie_functional(const LieAlgebra& lie, std::span<const Scalar> functional);

/// gl(m) with [A,B,C] = tr(A)[B,C] + tr(B)[C,A] + tr(C)[A,B], basis E_ab
/// in row-major order.
ThreeLieAlgebra gl_trace_form(std::size_t m);

/// Two-dimensional extension of a metric Lie algebra: basis x_1..x_m, then
/// x^0, then x^-1. [x^0,x_i,x_j] = [x_i,x_j], [x_i,x_j,x_k] = B([x_i,x_j],x_k) x^-1,
/// and anything involving x^-1 vanishes.
ThreeLieAlgebra metric_lie_extension(const LieAlgebra& lie, const MetricForm& form);

/// so(3): [x1,x2] = x3 and cyclic.
LieAlgebra so3();
/// [x1,x2] = x3.
LieAlgebra heisenberg3();
/// L plus a one-dimensional abelian summand.
LieAlgebra add_abelian_summand(const LieAlgebra& lie);

ThreeLieAlgebra lie_functional_so3();
ThreeLieAlgebra lie_functional_heisenberg();

}  // namespace filippov
