#include "filippov/repmod.hpp"

namespace filippov {

PairAction::PairAction(std::size_t algebra_dim, std::size_t target_dim)
    : algebra_dim_(algebra_dim), target_dim_(target_dim) {}

PairAction::PairAction(std::size_t algebra_dim, std::size_t target_dim, const PairTable& table)
    : algebra_dim_(algebra_dim), target_dim_(target_dim) {
  for (const auto& [key, m] : table) {
    if (key.first >= key.second || key.second >= algebra_dim_) {
      throw InputError("pair action entry (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       ") is not increasing within dimension " + std::to_string(algebra_dim_));
    }
    if (m.rows() != target_dim_ || m.cols() != target_dim_) {
      throw InputError("pair action matrix must be " + std::to_string(target_dim_) + "x" + std::to_string(target_dim_));
    }
    if (!m.is_zero()) table_.emplace(key, m);
  }
}

Matrix PairAction::at(std::size_t i, std::size_t j) const {
  if (i >= algebra_dim_ || j >= algebra_dim_) throw InputError("pair action index out of range");
  if (i == j) return Matrix(target_dim_, target_dim_);
  auto it = table_.find(i < j ? std::pair{i, j} : std::pair{j, i});
  if (it == table_.end()) return Matrix(target_dim_, target_dim_);
  return i < j ? it->second : it->second * Scalar(-1);
}

Matrix PairAction::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != algebra_dim_ || y.size() != algebra_dim_) throw InputError("pair action: vector length mismatch");
  Matrix out(target_dim_, target_dim_);
  for (const auto& [key, m] : table_) {
    Scalar c = x[key.first] * y[key.second] - x[key.second] * y[key.first];
    if (sgn(c) != 0) out += m * c;
  }
  return out;
}

PairAction adjoint_action(const ThreeLieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  PairTable table;
  for (const auto& p : detail::combinations(n, 2))
    table.emplace(std::pair{p[0], p[1]},
                  inner_derivation(algebra, unit_vector(n, p[0]), unit_vector(n, p[1])).matrix());
  return PairAction(n, n, table);
}

namespace {

void check_dims(const ThreeLieAlgebra& algebra, const PairAction& rho) {
  if (rho.algebra_dim() != algebra.dim()) {
    throw InputError("pair action is defined on dimension " + std::to_string(rho.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(algebra.dim()));
  }
}

// Per-basis-pair matrices in a dense grid, so sweeps avoid map lookups.
struct PairGrid {
  PairGrid(const PairAction& rho) : n(rho.algebra_dim()) {
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cells.push_back(rho.at(i, j));
  }
  const Matrix& operator()(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
  std::size_t n;
  std::vector<Matrix> cells;
};

// rho(v, e_j) for a coordinate vector v.
Matrix rho_left(const PairGrid& grid, std::span<const Scalar> v, std::size_t j, std::size_t dim) {
  Matrix out(dim, dim);
  for (std::size_t l = 0; l < v.size(); ++l)
    if (sgn(v[l]) != 0) out += grid(l, j) * v[l];
  return out;
}

}  // namespace

Matrix rho_quadratic_residual(const PairAction& rho, std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
  auto sym = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    Matrix p = rho.at(a, b), q = rho.at(c, d);
    return p * q + q * p;
  };
  return sym(x, u, y, z) + sym(x, y, z, u) - sym(x, z, y, u);
}

CheckReport check_representation(const ThreeLieAlgebra& algebra, const PairAction& rho, const CheckOptions& options) {
  check_dims(algebra, rho);
  const std::size_t n = algebra.dim(), v = rho.target_dim();
  PairGrid grid(rho);
  return detail::sweep("representation", detail::product({n, n, n, n}), options,
                       [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                         const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
                         Matrix r12_3_4 = rho_left(grid, algebra.basis_bracket(x1, x2, x3), x4, v);
                         Matrix r12_4_3 = rho_left(grid, algebra.basis_bracket(x1, x2, x4), x3, v);
                         Matrix lhs = grid(x1, x2) * grid(x3, x4) - grid(x3, x4) * grid(x1, x2);
                         sink.expect_equal("commutator", t, lhs.flat(), (r12_3_4 - r12_4_3).flat());
                         Matrix rhs = grid(x1, x2) * grid(x3, x4) + grid(x2, x3) * grid(x1, x4) +
                                      grid(x3, x1) * grid(x2, x4);
                         sink.expect_equal("expansion", t, r12_3_4.flat(), rhs.flat());
                       });
}

CheckReport check_module_consequences(const ThreeLieAlgebra& algebra, const PairAction& rho,
                                      const CheckOptions& options) {
  check_dims(algebra, rho);
  const std::size_t n = algebra.dim(), v = rho.target_dim();
  PairGrid grid(rho);
  const Vector zero = zero_vector(v * v);
  return detail::sweep("module_consequences", detail::product({n, n, n, n}), options,
                       [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                         const std::size_t x = t[0], y = t[1], z = t[2], u = t[3];
                         Matrix lin = rho_left(grid, algebra.basis_bracket(x, y, z), u, v) -
                                      rho_left(grid, algebra.basis_bracket(x, y, u), z, v) +
                                      rho_left(grid, algebra.basis_bracket(x, z, u), y, v) -
                                      rho_left(grid, algebra.basis_bracket(y, z, u), x, v);
                         sink.expect_equal("bracket_alternation", t, lin.flat(), zero);
                         sink.expect_equal("quadratic", t, rho_quadratic_residual(rho, x, y, z, u).flat(), zero);
                       });
}

}  // namespace filippov
