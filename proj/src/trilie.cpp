#include "filippov/trilie.hpp"

#include <algorithm>

namespace filippov {

namespace {

void check_length(std::span<const Scalar> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw InputError(std::string(what) + ": vector of length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(n));
  }
}

// out += factor * sign * entry
void accumulate(Vector& out, const SparseVector& entry, const Scalar& factor, int sign) {
  for (const auto& term : entry) {
    if (sign > 0)
      out[term.index] += factor * term.coeff;
    else
      out[term.index] -= factor * term.coeff;
  }
}

}  // namespace

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

ThreeLieAlgebra::ThreeLieAlgebra(std::size_t dim) : dim_(dim), labels_(default_labels(dim)) { build_lookup(); }

ThreeLieAlgebra::ThreeLieAlgebra(std::size_t dim, std::vector<std::string> labels, const StructureTable& table)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.size() != dim_) {
    throw InputError("algebra of dimension " + std::to_string(dim_) + " given " + std::to_string(labels_.size()) +
                     " basis labels");
  }
  for (const auto& [key, value] : table) {
    if (!(key[0] < key[1] && key[1] < key[2]) || key[2] >= dim_) {
      throw InputError("structure constant triple (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                       std::to_string(key[2]) + ") is not strictly increasing within dimension " +
                       std::to_string(dim_));
    }
    check_length(value, dim_, "structure constant");
    SparseVector sparse;
    for (std::size_t l = 0; l < dim_; ++l)
      if (sgn(value[l]) != 0) sparse.push_back(Term{l, value[l]});
    if (sparse.empty()) continue;
    keys_.push_back(key);
    entries_.push_back(std::move(sparse));
  }
  build_lookup();
}

void ThreeLieAlgebra::build_lookup() {
  lookup_.assign(dim_ * dim_ * dim_, 0);
  for (std::size_t e = 0; e < keys_.size(); ++e) {
    auto id = static_cast<std::int32_t>(e + 1);
    auto [i, j, k] = keys_[e];
    lookup_[slot(i, j, k)] = id;
    lookup_[slot(j, k, i)] = id;
    lookup_[slot(k, i, j)] = id;
    lookup_[slot(j, i, k)] = -id;
    lookup_[slot(i, k, j)] = -id;
    lookup_[slot(k, j, i)] = -id;
  }
}

StructureTable ThreeLieAlgebra::table() const {
  StructureTable table;
  for (std::size_t e = 0; e < keys_.size(); ++e) {
    Vector v(dim_);
    for (const auto& term : entries_[e]) v[term.index] = term.coeff;
    table.emplace(keys_[e], std::move(v));
  }
  return table;
}

const SparseVector* ThreeLieAlgebra::basis_bracket(std::size_t i, std::size_t j, std::size_t k, int& sign) const {
  std::int32_t id = lookup_[slot(i, j, k)];
  if (id == 0) return nullptr;
  sign = id > 0 ? 1 : -1;
  return &entries_[static_cast<std::size_t>(id > 0 ? id : -id) - 1];
}

Vector ThreeLieAlgebra::basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw InputError("basis index out of range");
  Vector out(dim_);
  int sign = 0;
  if (const auto* entry = basis_bracket(i, j, k, sign)) accumulate(out, *entry, 1, sign);
  return out;
}

Vector ThreeLieAlgebra::bracket(std::span<const Scalar> u, std::span<const Scalar> v,
                                std::span<const Scalar> w) const {
  check_length(u, dim_, "bracket");
  check_length(v, dim_, "bracket");
  check_length(w, dim_, "bracket");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == i || sgn(v[j]) == 0) continue;
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (k == i || k == j || sgn(w[k]) == 0) continue;
        int sign = 0;
        if (const auto* entry = basis_bracket(i, j, k, sign)) accumulate(out, *entry, uv * w[k], sign);
      }
    }
  }
  return out;
}

Vector ThreeLieAlgebra::bracket_with_basis(std::span<const Scalar> u, std::size_t j, std::size_t k) const {
  check_length(u, dim_, "bracket");
  Vector out(dim_);
  if (j == k) return out;
  for (std::size_t l = 0; l < dim_; ++l) {
    if (sgn(u[l]) == 0) continue;
    int sign = 0;
    if (const auto* entry = basis_bracket(l, j, k, sign)) accumulate(out, *entry, u[l], sign);
  }
  return out;
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
  return LinearMap(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

CheckReport check_fundamental_identity(const ThreeLieAlgebra& algebra, const CheckOptions& options) {
  const std::size_t n = algebra.dim();
  auto tuples = detail::concat_product(detail::combinations(n, 3), detail::combinations(n, 2));
  return detail::sweep("fundamental_identity", tuples, options,
                       [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                         const std::size_t x = t[0], y = t[1], z = t[2], u = t[3], v = t[4];
                         Vector lhs = algebra.bracket_with_basis(algebra.basis_bracket(x, y, z), u, v);
                         Vector rhs = algebra.bracket_with_basis(algebra.basis_bracket(x, u, v), y, z);
                         // [x, w, z] = -[w, x, z] and [x, y, w] = [w, x, y]
                         Vector mid = algebra.bracket_with_basis(algebra.basis_bracket(y, u, v), x, z);
                         Vector last = algebra.bracket_with_basis(algebra.basis_bracket(z, u, v), x, y);
                         for (std::size_t l = 0; l < n; ++l) rhs[l] += last[l] - mid[l];
                         sink.expect_equal("fundamental_identity", t, lhs, rhs);
                       });
}

CheckReport is_derivation(const ThreeLieAlgebra& algebra, const LinearMap& d, const CheckOptions& options) {
  const std::size_t n = algebra.dim();
  if (d.source_dim() != n || d.target_dim() != n) {
    throw InputError("derivation candidate must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.matrix().column(i));
  return detail::sweep("derivation", detail::combinations(n, 3), options,
                       [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                         const std::size_t i = t[0], j = t[1], k = t[2];
                         Vector lhs = d(algebra.basis_bracket(i, j, k));
                         Vector rhs = algebra.bracket_with_basis(images[i], j, k);
                         Vector b = algebra.bracket_with_basis(images[j], i, k);
                         Vector c = algebra.bracket_with_basis(images[k], i, j);
                         for (std::size_t l = 0; l < n; ++l) rhs[l] += c[l] - b[l];
                         sink.expect_equal("derivation", t, lhs, rhs);
                       });
}

LinearMap inner_derivation(const ThreeLieAlgebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = algebra.dim();
  check_length(x, n, "inner_derivation");
  check_length(y, n, "inner_derivation");
  Matrix m(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    Vector image = algebra.bracket(x, y, unit_vector(n, w));
    for (std::size_t l = 0; l < n; ++l) m(l, w) = image[l];
  }
  return LinearMap(std::move(m));
}

Matrix derivation_system(const ThreeLieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> rows;
  for (const auto& t : detail::combinations(n, 3)) {
    const std::size_t i = t[0], j = t[1], k = t[2];
    Vector c = algebra.basis_bracket(i, j, k);
    for (std::size_t l = 0; l < n; ++l) {
      Vector row(n * n);
      for (std::size_t s = 0; s < n; ++s) row[l * n + s] += c[s];
      for (std::size_t a = 0; a < n; ++a) {
        row[a * n + i] -= algebra.basis_bracket(a, j, k)[l];
        row[a * n + j] -= algebra.basis_bracket(i, a, k)[l];
        row[a * n + k] -= algebra.basis_bracket(i, j, a)[l];
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return Matrix::from_rows(rows, n * n);
}

std::vector<LinearMap> derivation_algebra(const ThreeLieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  Subspace der = nullspace(derivation_system(algebra));
  std::vector<LinearMap> basis;
  for (const auto& v : der.basis_vectors()) basis.emplace_back(Matrix::from_flat(n, n, v));
  return basis;
}

bool in_span(const std::vector<LinearMap>& basis, const LinearMap& map) {
  const std::size_t len = map.matrix().flat().size();
  std::vector<Vector> cols;
  for (const auto& b : basis) {
    if (b.matrix().rows() != map.matrix().rows() || b.matrix().cols() != map.matrix().cols())
      throw InputError("in_span: map shapes differ");
    cols.push_back(b.matrix().flat());
  }
  return solve_affine(Matrix::from_columns(cols, len), map.matrix().flat()).has_value();
}

Subspace center(const ThreeLieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> rows;
  for (const auto& p : detail::combinations(n, 2)) {
    for (std::size_t l = 0; l < n; ++l) {
      Vector row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = algebra.basis_bracket(i, p[0], p[1])[l];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return nullspace(Matrix::from_rows(rows, n));
}

namespace {

void check_ambient(const ThreeLieAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) throw InputError("subspace ambient dimension differs from algebra dimension");
}

}  // namespace

bool is_subalgebra(const ThreeLieAlgebra& algebra, const Subspace& s) {
  check_ambient(algebra, s);
  auto basis = s.basis_vectors();
  for (const auto& t : detail::combinations(basis.size(), 3))
    if (!s.contains(algebra.bracket(basis[t[0]], basis[t[1]], basis[t[2]]))) return false;
  return true;
}

bool is_ideal(const ThreeLieAlgebra& algebra, const Subspace& s) {
  check_ambient(algebra, s);
  for (const auto& b : s.basis_vectors())
    for (const auto& p : detail::combinations(algebra.dim(), 2))
      if (!s.contains(algebra.bracket_with_basis(b, p[0], p[1]))) return false;
  return true;
}

bool is_abelian_ideal(const ThreeLieAlgebra& algebra, const Subspace& s) {
  if (!is_ideal(algebra, s)) return false;
  auto basis = s.basis_vectors();
  const std::size_t n = algebra.dim();
  for (const auto& p : detail::combinations(basis.size(), 2))
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(algebra.bracket(basis[p[0]], basis[p[1]], unit_vector(n, k)))) return false;
  return true;
}

CheckReport is_homomorphism(const LinearMap& f, const ThreeLieAlgebra& source, const ThreeLieAlgebra& target,
                            const CheckOptions& options) {
  if (f.source_dim() != source.dim() || f.target_dim() != target.dim()) {
    throw InputError("homomorphism candidate has shape " + std::to_string(f.target_dim()) + "x" +
                     std::to_string(f.source_dim()) + ", expected " + std::to_string(target.dim()) + "x" +
                     std::to_string(source.dim()));
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(f.matrix().column(i));
  return detail::sweep("homomorphism", detail::combinations(source.dim(), 3), options,
                       [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                         Vector lhs = f(source.basis_bracket(t[0], t[1], t[2]));
                         Vector rhs = target.bracket(images[t[0]], images[t[1]], images[t[2]]);
                         sink.expect_equal("homomorphism", t, lhs, rhs);
                       });
}

}  // namespace filippov
