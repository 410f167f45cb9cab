#include "filippov/constructions.hpp"

#include <functional>
#include <set>

namespace filippov {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

StructureTable table_from(std::size_t n, const std::function<Vector(std::size_t, std::size_t, std::size_t)>& rule) {
  StructureTable table;
  for (const auto& t : detail::combinations(n, 3)) {
    Vector v = rule(t[0], t[1], t[2]);
    if (!is_zero(v)) table.emplace(std::array{t[0], t[1], t[2]}, std::move(v));
  }
  return table;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, const LieTable& table) : dim_(dim) {
  for (const auto& [key, value] : table) {
    if (key.first >= key.second || key.second >= dim_) {
      throw InputError("Lie bracket pair " + pair_text(key.first, key.second) + " is not increasing within dimension " +
                       std::to_string(dim_));
    }
    if (value.size() != dim_) throw InputError("Lie bracket value has the wrong length");
    if (!is_zero(value)) table_.emplace(key, value);
  }
  for (const auto& t : detail::combinations(dim_, 3)) {
    Vector sum = bracket(basis_bracket(t[0], t[1]), unit_vector(dim_, t[2]));
    Vector b = bracket(basis_bracket(t[1], t[2]), unit_vector(dim_, t[0]));
    Vector c = bracket(basis_bracket(t[2], t[0]), unit_vector(dim_, t[1]));
    for (std::size_t l = 0; l < dim_; ++l) sum[l] += b[l] + c[l];
    if (!is_zero(sum)) {
      throw InputError("Jacobi identity fails on basis triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                       "," + std::to_string(t[2]) + ")");
    }
  }
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  if (i == j) return out;
  bool swapped = i > j;
  auto it = table_.find(swapped ? std::pair{j, i} : std::pair{i, j});
  if (it == table_.end()) return out;
  out = it->second;
  if (swapped)
    for (auto& x : out) x = -x;
  return out;
}

Vector LieAlgebra::bracket(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InputError("Lie bracket: vector length mismatch");
  Vector out(dim_);
  for (const auto& [key, value] : table_) {
    Scalar c = u[key.first] * v[key.second] - u[key.second] * v[key.first];
    if (sgn(c) == 0) continue;
    for (std::size_t l = 0; l < dim_; ++l) out[l] += c * value[l];
  }
  return out;
}

MetricForm::MetricForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InputError("metric Gram matrix must be square");
  if (!(gram_ == gram_.transpose())) throw InputError("metric Gram matrix must be symmetric");
  if (rank(gram_) != gram_.rows()) throw InputError("metric Gram matrix is degenerate");
}

Scalar MetricForm::operator()(std::span<const Scalar> u, std::span<const Scalar> v) const {
  Vector gv = gram_.apply(v);
  Scalar s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * gv[i];
  return s;
}

bool is_invariant(const MetricForm& form, const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  if (form.dim() != n) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar lhs = form(lie.basis_bracket(x, y), unit_vector(n, z));
        Scalar rhs = -form(unit_vector(n, y), lie.basis_bracket(x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

ThreeLieAlgebra abelian(std::size_t n) { return ThreeLieAlgebra(n); }

ThreeLieAlgebra simple4() {
  StructureTable t;
  auto e = [](std::size_t l, int s) {
    Vector v(4);
    v[l] = s;
    return v;
  };
  t[{0, 1, 2}] = e(3, 1);
  t[{0, 1, 3}] = e(2, -1);
  t[{0, 2, 3}] = e(1, 1);
  t[{1, 2, 3}] = e(0, -1);
  return ThreeLieAlgebra(4, default_labels(4), t);
}

ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  StructureTable t;
  for (const auto& [key, value] : a.table()) {
    Vector v(n);
    std::copy(value.begin(), value.end(), v.begin());
    t.emplace(key, std::move(v));
  }
  for (const auto& [key, value] : b.table()) {
    Vector v(n);
    std::copy(value.begin(), value.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    t.emplace(std::array{key[0] + a.dim(), key[1] + a.dim(), key[2] + a.dim()}, std::move(v));
  }
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  // clashing names fall back to e1..en
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) labels = default_labels(n);
  return ThreeLieAlgebra(n, std::move(labels), t);
}

ThreeLieAlgebra from_lie_functional(const LieAlgebra& lie, std::span<const Scalar> functional) {
  const std::size_t n = lie.dim();
  if (functional.size() != n) throw InputError("functional length differs from Lie algebra dimension");
  auto f = [&](std::span<const Scalar> v) {
    Scalar s = 0;
    for (std::size_t i = 0; i < n; ++i) s += functional[i] * v[i];
    return s;
  };
  for (const auto& p : detail::combinations(n, 2)) {
    if (sgn(f(lie.basis_bracket(p[0], p[1]))) != 0)
      throw InputError("functional does not vanish on [L,L]: offending pair " + pair_text(p[0], p[1]));
  }
  return ThreeLieAlgebra(n, default_labels(n, "x"), table_from(n, [&](std::size_t i, std::size_t j, std::size_t k) {
                           Vector v(n);
                           auto add = [&](const Scalar& c, const Vector& w) {
                             if (sgn(c) == 0) return;
                             for (std::size_t l = 0; l < n; ++l) v[l] += c * w[l];
                           };
                           add(functional[i], lie.basis_bracket(j, k));
                           add(functional[j], lie.basis_bracket(k, i));
                           add(functional[k], lie.basis_bracket(i, j));
                           return v;
                         }));
}

ThreeLieAlgebra gl_trace_form(std::size_t m) {
  if (m == 0) throw InputError("gl_trace_form needs m >= 1");
  const std::size_t n = m * m;
  auto trace = [m](std::size_t e) { return e / m == e % m ? 1 : 0; };
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  auto commutator = [m, n](std::size_t p, std::size_t q) {
    Vector v(n);
    std::size_t a = p / m, b = p % m, c = q / m, d = q % m;
    if (b == c) v[a * m + d] += 1;
    if (d == a) v[c * m + b] -= 1;
    return v;
  };
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  return ThreeLieAlgebra(n, std::move(labels), table_from(n, [&](std::size_t i, std::size_t j, std::size_t k) {
                           Vector v(n);
                           auto add = [&](int c, const Vector& w) {
                             if (c == 0) return;
                             for (std::size_t l = 0; l < n; ++l) v[l] += c * w[l];
                           };
                           add(trace(i), commutator(j, k));
                           add(trace(j), commutator(k, i));
                           add(trace(k), commutator(i, j));
                           return v;
                         }));
}

ThreeLieAlgebra metric_lie_extension(const LieAlgebra& lie, const MetricForm& form) {
  const std::size_t m = lie.dim();
  if (form.dim() != m) throw InputError("metric dimension differs from Lie algebra dimension");
  if (!is_invariant(form, lie)) throw InputError("metric is not invariant under the Lie bracket");
  const std::size_t n = m + 2, zero = m, minus = m + 1;
  auto labels = default_labels(m, "x");
  labels.push_back("x^0");
  labels.push_back("x^-1");
  return ThreeLieAlgebra(n, std::move(labels), table_from(n, [&](std::size_t i, std::size_t j, std::size_t k) {
                           Vector v(n);
                           if (k == minus) return v;
                           if (k == zero) {
                             // [x_i, x_j, x^0] = [x^0, x_i, x_j]
                             Vector b = lie.basis_bracket(i, j);
                             std::copy(b.begin(), b.end(), v.begin());
                             return v;
                           }
                           v[minus] = form(lie.basis_bracket(i, j), unit_vector(m, k));
                           return v;
                         }));
}

LieAlgebra so3() {
  LieTable t;
  t[{0, 1}] = unit_vector(3, 2);
  t[{1, 2}] = unit_vector(3, 0);
  Vector v = unit_vector(3, 1);
  v[1] = -1;  // [x1,x3] = -x2
  t[{0, 2}] = v;
  return LieAlgebra(3, t);
}

LieAlgebra heisenberg3() {
  LieTable t;
  t[{0, 1}] = unit_vector(3, 2);
  return LieAlgebra(3, t);
}

LieAlgebra add_abelian_summand(const LieAlgebra& lie) {
  const std::size_t n = lie.dim() + 1;
  LieTable t;
  for (const auto& [key, value] : lie.table()) {
    Vector v(n);
    std::copy(value.begin(), value.end(), v.begin());
    t.emplace(key, std::move(v));
  }
  return LieAlgebra(n, t);
}

ThreeLieAlgebra lie_functional_so3() {
  return from_lie_functional(add_abelian_summand(so3()), unit_vector(4, 3));
}

ThreeLieAlgebra lie_functional_heisenberg() {
  return from_lie_functional(add_abelian_summand(heisenberg3()), unit_vector(4, 3));
}

}  // namespace filippov
