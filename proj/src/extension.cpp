#include "filippov/extension.hpp"

namespace filippov {

namespace {

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

int permutation_sign(std::array<std::size_t, 3>& t) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int a = 0; a < 2; ++a)
      if (t[a] > t[a + 1]) {
        std::swap(t[a], t[a + 1]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

TriMapToH::TriMapToH(std::size_t m_dim, std::size_t h_dim) : m_dim_(m_dim), h_dim_(h_dim) {}

TriMapToH::TriMapToH(std::size_t m_dim, std::size_t h_dim, const StructureTable& table)
    : m_dim_(m_dim), h_dim_(h_dim) {
  for (const auto& [key, value] : table) {
    if (!(key[0] < key[1] && key[1] < key[2]) || key[2] >= m_dim_)
      throw InputError("mu triple " + triple_text(key[0], key[1], key[2]) + " is not increasing within dimension " +
                       std::to_string(m_dim_));
    if (value.size() != h_dim_) throw InputError("mu value must have length " + std::to_string(h_dim_));
    if (!filippov::is_zero(value)) table_.emplace(key, value);
  }
}

Vector TriMapToH::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= m_dim_ || j >= m_dim_ || k >= m_dim_) throw InputError("mu index out of range");
  Vector out(h_dim_);
  if (i == j || j == k || i == k) return out;
  std::array<std::size_t, 3> t{i, j, k};
  int sign = permutation_sign(t);
  auto it = table_.find(t);
  if (it == table_.end()) return out;
  out = it->second;
  if (sign < 0)
    for (auto& x : out) x = -x;
  return out;
}

Vector TriMapToH::operator()(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const {
  if (x.size() != m_dim_ || y.size() != m_dim_ || z.size() != m_dim_) throw InputError("mu: vector length mismatch");
  Vector out(h_dim_);
  for (const auto& [key, value] : table_) {
    auto [i, j, k] = key;
    // determinant-style antisymmetrization of the three coordinates
    Scalar c = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
               x[k] * (y[i] * z[j] - y[j] * z[i]);
    if (sgn(c) == 0) continue;
    for (std::size_t a = 0; a < h_dim_; ++a) out[a] += c * value[a];
  }
  return out;
}

MixedAction::MixedAction(std::size_t m_dim, std::size_t h_dim) : m_dim_(m_dim), h_dim_(h_dim) {}

MixedAction::MixedAction(std::size_t m_dim, std::size_t h_dim, const MixedTable& table)
    : m_dim_(m_dim), h_dim_(h_dim) {
  for (const auto& [key, m] : table) {
    if (key.first >= m_dim_ || key.second >= h_dim_) {
      throw InputError("beta entry (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       ") is out of range");
    }
    if (m.rows() != h_dim_ || m.cols() != h_dim_)
      throw InputError("beta matrix must be " + std::to_string(h_dim_) + "x" + std::to_string(h_dim_));
    if (!m.is_zero()) table_.emplace(key, m);
  }
}

Matrix MixedAction::at(std::size_t i, std::size_t a) const {
  if (i >= m_dim_ || a >= h_dim_) throw InputError("beta index out of range");
  auto it = table_.find({i, a});
  return it == table_.end() ? Matrix(h_dim_, h_dim_) : it->second;
}

Matrix MixedAction::operator()(std::span<const Scalar> x, std::span<const Scalar> h) const {
  if (x.size() != m_dim_ || h.size() != h_dim_) throw InputError("beta: vector length mismatch");
  Matrix out(h_dim_, h_dim_);
  for (const auto& [key, m] : table_) {
    Scalar c = x[key.first] * h[key.second];
    if (sgn(c) != 0) out += m * c;
  }
  return out;
}

ExtensionSpec::ExtensionSpec(ThreeLieAlgebra m, ThreeLieAlgebra h, TriMapToH mu, PairAction rho, MixedAction beta)
    : m_(std::move(m)), h_(std::move(h)), mu_(std::move(mu)), rho_(std::move(rho)), beta_(std::move(beta)) {
  const std::size_t md = m_.dim(), hd = h_.dim();
  if (mu_.m_dim() != md || mu_.h_dim() != hd) throw InputError("mu dimensions do not match M and H");
  if (rho_.algebra_dim() != md || rho_.target_dim() != hd) throw InputError("rho dimensions do not match M and H");
  if (beta_.m_dim() != md || beta_.h_dim() != hd) throw InputError("beta dimensions do not match M and H");
  if (!check_fundamental_identity(m_, {1, 1}).passed) throw InputError("M fails the fundamental identity");
  if (!check_fundamental_identity(h_, {1, 1}).passed) throw InputError("H fails the fundamental identity");
  for (const auto& [key, matrix] : rho_.table()) {
    if (!is_derivation(h_, LinearMap(matrix), {1, 1}).passed)
      throw InputError("rho(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       ") is not a derivation of H");
  }
  for (const auto& [key, matrix] : beta_.table()) {
    if (!is_derivation(h_, LinearMap(matrix), {1, 1}).passed)
      throw InputError("beta(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       ") is not a derivation of H");
  }
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t a = 0; a < hd; ++a)
      for (std::size_t b = a; b < hd; ++b) {
        for (std::size_t c = 0; c < hd; ++c) {
          if (beta_.at(i, a)(c, b) + beta_.at(i, b)(c, a) != 0) {
            throw InputError("beta(" + std::to_string(i) + ",h)h' is not skew in (h,h') at (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
          }
        }
      }
}

ThreeLieAlgebra assemble(const ExtensionSpec& spec) {
  const std::size_t md = spec.m_dim(), hd = spec.h_dim(), n = md + hd;
  StructureTable table;
  std::vector<Matrix> rho(md * md), beta(md * hd);
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t j = 0; j < md; ++j) rho[i * md + j] = spec.rho().at(i, j);
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t a = 0; a < hd; ++a) beta[i * hd + a] = spec.beta().at(i, a);
  for (const auto& t : detail::combinations(n, 3)) {
    const std::size_t i = t[0], j = t[1], k = t[2];
    Vector v(n);
    if (k < md) {
      Vector mm = spec.m().basis_bracket(i, j, k);
      Vector mu = spec.mu().at(i, j, k);
      std::copy(mm.begin(), mm.end(), v.begin());
      std::copy(mu.begin(), mu.end(), v.begin() + static_cast<std::ptrdiff_t>(md));
    } else if (j < md) {
      Vector w = rho[i * md + j].column(k - md);
      std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(md));
    } else if (i < md) {
      Vector w = beta[i * hd + (j - md)].column(k - md);
      std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(md));
    } else {
      Vector w = spec.h().basis_bracket(i - md, j - md, k - md);
      std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(md));
    }
    if (!is_zero(v)) table.emplace(std::array{i, j, k}, std::move(v));
  }
  auto labels = spec.m().labels();
  for (const auto& l : spec.h().labels()) labels.push_back(l);
  // keep labels distinct when M and H use the same names
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t i = 0; i < md; ++i)
      if (labels[md + a] == labels[i]) {
        labels[md + a] = "h:" + labels[md + a];
        break;
      }
  return ThreeLieAlgebra(n, std::move(labels), table);
}

namespace {

// Dense precomputed pieces of a spec, so that the sweeps below read like
// the identities they check.
class Pieces {
 public:
  explicit Pieces(const ExtensionSpec& spec)
      : spec_(spec), m_(spec.m_dim()), h_(spec.h_dim()), rho_(m_ * m_), beta_(m_ * h_), mbr_(m_ * m_ * m_),
        mu_(m_ * m_ * m_) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) rho_[i * m_ + j] = spec.rho().at(i, j);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t a = 0; a < h_; ++a) beta_[i * h_ + a] = spec.beta().at(i, a);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k) {
          mbr_[(i * m_ + j) * m_ + k] = spec.m().basis_bracket(i, j, k);
          mu_[(i * m_ + j) * m_ + k] = spec.mu().at(i, j, k);
        }
  }

  std::size_t m() const { return m_; }
  std::size_t h() const { return h_; }

  const Matrix& rho(std::size_t i, std::size_t j) const { return rho_[i * m_ + j]; }
  const Matrix& beta(std::size_t i, std::size_t a) const { return beta_[i * h_ + a]; }
  const Vector& mbr(std::size_t i, std::size_t j, std::size_t k) const { return mbr_[(i * m_ + j) * m_ + k]; }
  const Vector& mu(std::size_t i, std::size_t j, std::size_t k) const { return mu_[(i * m_ + j) * m_ + k]; }

  /// rho(x, e_j) for x in M.
  Matrix rho_left(std::span<const Scalar> x, std::size_t j) const {
    Matrix out(h_, h_);
    for (std::size_t l = 0; l < m_; ++l)
      if (sgn(x[l]) != 0) out += rho(l, j) * x[l];
    return out;
  }
  /// beta(e_i, v) for v in H.
  Matrix beta_h(std::size_t i, std::span<const Scalar> v) const {
    Matrix out(h_, h_);
    for (std::size_t a = 0; a < h_; ++a)
      if (sgn(v[a]) != 0) out += beta(i, a) * v[a];
    return out;
  }
  /// beta(x, e_a) for x in M.
  Matrix beta_m(std::span<const Scalar> x, std::size_t a) const {
    Matrix out(h_, h_);
    for (std::size_t l = 0; l < m_; ++l)
      if (sgn(x[l]) != 0) out += beta(l, a) * x[l];
    return out;
  }
  /// mu with a general vector in the given slot and basis vectors elsewhere.
  Vector mu_slot(int slot, std::span<const Scalar> x, std::size_t p, std::size_t q) const {
    Vector out(h_);
    for (std::size_t l = 0; l < m_; ++l) {
      if (sgn(x[l]) == 0) continue;
      const Vector& v = slot == 0 ? mu(l, p, q) : slot == 1 ? mu(p, l, q) : mu(p, q, l);
      for (std::size_t a = 0; a < h_; ++a) out[a] += x[l] * v[a];
    }
    return out;
  }
  Vector hbr(std::span<const Scalar> u, std::span<const Scalar> v, std::span<const Scalar> w) const {
    return spec_.h().bracket(u, v, w);
  }
  Vector hbr(std::span<const Scalar> u, std::span<const Scalar> v, std::size_t w) const {
    // [u, v, e_w] = [e_w, u, v]
    Vector out(h_);
    for (std::size_t a = 0; a < h_; ++a) {
      if (sgn(v[a]) == 0) continue;
      Vector t = spec_.h().bracket_with_basis(u, a, w);
      for (std::size_t c = 0; c < h_; ++c) out[c] += v[a] * t[c];
    }
    return out;
  }
  Vector e(std::size_t a) const { return unit_vector(h_, a); }
  Vector hbasis_bracket(std::size_t a, std::size_t b, std::size_t c) const {
    return spec_.h().basis_bracket(a, b, c);
  }

 private:
  const ExtensionSpec& spec_;
  std::size_t m_, h_;
  std::vector<Matrix> rho_, beta_;
  std::vector<Vector> mbr_, mu_;
};

using Sides = std::pair<Vector, Vector>;

Vector add(Vector a, const Vector& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign > 0)
      a[i] += b[i];
    else
      a[i] -= b[i];
  }
  return a;
}

Sides rho_quadratic_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x = t[0], y = t[1], z = t[2], u = t[3];
  auto sym = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return p.rho(a, b) * p.rho(c, d) + p.rho(c, d) * p.rho(a, b);
  };
  Matrix lhs = sym(x, u, y, z) + sym(x, y, z, u) - sym(x, z, y, u);
  return {lhs.flat(), zero_vector(p.h() * p.h())};
}

Sides rho_bracket_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
  // rho(x4, v) = -rho(v, x4)
  Matrix lhs = p.rho_left(p.mbr(x1, x2, x3), x4) * Scalar(-1);
  Matrix rhs = p.rho(x3, x1) * p.rho(x4, x2) - p.rho(x2, x1) * p.rho(x4, x3) + p.rho(x2, x3) * p.rho(x4, x1) -
               p.beta_h(x4, p.mu(x1, x2, x3));
  return {lhs.flat(), rhs.flat()};
}

Sides rho_bracket_swap_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
  Matrix lhs = p.rho_left(p.mbr(x1, x2, x3), x4) * Scalar(-1);
  Matrix rhs = p.rho_left(p.mbr(x1, x2, x4), x3) * Scalar(-1) - p.beta_h(x4, p.mu(x1, x2, x3)) +
               p.beta_h(x3, p.mu(x1, x2, x4)) - p.rho(x1, x2) * p.rho(x3, x4) + p.rho(x3, x4) * p.rho(x1, x2);
  return {lhs.flat(), rhs.flat()};
}

Sides beta_quadratic_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x = t[0], y = t[1], h1 = t[2], h2 = t[3], h = t[4];
  Vector lhs = p.beta(y, h2).apply(p.beta(x, h1).column(h));
  lhs = add(lhs, p.beta(y, h).apply(p.beta(x, h1).column(h2)), -1);
  lhs = add(lhs, p.beta(x, h1).apply(p.beta(y, h2).column(h)), -1);
  Vector rhs = p.hbr(p.rho(x, y).column(h1), p.e(h2), h);
  return {lhs, rhs};
}

Sides rho_on_bracket_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x = t[0], y = t[1], h1 = t[2], h2 = t[3], h = t[4];
  Vector lhs = p.rho(x, y).apply(p.hbasis_bracket(h1, h2, h));
  lhs = add(lhs, p.beta(y, h1).apply(p.beta(x, h2).column(h)));
  lhs = add(lhs, p.beta(x, h1).apply(p.beta(y, h2).column(h)), -1);
  Vector rhs = p.hbr(p.rho(x, y).column(h1), p.e(h2), h);
  return {lhs, rhs};
}

Sides beta_adjoint_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x = t[0], h1 = t[1], h2 = t[2], h3 = t[3], w = t[4];
  Vector lhs = p.hbr(p.beta(x, h1).column(h3), p.e(h2), w);
  lhs = add(lhs, p.hbr(p.e(h3), p.beta(x, h1).column(h2), w));
  lhs = add(lhs, p.hbr(p.beta(x, h3).column(h2), p.e(h1), w));
  Vector rhs = p.beta_h(x, p.hbasis_bracket(h1, h2, h3)).column(w);
  return {lhs, rhs};
}

Sides beta_on_bracket_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x = t[0], h1 = t[1], h2 = t[2], h3 = t[3], h4 = t[4];
  Vector lhs = p.hbr(p.e(h1), p.e(h2), p.beta(x, h3).column(h4));
  lhs = add(lhs, p.beta_h(x, p.hbasis_bracket(h1, h2, h3)).column(h4), -1);
  lhs = add(lhs, p.hbr(p.e(h3), p.e(h4), p.beta(x, h1).column(h2)), -1);
  Vector rhs = p.beta(x, h3).apply(p.hbasis_bracket(h1, h2, h4));
  return {lhs, rhs};
}

Sides mu_center_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], h1 = t[3], h2 = t[4];
  Vector lhs = p.hbr(p.mu(x1, x2, x3), p.e(h1), h2);
  Vector rhs = p.rho(x2, x3).apply(p.beta(x1, h1).column(h2));
  rhs = add(rhs, p.rho(x1, x3).apply(p.beta(x2, h1).column(h2)), -1);
  rhs = add(rhs, p.rho(x1, x2).apply(p.beta(x3, h1).column(h2)));
  rhs = add(rhs, p.beta_m(p.mbr(x1, x2, x3), h1).column(h2), -1);
  return {lhs, rhs};
}

Sides beta_rho_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], h1 = t[3], h2 = t[4];
  Vector lhs = p.beta_h(x1, p.e(h1)).apply(p.rho(x2, x3).column(h2));
  lhs = add(lhs, p.beta(x3, h2).apply(p.rho(x1, x2).column(h1)));
  Vector rhs = p.rho(x2, x3).apply(p.beta(x1, h1).column(h2));
  rhs = add(rhs, p.beta(x2, h2).apply(p.rho(x1, x3).column(h1)));
  return {lhs, rhs};
}

Sides mu_cocycle_sides(const Pieces& p, const std::vector<std::size_t>& t) {
  const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], x5 = t[4];
  Vector lhs = p.mu_slot(2, p.mbr(x3, x4, x5), x1, x2);
  lhs = add(lhs, p.mu_slot(0, p.mbr(x1, x2, x3), x4, x5), -1);
  lhs = add(lhs, p.mu_slot(1, p.mbr(x1, x2, x4), x3, x5), -1);
  lhs = add(lhs, p.mu_slot(2, p.mbr(x1, x2, x5), x3, x4), -1);
  Vector rhs = p.rho(x3, x4).apply(p.mu(x1, x2, x5));
  rhs = add(rhs, p.rho(x3, x5).apply(p.mu(x1, x2, x4)), -1);
  rhs = add(rhs, p.rho(x1, x2).apply(p.mu(x3, x4, x5)), -1);
  rhs = add(rhs, p.rho(x4, x5).apply(p.mu(x1, x2, x3)));
  return {lhs, rhs};
}

template <class SidesFn>
CheckReport run_condition(const char* name, const Pieces& p, std::vector<std::size_t> dims,
                          const CheckOptions& options, SidesFn sides) {
  return detail::sweep(name, detail::product(dims), options,
                       [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                         auto [lhs, rhs] = sides(p, t);
                         sink.expect_equal(name, t, lhs, rhs);
                       });
}

}  // namespace

CheckReport check_rho_quadratic(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m();
  return run_condition("rho_quadratic", p, {m, m, m, m}, options, rho_quadratic_sides);
}

CheckReport check_rho_bracket(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m();
  return run_condition("rho_bracket", p, {m, m, m, m}, options, rho_bracket_sides);
}

CheckReport check_beta_quadratic(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m(), h = p.h();
  return run_condition("beta_quadratic", p, {m, m, h, h, h}, options, beta_quadratic_sides);
}

CheckReport check_beta_adjoint(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m(), h = p.h();
  return run_condition("beta_adjoint", p, {m, h, h, h, h}, options, beta_adjoint_sides);
}

CheckReport check_mu_center(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m(), h = p.h();
  return run_condition("mu_center", p, {m, m, m, h, h}, options, mu_center_sides);
}

CheckReport check_beta_rho(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m(), h = p.h();
  return run_condition("beta_rho", p, {m, m, m, h, h}, options, beta_rho_sides);
}

CheckReport check_mu_cocycle(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m();
  return run_condition("mu_cocycle", p, {m, m, m, m, m}, options, mu_cocycle_sides);
}

ConditionLedger check_extension_conditions(const ExtensionSpec& spec, const CheckOptions& options) {
  ConditionLedger ledger;
  ledger.conditions = {check_rho_quadratic(spec, options), check_rho_bracket(spec, options),
                       check_beta_quadratic(spec, options), check_beta_adjoint(spec, options),
                       check_mu_center(spec, options),     check_beta_rho(spec, options),
                       check_mu_cocycle(spec, options)};
  for (const auto& c : ledger.conditions) ledger.passed = ledger.passed && c.passed;
  return ledger;
}

CheckReport check_condition_implications(const ExtensionSpec& spec, const CheckOptions& options) {
  Pieces p(spec);
  const std::size_t m = p.m(), h = p.h();
  CheckReport total;
  total.name = "condition_implications";
  if (check_rho_bracket(spec, options).passed) {
    merge_into(total,
               detail::sweep("quadratic_iff_swap", detail::product({m, m, m, m}), options,
                             [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                               auto [q_lhs, q_rhs] = rho_quadratic_sides(p, t);
                               auto [s_lhs, s_rhs] = rho_bracket_swap_sides(p, t);
                               bool quadratic = q_lhs == q_rhs, swap = s_lhs == s_rhs;
                               if (quadratic != swap)
                                 sink.add("quadratic_iff_swap", t, add(q_lhs, q_rhs, -1), add(s_lhs, s_rhs, -1));
                             }),
               options.witness_cap);
  }
  if (check_beta_quadratic(spec, options).passed)
    merge_into(total, run_condition("rho_on_bracket", p, {m, m, h, h, h}, options, rho_on_bracket_sides),
               options.witness_cap);
  if (check_beta_adjoint(spec, options).passed)
    merge_into(total, run_condition("beta_on_bracket", p, {m, h, h, h, h}, options, beta_on_bracket_sides),
               options.witness_cap);
  return total;
}

namespace {

void require_three_lie(const ExtensionSpec& spec) {
  if (!check_fundamental_identity(assemble(spec)).passed)
    throw InputError("the assembled extension fails the fundamental identity");
}

}  // namespace

ModuleCriterion check_module_criterion(const ExtensionSpec& spec, const CheckOptions& options) {
  require_three_lie(spec);
  ModuleCriterion result;
  result.is_module = check_representation(spec.m(), spec.rho(), options).passed;
  Pieces p(spec);
  result.beta_mu_zero = true;
  for (std::size_t i = 0; i < p.m() && result.beta_mu_zero; ++i)
    for (const auto& t : detail::combinations(p.m(), 3))
      if (!p.beta_h(i, p.mu(t[0], t[1], t[2])).is_zero()) {
        result.beta_mu_zero = false;
        break;
      }
  return result;
}

BetaFreeCriterion check_beta_free_criterion(const ExtensionSpec& spec, const CheckOptions& options) {
  if (!spec.beta().is_zero()) throw InputError("criterion applies to extensions with beta = 0");
  if (!check_representation(spec.m(), spec.rho(), options).passed)
    throw InputError("criterion needs (H, rho) to be an M-module");
  Pieces p(spec);
  const std::size_t m = p.m(), h = p.h();
  Subspace z = center(spec.h());
  BetaFreeCriterion out;
  out.mu_in_center = detail::sweep("mu_in_center", detail::combinations(m, 3), options,
                                   [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                                     const Vector& v = p.mu(t[0], t[1], t[2]);
                                     if (!z.contains(v)) sink.add("mu_in_center", t, v, {});
                                   });
  out.rho_into_center = detail::sweep("rho_into_center", detail::concat_product(detail::combinations(m, 2),
                                                                                detail::product({h})),
                                      options, [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                                        Vector v = p.rho(t[0], t[1]).column(t[2]);
                                        if (!z.contains(v)) sink.add("rho_into_center", t, v, {});
                                      });
  auto der = derivation_algebra(spec.h());
  out.rho_commutes_with_der =
      detail::sweep("rho_commutes_with_der",
                    detail::concat_product(detail::combinations(m, 2), detail::product({der.size()})), options,
                    [&](const std::vector<std::size_t>& t, detail::WitnessSink& sink) {
                      const Matrix& r = p.rho(t[0], t[1]);
                      const Matrix& d = der[t[2]].matrix();
                      sink.expect_equal("rho_commutes_with_der", t, (r * d).flat(), (d * r).flat());
                    });
  out.mu_cocycle = check_mu_cocycle(spec, options);
  out.passed = out.mu_in_center.passed && out.rho_into_center.passed && out.mu_cocycle.passed;
  return out;
}

LinearMap inclusion_map(const ExtensionSpec& spec) {
  const std::size_t md = spec.m_dim(), hd = spec.h_dim();
  Matrix i(md + hd, hd);
  for (std::size_t a = 0; a < hd; ++a) i(md + a, a) = 1;
  return LinearMap(std::move(i));
}

LinearMap projection_map(const ExtensionSpec& spec) {
  const std::size_t md = spec.m_dim(), hd = spec.h_dim();
  Matrix p(md, md + hd);
  for (std::size_t k = 0; k < md; ++k) p(k, k) = 1;
  return LinearMap(std::move(p));
}

Subspace h_block(const ExtensionSpec& spec) { return column_space(inclusion_map(spec).matrix()); }

CheckReport check_exact_sequence(const ExtensionSpec& spec, const CheckOptions& options) {
  require_three_lie(spec);
  ThreeLieAlgebra a = assemble(spec);
  LinearMap i = inclusion_map(spec), p = projection_map(spec);
  CheckReport total;
  total.name = "exact_sequence";
  auto fold = [&](CheckReport part, const char* identity) {
    for (auto& w : part.witnesses) w.identity = identity;
    merge_into(total, part, options.witness_cap);
  };
  fold(is_homomorphism(i, spec.h(), a, options), "inclusion_homomorphism");
  fold(is_homomorphism(p, a, spec.m(), options), "projection_homomorphism");
  fold(boolean_report("image_equals_kernel", column_space(i.matrix()) == nullspace(p.matrix())),
       "image_equals_kernel");
  fold(boolean_report("inclusion_injective", rank(i.matrix()) == spec.h_dim()), "inclusion_injective");
  fold(boolean_report("projection_surjective", rank(p.matrix()) == spec.m_dim()), "projection_surjective");
  return total;
}

}  // namespace filippov
