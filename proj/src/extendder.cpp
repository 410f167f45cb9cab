#include "filippov/extendder.hpp"

#include <functional>
#include <stdexcept>

namespace filippov {

DerivationPair::DerivationPair(const ThreeLieAlgebra& m, const ThreeLieAlgebra& h, LinearMap sigma, LinearMap tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.source_dim() != m.dim() || sigma_.target_dim() != m.dim())
    throw InputError("sigma must be " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
  if (tau_.source_dim() != h.dim() || tau_.target_dim() != h.dim())
    throw InputError("tau must be " + std::to_string(h.dim()) + "x" + std::to_string(h.dim()));
  if (!is_derivation(m, sigma_).passed) throw InputError("sigma is not a derivation of M");
  if (!is_derivation(h, tau_).passed) throw InputError("tau is not a derivation of H");
}

namespace {

using Residual = std::function<Vector(std::span<const Scalar>)>;

// The residual is affine in the unknowns, so its value at zero and at each
// unit vector determine the system exactly.
LinearSystem linearize(const Residual& residual, std::size_t unknowns) {
  Vector base = residual(zero_vector(unknowns));
  std::vector<Vector> columns;
  columns.reserve(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    Vector col = residual(unit_vector(unknowns, k));
    for (std::size_t r = 0; r < col.size(); ++r) col[r] -= base[r];
    columns.push_back(std::move(col));
  }
  for (auto& b : base) b = -b;
  return {Matrix::from_columns(columns, base.size()), std::move(base)};
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

Vector difference(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

// Appends the entries of an operator residual, column by column, so the
// rows read (applied to h_c, component a).
void append_operator(Vector& out, const Matrix& residual) {
  for (std::size_t c = 0; c < residual.cols(); ++c)
    for (std::size_t a = 0; a < residual.rows(); ++a) out.push_back(residual(a, c));
}

class Context {
 public:
  Context(const ExtensionSpec& spec, const DerivationPair& pair)
      : spec(spec), pair(pair), m(spec.m_dim()), h(spec.h_dim()) {}

  const ExtensionSpec& spec;
  const DerivationPair& pair;
  std::size_t m, h;

  Vector em(std::size_t i) const { return unit_vector(m, i); }
  Vector eh(std::size_t a) const { return unit_vector(h, a); }
  const Matrix& sigma() const { return pair.sigma().matrix(); }
  const Matrix& tau() const { return pair.tau().matrix(); }

  /// beta(x, v) for x in M and v in H.
  Matrix beta(std::span<const Scalar> x, std::span<const Scalar> v) const { return spec.beta()(x, v); }
  Matrix rho(std::span<const Scalar> x, std::span<const Scalar> y) const { return spec.rho()(x, y); }
  /// ad(u, e_d): w -> [u, e_d, w] in H.
  Matrix ad(std::span<const Scalar> u, std::size_t d) const {
    Matrix out(h, h);
    for (std::size_t c = 0; c < h; ++c) {
      Vector w = spec.h().bracket(u, eh(d), eh(c));
      for (std::size_t a = 0; a < h; ++a) out(a, c) = w[a];
    }
    return out;
  }
  /// sum of mu with sigma applied in one slot.
  Vector mu_sigma(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const {
    Vector out = spec.mu()(sigma().apply(x), y, z);
    Vector b = spec.mu()(x, sigma().apply(y), z);
    Vector c = spec.mu()(x, y, sigma().apply(z));
    for (std::size_t a = 0; a < h; ++a) out[a] += b[a] + c[a];
    return out;
  }
  /// rho(x,y)g z + rho(z,x)g y + rho(y,z)g x for a map g: M -> H.
  Vector rho_twisted(const Matrix& g, std::size_t i, std::size_t j, std::size_t k) const {
    Vector out = rho(em(i), em(j)).apply(g.column(k));
    Vector b = rho(em(k), em(i)).apply(g.column(j));
    Vector c = rho(em(j), em(k)).apply(g.column(i));
    for (std::size_t a = 0; a < h; ++a) out[a] += b[a] + c[a];
    return out;
  }
  Matrix gamma_of(std::span<const Scalar> unknowns, std::size_t block) const {
    return Matrix::from_flat(h, m, unknowns.subspan(block * m * h, m * h));
  }
};

// tau mu(x_i,x_j,x_k) + g[x_i,x_j,x_k] - gs sigma[x_i,x_j,x_k] against the
// sigma and rho-twisted terms; gs may be zero.
void append_mu_rows(Vector& out, const Context& c, const Matrix& g, const Matrix* gs) {
  for (const auto& t : detail::combinations(c.m, 3)) {
    const std::size_t i = t[0], j = t[1], k = t[2];
    Vector bracket = c.spec.m().basis_bracket(i, j, k);
    Vector lhs = c.tau().apply(c.spec.mu().at(i, j, k));
    Vector gb = g.apply(bracket);
    for (std::size_t a = 0; a < c.h; ++a) lhs[a] += gb[a];
    Vector rhs = c.mu_sigma(c.em(i), c.em(j), c.em(k));
    Vector tw = c.rho_twisted(g, i, j, k);
    for (std::size_t a = 0; a < c.h; ++a) rhs[a] += tw[a];
    if (gs) {
      Matrix gss = *gs * c.sigma();
      Vector l2 = gss.apply(bracket);
      Vector r2 = c.rho_twisted(gss, i, j, k);
      for (std::size_t a = 0; a < c.h; ++a) {
        lhs[a] -= l2[a];
        rhs[a] -= r2[a];
      }
    }
    append(out, difference(lhs, rhs));
  }
}

// [tau, rho(x_i,x_j)] against rho(sigma x_i,x_j) + rho(x_i,sigma x_j)
//   - beta(x_j, g x_i) + beta(x_i, g x_j) + beta(x_j, gs x_i) - beta(x_i, gs x_j),
// with gs = gamma2 sigma in the triple system and absent otherwise.
void append_rho_rows(Vector& out, const Context& c, const Matrix& g, const Matrix* gs) {
  for (const auto& p : detail::combinations(c.m, 2)) {
    const std::size_t i = p[0], j = p[1];
    Matrix r = c.rho(c.em(i), c.em(j));
    Matrix lhs = c.tau() * r - r * c.tau();
    Matrix rhs = c.rho(c.sigma().column(i), c.em(j)) + c.rho(c.em(i), c.sigma().column(j)) -
                 c.beta(c.em(j), g.column(i)) + c.beta(c.em(i), g.column(j));
    if (gs) {
      Matrix gss = *gs * c.sigma();
      rhs += c.beta(c.em(j), gss.column(i)) - c.beta(c.em(i), gss.column(j));
    }
    append_operator(out, lhs - rhs);
  }
}

// [tau, beta(x_i,h_d)] against beta(sigma x_i,h_d) + beta(x_i,tau h_d) + ad(g x_i, h_d).
void append_beta_rows(Vector& out, const Context& c, const Matrix& g) {
  for (std::size_t i = 0; i < c.m; ++i)
    for (std::size_t d = 0; d < c.h; ++d) {
      Matrix b = c.beta(c.em(i), c.eh(d));
      Matrix lhs = c.tau() * b - b * c.tau();
      Matrix rhs = c.beta(c.sigma().column(i), c.eh(d)) + c.beta(c.em(i), c.tau().column(d)) + c.ad(g.column(i), d);
      append_operator(out, lhs - rhs);
    }
}

// [g x_i, h_c, h_d] for c<d: zero exactly when g(M) lies in Z(H).
void append_center_rows(Vector& out, const Context& c, const Matrix& g) {
  for (std::size_t i = 0; i < c.m; ++i) {
    Vector gi = g.column(i);
    for (const auto& p : detail::combinations(c.h, 2)) append(out, c.spec.h().bracket_with_basis(gi, p[0], p[1]));
  }
}

Vector extendability_residual(const Context& c, std::span<const Scalar> unknowns) {
  Matrix g = c.gamma_of(unknowns, 0);
  Vector out;
  append_mu_rows(out, c, g, nullptr);
  append_rho_rows(out, c, g, nullptr);
  append_beta_rows(out, c, g);
  return out;
}

Vector triple_residual(const Context& c, std::span<const Scalar> unknowns) {
  Matrix g1 = c.gamma_of(unknowns, 0), g2 = c.gamma_of(unknowns, 1), g3 = c.gamma_of(unknowns, 2);
  Vector out;
  for (const Matrix* g : {&g2, &g3}) append_center_rows(out, c, *g);
  for (const Matrix* g : {&g2, &g3})
    for (const auto& p : detail::combinations(c.m, 2)) {
      const std::size_t i = p[0], k = p[1];
      append_operator(out, c.beta(c.em(i), g->column(k)) - c.beta(c.em(k), g->column(i)));
    }
  for (const Matrix* g : {&g2, &g3})
    for (const auto& t : detail::combinations(c.m, 3)) {
      Vector lhs = g->apply(c.spec.m().basis_bracket(t[0], t[1], t[2]));
      append(out, difference(lhs, c.rho_twisted(*g, t[0], t[1], t[2])));
    }
  append_rho_rows(out, c, g1, &g2);
  append_beta_rows(out, c, g1);
  append_mu_rows(out, c, g1, &g2);
  return out;
}

void require_three_lie(const ExtensionSpec& spec) {
  if (!check_fundamental_identity(assemble(spec)).passed)
    throw InputError("the assembled extension fails the fundamental identity");
}

GammaSolution solve_system(const LinearSystem& system, std::size_t m, std::size_t h) {
  GammaSolution out;
  auto solution = solve_affine(system.matrix, system.rhs);
  if (!solution) {
    out.particular = LinearMap::zero(m, h);
    out.homogeneous = Subspace(m * h);
    return out;
  }
  out.solvable = true;
  out.particular = LinearMap(Matrix::from_flat(h, m, solution->particular));
  out.homogeneous = solution->homogeneous;
  return out;
}

}  // namespace

LinearSystem build_extendability_system(const ExtensionSpec& spec, const DerivationPair& pair) {
  Context c(spec, pair);
  return linearize([&](std::span<const Scalar> u) { return extendability_residual(c, u); }, c.m * c.h);
}

GammaSolution solve_extendability(const ExtensionSpec& spec, const DerivationPair& pair) {
  require_three_lie(spec);
  Context c(spec, pair);
  GammaSolution out = solve_system(build_extendability_system(spec, pair), c.m, c.h);
  if (out.solvable) {
    if (!is_zero(extendability_residual(c, out.particular.matrix().flat())) ||
        !verify_diagram(spec, pair, build_delta(pair, out.particular)).passed)
      throw std::logic_error("extendability solution failed re-verification");
  }
  return out;
}

LinearMap build_delta(const DerivationPair& pair, const LinearMap& gamma) {
  const std::size_t m = pair.sigma().source_dim(), h = pair.tau().source_dim();
  if (gamma.source_dim() != m || gamma.target_dim() != h)
    throw InputError("gamma must be " + std::to_string(h) + "x" + std::to_string(m));
  Matrix d(m + h, m + h);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) d(r, k) = pair.sigma().matrix()(r, k);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t k = 0; k < m; ++k) d(m + a, k) = gamma.matrix()(a, k);
    for (std::size_t b = 0; b < h; ++b) d(m + a, m + b) = pair.tau().matrix()(a, b);
  }
  return LinearMap(std::move(d));
}

CheckReport verify_diagram(const ExtensionSpec& spec, const DerivationPair& pair, const LinearMap& delta,
                           const CheckOptions& options) {
  const std::size_t n = spec.m_dim() + spec.h_dim();
  if (delta.source_dim() != n || delta.target_dim() != n)
    throw InputError("delta must be " + std::to_string(n) + "x" + std::to_string(n));
  LinearMap i = inclusion_map(spec), p = projection_map(spec);
  CheckReport total;
  total.name = "diagram";
  auto fold = [&](CheckReport part, const char* identity) {
    for (auto& w : part.witnesses) w.identity = identity;
    merge_into(total, part, options.witness_cap);
  };
  fold(boolean_report("projection_square", p * delta == pair.sigma() * p), "projection_square");
  fold(boolean_report("inclusion_square", delta * i == i * pair.tau()), "inclusion_square");
  fold(is_derivation(assemble(spec), delta, options), "derivation");
  return total;
}

GammaSolution solve_beta_free(const ExtensionSpec& spec, const DerivationPair& pair) {
  if (!spec.beta().is_zero()) throw InputError("this solver applies to extensions with beta = 0");
  if (!check_representation(spec.m(), spec.rho()).passed) throw InputError("this solver needs (H, rho) to be a module");
  require_three_lie(spec);
  Context c(spec, pair);
  GammaSolution out;
  out.particular = LinearMap::zero(c.m, c.h);
  out.homogeneous = Subspace(c.m * c.h);
  // gamma-free rows first: with beta = 0 the gamma terms vanish
  Vector free_rows;
  append_rho_rows(free_rows, c, Matrix(c.h, c.m), nullptr);
  if (!is_zero(free_rows)) return out;
  auto system = linearize(
      [&](std::span<const Scalar> u) {
        Matrix g = c.gamma_of(u, 0);
        Vector rows;
        append_mu_rows(rows, c, g, nullptr);
        append_center_rows(rows, c, g);
        return rows;
      },
      c.m * c.h);
  out = solve_system(system, c.m, c.h);
  if (out.solvable && !is_zero(extendability_residual(c, out.particular.matrix().flat())))
    throw std::logic_error("beta-free solution failed re-verification");
  return out;
}

LinearSystem build_triple_system(const ExtensionSpec& spec, const DerivationPair& pair) {
  Context c(spec, pair);
  return linearize([&](std::span<const Scalar> u) { return triple_residual(c, u); }, 3 * c.m * c.h);
}

LinearMap g_map(const ExtensionSpec& spec, const DerivationPair& pair, const TripleGamma& triple) {
  const std::size_t m = spec.m_dim(), h = spec.h_dim(), n = m + h;
  Matrix g(3 * n, n);
  auto fill = [&](std::size_t block, const Matrix& top, const Matrix& gamma, const Matrix& bottom) {
    const std::size_t base = block * n;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t k = 0; k < m; ++k) g(base + r, k) = top(r, k);
    for (std::size_t a = 0; a < h; ++a) {
      for (std::size_t k = 0; k < m; ++k) g(base + m + a, k) = gamma(a, k);
      for (std::size_t b = 0; b < h; ++b) g(base + m + a, m + b) = bottom(a, b);
    }
  };
  fill(0, pair.sigma().matrix(), triple.gamma1.matrix(), pair.tau().matrix());
  fill(1, Matrix::identity(m), triple.gamma2.matrix(), Matrix::identity(h));
  fill(2, Matrix::identity(m), triple.gamma3.matrix(), Matrix::identity(h));
  return LinearMap(std::move(g));
}

CheckReport verify_g(const ExtensionSpec& spec, const DerivationPair& pair, const LinearMap& g,
                     const CheckOptions& options) {
  ThreeLieAlgebra a = assemble(spec);
  CubeAlgebra ca(a);
  LinearMap i = inclusion_map(spec), p = projection_map(spec);
  CheckReport total;
  total.name = "triple_diagram";
  auto fold = [&](CheckReport part, const char* identity) {
    for (auto& w : part.witnesses) w.identity = identity;
    merge_into(total, part, options.witness_cap);
  };
  fold(is_homomorphism(g, a, ca.carrier(), options), "homomorphism");
  fold(boolean_report("inclusion_square", g * i == cube_map(i) * f_delta(spec.h(), pair.tau())),
       "inclusion_square");
  fold(boolean_report("projection_square", cube_map(p) * g == f_delta(spec.m(), pair.sigma()) * p),
       "projection_square");
  return total;
}

std::optional<TripleGamma> solve_triple_gamma(const ExtensionSpec& spec, const DerivationPair& pair) {
  require_three_lie(spec);
  Context c(spec, pair);
  LinearSystem system = build_triple_system(spec, pair);
  auto solution = solve_affine(system.matrix, system.rhs);
  if (!solution) return std::nullopt;
  std::span<const Scalar> u(solution->particular);
  TripleGamma triple{LinearMap(c.gamma_of(u, 0)), LinearMap(c.gamma_of(u, 1)), LinearMap(c.gamma_of(u, 2))};
  if (!verify_g(spec, pair, g_map(spec, pair, triple)).passed)
    throw std::logic_error("triple solution failed re-verification");
  return triple;
}

LinearMap center_extension(const ExtensionSpec& spec, const LinearMap& gamma2) {
  const std::size_t m = spec.m_dim(), h = spec.h_dim();
  if (gamma2.source_dim() != m || gamma2.target_dim() != h) throw InputError("gamma2 has the wrong shape");
  Matrix c(m + h, m + h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t k = 0; k < m; ++k) c(m + a, k) = gamma2.matrix()(a, k);
  return LinearMap(std::move(c));
}

LinearMap delta_from_g(const ExtensionSpec& spec, const DerivationPair& pair, const TripleGamma& triple,
                       const LinearMap& gamma_center) {
  const std::size_t m = spec.m_dim(), h = spec.h_dim();
  if (!(gamma_center == center_extension(spec, triple.gamma2)))
    throw InputError("gamma_center must vanish on H, take values in H and agree with gamma2 on M");
  Matrix gamma_hm(h, m);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t k = 0; k < m; ++k) gamma_hm(a, k) = gamma_center.matrix()(m + a, k);
  return build_delta(pair, LinearMap(triple.gamma1.matrix() - gamma_hm * pair.sigma().matrix()));
}

}  // namespace filippov
