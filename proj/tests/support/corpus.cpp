#include "corpus.hpp"

namespace corpus {

std::vector<NamedAlgebra> algebras() {
  std::vector<NamedAlgebra> out;
  for (std::size_t n = 0; n <= 4; ++n) out.push_back({"abelian" + std::to_string(n), abelian(n)});
  out.push_back({"simple4", simple4()});
  out.push_back({"gl_trace2", gl_trace_form(2)});
  out.push_back({"gl_trace3", gl_trace_form(3)});
  out.push_back({"metric_so3", metric_lie_extension(so3(), MetricForm(Matrix::identity(3)))});
  out.push_back({"functional_so3", lie_functional_so3()});
  out.push_back({"functional_heisenberg", lie_functional_heisenberg()});
  out.push_back({"functional_heisenberg3", from_lie_functional(heisenberg3(), unit_vector(3, 0))});
  out.push_back({"simple4_plus_line", direct_sum(simple4(), abelian(1))});
  out.push_back({"heisenberg_like", assemble(heisenberg_like())});
  return out;
}

ExtensionSpec heisenberg_like() {
  StructureTable mu;
  mu[{0, 1, 2}] = Vector{1};
  return ExtensionSpec(abelian(3), abelian(1), TriMapToH(3, 1, mu), PairAction(3, 1), MixedAction(3, 1));
}

ExtensionSpec direct_sum_spec(const ThreeLieAlgebra& m, const ThreeLieAlgebra& h) {
  return ExtensionSpec(m, h, TriMapToH(m.dim(), h.dim()), PairAction(m.dim(), h.dim()),
                       MixedAction(m.dim(), h.dim()));
}

std::vector<NamedSpec> extensions() {
  std::vector<NamedSpec> out;
  out.push_back({"heisenberg_like", heisenberg_like()});
  out.push_back({"direct_abelian2_abelian2", direct_sum_spec(abelian(2), abelian(2))});
  out.push_back({"direct_simple4_line", direct_sum_spec(simple4(), abelian(1))});
  out.push_back({"direct_abelian1_simple4", direct_sum_spec(abelian(1), simple4())});

  {
    // rho(x1,x2) nilpotent on an abelian plane: a module, and 3-Lie.
    PairTable rho;
    Matrix n(2, 2);
    n(0, 1) = 1;
    rho[{0, 1}] = n;
    out.push_back({"nilpotent_rho", ExtensionSpec(abelian(2), abelian(2), TriMapToH(2, 2), PairAction(2, 2, rho),
                                                  MixedAction(2, 2))});
  }
  {
    // beta on an abelian plane, skew in the H arguments.
    MixedTable beta;
    Matrix b0(2, 2), b1(2, 2);
    b0(0, 1) = 1;   // beta(x1,h1)h2 = h1
    b1(0, 0) = -1;  // beta(x1,h2)h1 = -h1
    beta[{0, 0}] = b0;
    beta[{0, 1}] = b1;
    ExtensionSpec s(abelian(1), abelian(2), TriMapToH(1, 2), PairAction(1, 2), MixedAction(1, 2, beta));
    out.push_back({"skew_beta", s});
  }
  out.push_back({"direct_simple4_plane", direct_sum_spec(simple4(), abelian(2))});
  {
    // M = abelian(3), H = abelian(2), mu valued in both directions.
    StructureTable mu;
    mu[{0, 1, 2}] = Vector{2, -1};
    out.push_back({"heisenberg_plane", ExtensionSpec(abelian(3), abelian(2), TriMapToH(3, 2, mu), PairAction(3, 2),
                                                     MixedAction(3, 2))});
  }
  {
    // 3-Lie, but (H, rho) is not a module: beta(x1, mu(x1,x2,x3)) != 0.
    StructureTable mu;
    mu[{0, 1, 2}] = Vector{1, -1};
    PairTable rho;
    rho[{0, 1}] = Matrix::from_rows({{1, 1}, {-1, -1}}, 2);
    rho[{0, 2}] = Matrix::from_rows({{0, -1}, {0, 1}}, 2);
    rho[{1, 2}] = Matrix::from_rows({{1, 1}, {-1, -1}}, 2);
    MixedTable beta;
    beta[{0, 0}] = Matrix::from_rows({{0, -1}, {0, 1}}, 2);
    beta[{0, 1}] = Matrix::from_rows({{1, 0}, {-1, 0}}, 2);
    beta[{2, 0}] = Matrix::from_rows({{0, 1}, {0, -1}}, 2);
    beta[{2, 1}] = Matrix::from_rows({{-1, 0}, {1, 0}}, 2);
    out.push_back({"non_module", ExtensionSpec(abelian(3), abelian(2), TriMapToH(3, 2, mu), PairAction(3, 2, rho),
                                               MixedAction(3, 2, beta))});
  }
  {
    // nonabelian H with rho(x1,x2) = ad(e1,e2).
    PairTable rho;
    rho[{0, 1}] = inner_derivation(simple4(), unit_vector(4, 0), unit_vector(4, 1)).matrix();
    ExtensionSpec s(abelian(2), simple4(), TriMapToH(2, 4), PairAction(2, 4, rho), MixedAction(2, 4));
    if (check_fundamental_identity(assemble(s)).passed) out.push_back({"simple4_inner_rho", s});
  }
  return out;
}

int small(std::mt19937_64& rng) { return static_cast<int>(rng() % 3) - 1; }

ThreeLieAlgebra random_small_algebra(std::size_t dim, std::mt19937_64& rng) {
  if (dim < 3) return abelian(dim);
  StructureTable t;
  Vector v(dim);
  for (auto& x : v) x = small(rng);
  t[{0, 1, 2}] = v;
  ThreeLieAlgebra a(dim, default_labels(dim), t);
  return check_fundamental_identity(a).passed ? a : abelian(dim);
}

LinearMap random_combination(const std::vector<LinearMap>& basis, std::size_t rows, std::size_t cols,
                             std::mt19937_64& rng) {
  Matrix out(rows, cols);
  for (const auto& b : basis) {
    int c = small(rng);
    if (c != 0) out += b.matrix() * Scalar(c);
  }
  return LinearMap(std::move(out));
}

std::vector<std::vector<Matrix>> skew_derivation_families(const ThreeLieAlgebra& h) {
  const std::size_t n = h.dim(), block = n * n, unknowns = n * block;
  Matrix der = derivation_system(h);
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < der.rows(); ++r) {
      Vector row(unknowns);
      for (std::size_t k = 0; k < block; ++k) row[a * block + k] = der(r, k);
      rows.push_back(std::move(row));
    }
  // B_a(r, b) + B_b(r, a) = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t r = 0; r < n; ++r) {
        Vector row(unknowns);
        row[a * block + r * n + b] += 1;
        row[b * block + r * n + a] += 1;
        rows.push_back(std::move(row));
      }
  Subspace space = nullspace(Matrix::from_rows(rows, unknowns));
  std::vector<std::vector<Matrix>> out;
  for (const auto& v : space.basis_vectors()) {
    std::vector<Matrix> family;
    for (std::size_t a = 0; a < n; ++a)
      family.push_back(Matrix::from_flat(n, n, std::span<const Scalar>(v).subspan(a * block, block)));
    out.push_back(std::move(family));
  }
  return out;
}

ExtensionSpec random_spec(const ThreeLieAlgebra& m, const ThreeLieAlgebra& h, std::mt19937_64& rng) {
  const std::size_t md = m.dim(), hd = h.dim();
  // each piece is switched off a third of the time, so passing specs are common
  bool use_mu = rng() % 3 != 0, use_rho = rng() % 3 != 0, use_beta = rng() % 3 != 0;
  StructureTable mu;
  if (use_mu)
    for (const auto& t : filippov::detail::combinations(md, 3)) {
      Vector v(hd);
      for (auto& x : v) x = small(rng);
      mu[{t[0], t[1], t[2]}] = v;
    }
  auto der = derivation_algebra(h);
  PairTable rho;
  if (use_rho)
    for (const auto& p : filippov::detail::combinations(md, 2))
      rho[{p[0], p[1]}] = random_combination(der, hd, hd, rng).matrix();
  MixedTable beta;
  if (use_beta) {
    auto families = skew_derivation_families(h);
    for (std::size_t i = 0; i < md; ++i) {
      std::vector<Matrix> acc(hd, Matrix(hd, hd));
      for (const auto& f : families) {
        int c = small(rng);
        if (c == 0) continue;
        for (std::size_t a = 0; a < hd; ++a) acc[a] += f[a] * Scalar(c);
      }
      for (std::size_t a = 0; a < hd; ++a) beta[{i, a}] = acc[a];
    }
  }
  return ExtensionSpec(m, h, TriMapToH(md, hd, mu), PairAction(md, hd, rho), MixedAction(md, hd, beta));
}

std::vector<DerivationPair> pairs_for(const ExtensionSpec& spec, std::size_t count, std::mt19937_64& rng) {
  const std::size_t md = spec.m_dim(), hd = spec.h_dim();
  auto dm = derivation_algebra(spec.m()), dh = derivation_algebra(spec.h());
  std::vector<DerivationPair> out;
  out.emplace_back(spec.m(), spec.h(), LinearMap::zero(md, md), LinearMap::zero(hd, hd));
  for (std::size_t k = 1; k < count; ++k)
    out.emplace_back(spec.m(), spec.h(), random_combination(dm, md, md, rng), random_combination(dh, hd, hd, rng));
  return out;
}

LinearMap random_map(std::size_t n, std::mt19937_64& rng) {
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = small(rng);
  return LinearMap(std::move(out));
}

namespace {

void for_each_pool_vector(std::size_t len, const std::function<void(const Vector&)>& visit) {
  Vector v(len, Scalar(-1));
  while (true) {
    visit(v);
    std::size_t k = 0;
    while (k < len && v[k] == 1) v[k++] = -1;
    if (k == len) return;
    v[k] += 1;
  }
}

}  // namespace

void for_each_small_map(std::size_t n, const std::function<void(const LinearMap&)>& visit) {
  for_each_pool_vector(n * n, [&](const Vector& v) { visit(LinearMap(Matrix::from_flat(n, n, v))); });
}

bool brute_force_extendable(const ExtensionSpec& spec, const DerivationPair& pair) {
  const std::size_t md = spec.m_dim(), hd = spec.h_dim();
  bool found = false;
  for_each_pool_vector(md * hd, [&](const Vector& v) {
    if (found) return;
    LinearMap gamma(Matrix::from_flat(hd, md, v));
    if (verify_diagram(spec, pair, build_delta(pair, gamma)).passed) found = true;
  });
  return found;
}

}  // namespace corpus
