#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"

using namespace corpus;

namespace {

/// ([x1,y2,y3] + [x3,y1,y2] + [x2,y3,y1], [y1,y2,y3], [z1,z2,z3]) on
/// block-stacked coordinate vectors.
Vector cube_oracle(const oracle::DenseBracket& b, const Vector& p, const Vector& q, const Vector& r) {
  const std::size_t n = b.dim();
  auto part = [&](const Vector& v, std::size_t block) {
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(block * n), v.begin() + static_cast<std::ptrdiff_t>((block + 1) * n));
  };
  Vector x1 = part(p, 0), y1 = part(p, 1), z1 = part(p, 2);
  Vector x2 = part(q, 0), y2 = part(q, 1), z2 = part(q, 2);
  Vector x3 = part(r, 0), y3 = part(r, 1), z3 = part(r, 2);
  Vector x = b(x1, y2, y3), t2 = b(x3, y1, y2), t3 = b(x2, y3, y1);
  for (std::size_t i = 0; i < n; ++i) x[i] += t2[i] + t3[i];
  Vector y = b(y1, y2, y3), z = b(z1, z2, z3);
  Vector out = x;
  out.insert(out.end(), y.begin(), y.end());
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

}  // namespace

TEST_CASE("cube bracket matches its defining formula") {
  std::mt19937_64 rng(41);
  for (const ThreeLieAlgebra& base : {simple4(), lie_functional_so3(), assemble(heisenberg_like())}) {
    ThreeLieAlgebra c = cube_bracket(base);
    oracle::DenseBracket dense(base);
    const std::size_t n = 3 * base.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          CHECK(c.basis_bracket(i, j, k) == cube_oracle(dense, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k)));
    for (int t = 0; t < 20; ++t) {
      Vector p(n), q(n), r(n);
      for (auto* v : {&p, &q, &r})
        for (auto& s : *v) s = small(rng);
      CHECK(c.bracket(p, q, r) == cube_oracle(dense, p, q, r));
    }
  }
}

TEST_CASE("cube labels and dimension") {
  CubeAlgebra c(abelian(2));
  CHECK(c.carrier().dim() == 6);
  CHECK(c.base_dim() == 2);
  CHECK(c.carrier().labels() == std::vector<std::string>{"x:e1", "x:e2", "y:e1", "y:e2", "z:e1", "z:e2"});
  CHECK(c.blocks({CubeAlgebra::Block::y}) == Subspace::span(6, {unit_vector(6, 2), unit_vector(6, 3)}));
}

TEST_CASE("the cube of every fixture is 3-Lie") {
  for (const auto& [name, a] : algebras()) {
    if (a.dim() > 5) continue;
    CAPTURE(name);
    CubeAlgebra c(a);
    CHECK(check_fundamental_identity(c.carrier()).passed);
  }
  CheckReport r = check_fundamental_identity(cube(simple4()).carrier());
  CHECK(r.passed);
  CHECK(r.tuples_checked == 14520);
}

TEST_CASE("cube of a non-3-Lie base is rejected") {
  StructureTable t = simple4().table();
  t[{0, 1, 2}] = unit_vector(4, 0);
  CHECK_THROWS_AS(CubeAlgebra(ThreeLieAlgebra(4, default_labels(4), t)), InputError);
  // the raw bracket still exists and inherits the failure
  CHECK_FALSE(check_fundamental_identity(cube_bracket(ThreeLieAlgebra(4, default_labels(4), t))).passed);
}

TEST_CASE("block structure") {
  using B = CubeAlgebra::Block;
  for (const ThreeLieAlgebra& base : {simple4(), assemble(heisenberg_like())}) {
    CubeAlgebra c(base);
    const auto& a = c.carrier();
    auto reports = check_cube_blocks(c);
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].name == "z_block_abelian_ideal");
    for (std::size_t i = 1; i < 5; ++i) CHECK(reports[i].passed);
    // The Z block brackets like the base inside itself, so it is an ideal
    // but abelian only when the base is.
    CHECK(is_ideal(a, c.blocks({B::z})));
    CHECK(reports[0].passed == base.is_abelian());
    CHECK(is_ideal(a, c.blocks({B::x})));
    CHECK(is_abelian_ideal(a, c.blocks({B::x})));
    CHECK_FALSE(is_ideal(a, c.blocks({B::y})));
  }
  CubeAlgebra flat(abelian(3));
  for (const auto& r : check_cube_blocks(flat)) CHECK(r.passed);
}

TEST_CASE("f_delta is a homomorphism exactly for derivations") {
  std::mt19937_64 rng(42);
  for (const auto& [name, a] : algebras()) {
    if (a.dim() > 5) continue;
    CAPTURE(name);
    CubeAlgebra c(a);
    auto der = derivation_algebra(a);
    std::size_t derivations = 0;
    for (int t = 0; t < 30; ++t) {
      LinearMap d = t % 2 ? random_map(a.dim(), rng) : random_combination(der, a.dim(), a.dim(), rng);
      FDeltaCriterion v = check_f_delta(c, d);
      CHECK(v.is_derivation == v.is_homomorphism);
      CHECK(v.is_homomorphism ==
            oracle::is_homomorphism(f_delta(a, d).matrix(), oracle::DenseBracket(a), oracle::DenseBracket(c.carrier())));
      derivations += v.is_derivation;
    }
    CHECK(derivations >= 15);
  }
  CHECK_THROWS_AS(f_delta(simple4(), LinearMap::identity(3)), InputError);
}

TEST_CASE("cube of an extension stays exact") {
  for (const auto& [name, spec] : extensions()) {
    CAPTURE(name);
    CHECK(check_cube_sequence(spec).passed);
  }
  LinearMap u(Matrix::from_rows({{1, 2}, {3, 4}}, 2));
  Matrix expected = block_diagonal({u.matrix(), u.matrix(), u.matrix()});
  CHECK(cube_map(u).matrix() == expected);
}

TEST_CASE("cube sweeps do not depend on jobs") {
  ThreeLieAlgebra carrier = cube(lie_functional_so3()).carrier();
  CheckReport a = check_fundamental_identity(carrier, {.witness_cap = 16, .jobs = 1});
  CheckReport b = check_fundamental_identity(carrier, {.witness_cap = 16, .jobs = 4});
  CHECK(a.tuples_checked == b.tuples_checked);
  CHECK(a.passed == b.passed);
}
