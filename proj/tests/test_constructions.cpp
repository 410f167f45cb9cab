#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"

using namespace corpus;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vector add(Vector a, const Vector& b, const Scalar& scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

/// E_ab in gl(m), flattened row-major as a coordinate vector.
Vector unit_matrix(std::size_t m, std::size_t a, std::size_t b) { return e(m * m, a * m + b); }

Scalar trace(const Matrix& x) {
  Scalar t = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) t += x(i, i);
  return t;
}

/// tr(A)[B,C] + tr(B)[C,A] + tr(C)[A,B] with real matrix products.
Vector trace_bracket(std::size_t m, const Vector& a, const Vector& b, const Vector& c) {
  Matrix A = Matrix::from_flat(m, m, a), B = Matrix::from_flat(m, m, b), C = Matrix::from_flat(m, m, c);
  auto lie = [](const Matrix& x, const Matrix& y) { return x * y - y * x; };
  Matrix out = lie(B, C) * trace(A) + lie(C, A) * trace(B) + lie(A, B) * trace(C);
  return out.flat();
}

}  // namespace

TEST_CASE("abelian") {
  CHECK(abelian(0).dim() == 0);
  CHECK(abelian(5).is_abelian());
  CHECK(abelian(3).labels() == std::vector<std::string>{"e1", "e2", "e3"});
}

TEST_CASE("simple4 table") {
  ThreeLieAlgebra a = simple4();
  CHECK(a.basis_bracket(0, 1, 2) == e(4, 3));
  CHECK(a.basis_bracket(0, 1, 3) == add(Vector(4), e(4, 2), -1));
  CHECK(a.basis_bracket(0, 2, 3) == e(4, 1));
  CHECK(a.basis_bracket(1, 2, 3) == add(Vector(4), e(4, 0), -1));
  // [e_i,e_j,e_k] = eps_ijkl e_l: the output is orthogonal to every input
  for (const auto& t : detail::combinations(4, 3))
    for (std::size_t i : t) CHECK(a.basis_bracket(t[0], t[1], t[2])[i] == 0);
}

TEST_CASE("gl trace form matches matrix arithmetic") {
  for (std::size_t m : {1u, 2u, 3u}) {
    ThreeLieAlgebra a = gl_trace_form(m);
    const std::size_t n = m * m;
    CHECK(a.dim() == n);
    if (m == 1) CHECK(a.is_abelian());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          CHECK(a.basis_bracket(i, j, k) == trace_bracket(m, e(n, i), e(n, j), e(n, k)));
    CHECK(check_fundamental_identity(a).passed);
  }
  ThreeLieAlgebra g2 = gl_trace_form(2);
  CHECK(g2.labels() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  Vector e11 = unit_matrix(2, 0, 0), e12 = unit_matrix(2, 0, 1), e21 = unit_matrix(2, 1, 0), e22 = unit_matrix(2, 1, 1);
  CHECK(g2.bracket(e11, e12, e21) == add(e11, e22, -1));
  Vector twice = add(e11, e22, -1);
  for (auto& x : twice) x *= 2;
  CHECK(g2.bracket(e12, e21, add(e11, e22)) == twice);
}

TEST_CASE("from_lie_functional") {
  LieAlgebra h = heisenberg3();
  ThreeLieAlgebra a = from_lie_functional(h, e(3, 0));
  // [x1,x2,x3] = f(x1)[x2,x3] + f(x2)[x3,x1] + f(x3)[x1,x2] = [x2,x3] = 0
  CHECK(a.is_abelian());
  CHECK(check_fundamental_identity(a).passed);
  CHECK(from_lie_functional(so3(), Vector(3)).is_abelian());
  CHECK(from_lie_functional(LieAlgebra(3, {}), Vector{1, 2, 3}).is_abelian());
  // f must kill [L,L]: f(x3) != 0 for heisenberg is rejected, naming the pair
  try {
    (void)from_lie_functional(h, e(3, 2));
    FAIL("expected rejection");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("(0,1)") != std::string::npos);
  }
  std::mt19937_64 rng(4);
  for (const ThreeLieAlgebra& b : {lie_functional_so3(), lie_functional_heisenberg()}) {
    CHECK(check_fundamental_identity(b).passed);
    CHECK_FALSE(b.is_abelian());
    for (int t = 0; t < 20; ++t) {
      Vector u(4), v(4), w(4);
      for (auto* x : {&u, &v, &w})
        for (auto& s : *x) s = small(rng);
      Vector uvw = b.bracket(u, v, w), vuw = b.bracket(v, u, w), wvu = b.bracket(w, v, u);
      CHECK(add(uvw, vuw) == Vector(4));
      CHECK(add(uvw, wvu) == Vector(4));
    }
  }
}

TEST_CASE("lie algebras and metric forms are validated") {
  LieTable bad;
  bad[{0, 1}] = e(3, 0);
  bad[{0, 2}] = e(3, 2);
  bad[{1, 2}] = e(3, 0);
  CHECK_THROWS_AS(LieAlgebra(3, bad), InputError);
  CHECK_THROWS_AS(MetricForm(Matrix::from_rows({{1, 1}, {0, 1}}, 2)), InputError);
  CHECK_THROWS_AS(MetricForm(Matrix::from_rows({{1, 1}, {1, 1}}, 2)), InputError);
  CHECK(is_invariant(MetricForm(Matrix::identity(3)), so3()));
  CHECK_FALSE(is_invariant(MetricForm(Matrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}, 3)), so3()));
  CHECK_THROWS_AS(metric_lie_extension(so3(), MetricForm(Matrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}, 3))),
                  InputError);
}

TEST_CASE("metric extension of so(3)") {
  ThreeLieAlgebra a = metric_lie_extension(so3(), MetricForm(Matrix::identity(3)));
  CHECK(a.dim() == 5);
  CHECK(a.labels() == std::vector<std::string>{"x1", "x2", "x3", "x^0", "x^-1"});
  CHECK(a.basis_bracket(3, 0, 1) == e(5, 2));
  CHECK(a.basis_bracket(0, 1, 2) == e(5, 4));
  CHECK(check_fundamental_identity(a).passed);
  CHECK(center(a).contains(e(5, 4)));
  CHECK(metric_lie_extension(LieAlgebra(2, {}), MetricForm(Matrix::identity(2))).is_abelian());
}

TEST_CASE("direct sums keep both blocks") {
  ThreeLieAlgebra s = direct_sum(simple4(), lie_functional_so3());
  CHECK(s.dim() == 8);
  CHECK(s.basis_bracket(0, 1, 2) == e(8, 3));
  CHECK(is_zero(s.basis_bracket(0, 1, 4)));
  CHECK(check_fundamental_identity(s).passed);
  CHECK(oracle::fundamental_identity_violations(oracle::DenseBracket(direct_sum(simple4(), abelian(1)))) == 0);
}
