#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "filippov/exactlin.hpp"

#include <random>

using namespace filippov;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int spread = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<int>(rng() % (2 * spread + 1)) - spread;
  return m;
}

bool is_rref(const Rref& r) {
  const Matrix& m = r.reduced;
  for (std::size_t row = 0; row < m.rows(); ++row) {
    std::size_t lead = m.cols();
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(row, c) != 0) {
        lead = c;
        break;
      }
    if (row >= r.pivots.size()) {
      if (lead != m.cols()) return false;
      continue;
    }
    if (lead != r.pivots[row] || m(row, lead) != 1) return false;
    for (std::size_t other = 0; other < m.rows(); ++other)
      if (other != row && m(other, lead) != 0) return false;
  }
  return std::is_sorted(r.pivots.begin(), r.pivots.end()) &&
         std::adjacent_find(r.pivots.begin(), r.pivots.end()) == r.pivots.end();
}

}  // namespace

TEST_CASE("scalars parse to canonical form and print back") {
  CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
  CHECK(format_scalar(parse_scalar("-6/4")) == "-3/2");
  CHECK(format_scalar(parse_scalar("0/5")) == "0");
  CHECK(format_scalar(parse_scalar("7")) == "7");
  CHECK(format_scalar(parse_scalar("-10/5")) == "-2");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1", " 1"})
    CHECK_THROWS_AS(parse_scalar(bad), InputError);
}

TEST_CASE("matrix arithmetic") {
  Matrix a = Matrix::from_rows({{1, 2}, {3, 4}}, 2);
  Matrix b = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
  CHECK(a * b == Matrix::from_rows({{2, 1}, {4, 3}}, 2));
  CHECK(a * Matrix::identity(2) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK((a - a).is_zero());
  CHECK(a.apply(Vector{1, -1}) == Vector{-1, -1});
  CHECK(vstack(a, b).rows() == 4);
  Matrix d = block_diagonal({a, b});
  CHECK(d.rows() == 4);
  CHECK(d(2, 3) == 1);
  CHECK(d(0, 3) == 0);
  CHECK(Matrix::from_flat(2, 2, a.flat()) == a);
}

TEST_CASE("rref is reduced, idempotent and row-space invariant") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = rng() % 6, cols = rng() % 6;
    Matrix m = random_matrix(rows, cols, rng);
    Rref r = rref(m);
    CHECK(is_rref(r));
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.pivots.size() == rank(m));
    CHECK(rank(m) == rank(m.transpose()));
    // left-multiplying by an invertible matrix keeps the row space
    Matrix mix = Matrix::identity(rows);
    if (rows >= 2) mix(0, 1) = 3;
    CHECK(rref(mix * m).reduced == r.reduced);
  }
}

TEST_CASE("nullspace basis spans exactly the kernel") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = rng() % 5, cols = 1 + rng() % 5;
    Matrix m = random_matrix(rows, cols, rng);
    Subspace k = nullspace(m);
    CHECK(k.dim() == cols - rank(m));
    for (const auto& v : k.basis_vectors()) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("subspaces compare by canonical basis") {
  Vector u{1, 2, 0}, v{0, 1, 1};
  Vector w{2, 5, 1};  // 2u + v
  Subspace s = Subspace::span(3, {u, v});
  CHECK(s == Subspace::span(3, {w, v}));
  CHECK(s == Subspace::span(3, {v, u, w}));
  CHECK(s.contains(w));
  CHECK_FALSE(s.contains(Vector{0, 0, 1}));
  CHECK(Subspace::whole(3).contains(s));
  CHECK_FALSE(s.contains(Subspace::whole(3)));
  CHECK(Subspace(3).dim() == 0);
  CHECK(column_space(Matrix::from_rows({{1, 2}, {2, 4}}, 2)).dim() == 1);
}

TEST_CASE("affine solves") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = rng() % 5, cols = rng() % 5;
    Matrix m = random_matrix(rows, cols, rng);
    Vector x(cols);
    for (auto& s : x) s = static_cast<int>(rng() % 5) - 2;
    Vector b = m.apply(x);
    auto sol = solve_affine(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(sol->particular) == b);
    CHECK(sol->homogeneous == nullspace(m));
    Rref r = rref(m);
    for (std::size_t c = 0; c < cols; ++c)
      if (!std::binary_search(r.pivots.begin(), r.pivots.end(), c)) CHECK(sol->particular[c] == 0);
  }
  CHECK_FALSE(solve_affine(Matrix::from_rows({{1}, {1}}, 1), Vector{0, 1}).has_value());
  auto empty = solve_affine(Matrix(0, 3), Vector{});
  REQUIRE(empty.has_value());
  CHECK(empty->particular == Vector(3));
  CHECK(empty->homogeneous == Subspace::whole(3));
  CHECK(solve_affine(Matrix(2, 0), Vector{0, 0}).has_value());
  CHECK_FALSE(solve_affine(Matrix(2, 0), Vector{0, 1}).has_value());
}

TEST_CASE("exact arithmetic survives large cancellations") {
  Matrix hilbert(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) hilbert(i, j) = Scalar(1, static_cast<unsigned long>(i + j + 1));
  CHECK(rank(hilbert) == 6);
  Vector ones(6, Scalar(1));
  auto sol = solve_affine(hilbert, ones);
  REQUIRE(sol.has_value());
  CHECK(hilbert.apply(sol->particular) == ones);
  CHECK(sol->particular[0] == -6);
}
