#include "filippov/exactlin.hpp"

#include <algorithm>
#include <cctype>

namespace filippov {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q == 0) {
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, std::span<const Scalar> flat) {
  if (flat.size() != rows * cols) throw InputError("flat length does not match matrix shape");
  Matrix m(rows, cols);
  std::copy(flat.begin(), flat.end(), m.data_.begin());
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (sgn(e) != 0) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return filippov::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw InputError("vstack column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) std::copy(top.row(r).begin(), top.row(r).end(), m.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), m.row(top.rows() + r).begin());
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Row reduction
//
// Rows are inserted one at a time into a set that is kept in reduced row
// echelon form. Constraint systems here are tall and sparse, so this avoids
// sweeping every pivot across thousands of rows that reduce to zero anyway.

namespace {

class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols) : cols_(cols) {}

  void insert(Vector row) {
    for (std::size_t idx = 0; idx < pivots_.size(); ++idx) {
      Scalar factor = row[pivots_[idx]];
      if (sgn(factor) == 0) continue;
      subtract_multiple(row, rows_[idx], factor);
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return sgn(s) != 0; });
    if (lead == row.end()) return;
    std::size_t pivot = static_cast<std::size_t>(lead - row.begin());
    Scalar inv = 1 / row[pivot];
    for (std::size_t c = pivot; c < cols_; ++c)
      if (sgn(row[c]) != 0) row[c] *= inv;
    for (auto& existing : rows_) {
      Scalar factor = existing[pivot];
      if (sgn(factor) != 0) subtract_multiple(existing, row, factor);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto offset = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + offset, std::move(row));
  }

  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void subtract_multiple(Vector& target, const Vector& source, const Scalar& factor) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(source[c]) != 0) target[c] -= factor * source[c];
  }

  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

EchelonBuilder reduce(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (filippov::is_zero(row)) continue;
    builder.insert(Vector(row.begin(), row.end()));
  }
  return builder;
}

Subspace nullspace_from(const EchelonBuilder& reduced, std::size_t cols) {
  const auto& pivots = reduced.pivots();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t idx = 0; idx < pivots.size(); ++idx) v[pivots[idx]] = -reduced.rows()[idx][free];
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

}  // namespace

Rref rref(const Matrix& m) {
  auto builder = reduce(m);
  Rref out{Matrix(m.rows(), m.cols()), builder.pivots()};
  for (std::size_t r = 0; r < builder.rows().size(); ++r) {
    const auto& row = builder.rows()[r];
    std::copy(row.begin(), row.end(), out.reduced.row(r).begin());
  }
  return out;
}

std::size_t rank(const Matrix& m) { return reduce(m).pivots().size(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  EchelonBuilder builder(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("subspace generator has wrong length");
    if (!filippov::is_zero(v)) builder.insert(v);
  }
  Subspace s(ambient_dim);
  s.basis_ = Matrix::from_rows(builder.rows(), ambient_dim);
  s.pivots_ = builder.pivots();
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, gens);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim_) throw InputError("membership test with wrong vector length");
  Vector rest(v.begin(), v.end());
  for (std::size_t idx = 0; idx < pivots_.size(); ++idx) {
    Scalar factor = rest[pivots_[idx]];
    if (sgn(factor) == 0) continue;
    auto row = basis_.row(idx);
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      if (sgn(row[c]) != 0) rest[c] -= factor * row[c];
  }
  return filippov::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("subspace ambient dimension mismatch");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace nullspace(const Matrix& m) { return nullspace_from(reduce(m), m.cols()); }

Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length does not match row count");
  const std::size_t n = m.cols();
  EchelonBuilder builder(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(n + 1);
    std::copy(m.row(r).begin(), m.row(r).end(), row.begin());
    row[n] = b[r];
    if (!filippov::is_zero(row)) builder.insert(std::move(row));
  }
  const auto& pivots = builder.pivots();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  Vector particular(n);
  for (std::size_t idx = 0; idx < pivots.size(); ++idx) particular[pivots[idx]] = builder.rows()[idx][n];

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t idx = 0; idx < pivots.size(); ++idx) v[pivots[idx]] = -builder.rows()[idx][free];
    basis.push_back(std::move(v));
  }
  return AffineSolution{std::move(particular), Subspace::span(n, basis)};
}

}  // namespace filippov
