#include "grq/gf/matrix.hpp"

#include <algorithm>
#include <string>

#include "grq/error.hpp"
#include "grq/gf/kernels.hpp"

namespace grq::gf {

namespace {

void check_field(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p())
    throw DimensionError("matrices over different fields (p=" + std::to_string(a.p()) + " vs " +
                         std::to_string(b.p()) + ")");
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(PrimeField f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  data_.assign(std::size_t(rows) * cols, 0);
}

Matrix Matrix::identity(PrimeField f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(PrimeField f, const std::vector<std::vector<long long>>& rows) {
  const int r = int(rows.size());
  const int c = r ? int(rows[0].size()) : 0;
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw DimensionError("ragged rows");
    for (int j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField f, int rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    if (int(cols[j].size()) != rows) throw DimensionError("column length mismatch");
    for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Matrix Matrix::diagonal(PrimeField f, const Vector& d) {
  Matrix m(f, int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m.set(i, i, d[i]);
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row_vector(int r) const { return Vector(row(r), row(r) + cols_); }

std::vector<std::vector<long long>> Matrix::to_rows() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(*this, o);
  if (cols_ != o.rows_) throw DimensionError("product of " + shape(*this) + " and " + shape(o));
  Matrix out(field_, rows_, o.cols_);
  const unsigned p = field_.p();
  for (int i = 0; i < rows_; ++i) {
    Residue* dst = out.row(i);
    const Residue* a = row(i);
    for (int k = 0; k < cols_; ++k)
      if (a[k]) kernels::axpy(dst, o.row(k), a[k], std::size_t(o.cols_), p);
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (int(v.size()) != cols_) throw DimensionError("matrix-vector length mismatch");
  Vector out(rows_, 0);
  const unsigned p = field_.p();
  for (int i = 0; i < rows_; ++i) {
    unsigned acc = 0;
    const Residue* a = row(i);
    for (int k = 0; k < cols_; ++k) acc = (acc + unsigned(a[k]) * v[k]) % p;
    out[i] = Residue(acc);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  return r.add_scaled(o, 1);
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  return r.add_scaled(o, field_.neg(1));
}

Matrix& Matrix::add_scaled(const Matrix& o, Residue c) {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("sum of " + shape(*this) + " and " + shape(o));
  kernels::axpy(data_.data(), o.data_.data(), c, data_.size(), field_.p());
  return *this;
}

Matrix Matrix::scaled(Residue c) const {
  Matrix r = *this;
  if (c == 0) std::fill(r.data_.begin(), r.data_.end(), 0);
  else kernels::scale(r.data_.data(), c, r.data_.size(), field_.p());
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::select(const std::vector<int>& rs, const std::vector<int>& cs) const {
  Matrix m(field_, int(rs.size()), int(cs.size()));
  for (int i = 0; i < int(rs.size()); ++i)
    for (int j = 0; j < int(cs.size()); ++j) m.set(i, j, (*this)(rs[i], cs[j]));
  return m;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionError("block out of range");
  Matrix m(field_, nr, nc);
  for (int i = 0; i < nr; ++i) std::copy_n(row(r0 + i) + c0, nc, m.row(i));
  return m;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw DimensionError("set_block out of range");
  for (int i = 0; i < b.rows_; ++i) std::copy_n(b.row(i), b.cols_, row(r0 + i) + c0);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.rows_ != b.rows_) throw DimensionError("hstack row mismatch");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.cols_ != b.cols_) throw DimensionError("vstack column mismatch");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  int r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows_, c += b.cols_;
  Matrix m(blocks[0].field_, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return m;
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + cols_, row(b));
}

Rref rref(Matrix m) {
  const PrimeField& f = m.field();
  const unsigned p = f.p();
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    const std::size_t tail = std::size_t(m.cols() - c);
    kernels::scale(m.row(r) + c, f.inv(m(r, c)), tail, p);
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c)) kernels::axpy(m.row(i) + c, m.row(r) + c, f.neg(m(i, c)), tail, p);
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> cols;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.reduced(i, free));
    cols.push_back(std::move(x));
  }
  return Matrix::from_columns(f, m.cols(), cols);
}

Matrix column_space_basis(const Matrix& m) {
  Rref r = rref(m);
  return m.select([&] {
    std::vector<int> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    return rows;
  }(), r.pivots);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (int(b.size()) != m.rows())
    throw DimensionError("solve: rhs length " + std::to_string(b.size()) + " for " +
                         std::to_string(m.rows()) + " rows");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int i = 0; i < m.rows(); ++i) aug.set(i, m.cols(), b[i]);
  Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Rref r = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Matrix power(const Matrix& m, unsigned long long e) {
  if (m.rows() != m.cols()) throw DimensionError("power of non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Matrix& m) {
  // m^n == 0 with n = dim; square up to the first power of two >= n
  Matrix x = m;
  for (int k = 1; k < m.rows(); k *= 2) x = x * x;
  return x.is_zero();
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Vector RowSpace::reduce(Vector v) const {
  const unsigned p = field_.p();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = v[pivots_[i]];
    if (c) kernels::axpy(v.data(), rows_[i].data(), field_.neg(c), v.size(), p);
  }
  return v;
}

bool RowSpace::contains(const Vector& v) const {
  if (int(v.size()) != dim_) throw DimensionError("RowSpace: vector length mismatch");
  return is_zero(reduce(v));
}

bool RowSpace::add(const Vector& v) {
  if (int(v.size()) != dim_) throw DimensionError("RowSpace: vector length mismatch");
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Residue x) { return x != 0; });
  if (it == r.end()) return false;
  int piv = int(it - r.begin());
  kernels::scale(r.data(), field_.inv(r[piv]), r.size(), field_.p());
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

Coordinates::Coordinates(const Matrix& basis) : n_(basis.rows()), k_(basis.cols()) {
  Rref r = rref(Matrix::hstack(basis, Matrix::identity(basis.field(), n_)));
  for (int i = 0; i < k_; ++i)
    if (i >= r.rank || r.pivots[i] != i)
      throw DimensionError("Coordinates: basis columns are dependent");
  transform_ = r.reduced.block(0, k_, n_, n_);
}

std::optional<Vector> Coordinates::of(const Vector& v) const {
  if (int(v.size()) != n_) throw DimensionError("Coordinates: vector length mismatch");
  Vector t = transform_ * v;
  for (int i = k_; i < n_; ++i)
    if (t[i]) return std::nullopt;
  t.resize(k_);
  return t;
}

}  // namespace grq::gf
