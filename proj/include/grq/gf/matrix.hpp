#pragma once

#include <optional>
#include <vector>

#include "grq/gf/field.hpp"

namespace grq::gf {

using Vector = std::vector<Residue>;

// Dense row-major matrix over F_p. Value type; the field travels with it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField f, int rows, int cols);

  static Matrix identity(PrimeField f, int n);
  static Matrix from_rows(PrimeField f, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(PrimeField f, int rows, const std::vector<Vector>& cols);
  static Matrix diagonal(PrimeField f, const Vector& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  unsigned p() const { return field_.p(); }

  Residue operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  void set(int r, int c, Residue v) { data_[std::size_t(r) * cols_ + c] = v; }
  void set_int(int r, int c, long long v) { set(r, c, field_.reduce(v)); }
  Residue* row(int r) { return data_.data() + std::size_t(r) * cols_; }
  const Residue* row(int r) const { return data_.data() + std::size_t(r) * cols_; }
  const std::vector<Residue>& entries() const { return data_; }

  Vector column(int c) const;
  Vector row_vector(int r) const;
  std::vector<std::vector<long long>> to_rows() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Residue c) const;
  Matrix negated() const { return scaled(field_.neg(1)); }
  Matrix& add_scaled(const Matrix& o, Residue c);  // this += c*o

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool operator==(const Matrix& o) const;

  Matrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  void swap_rows(int a, int b);

 private:
  PrimeField field_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Residue> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;
  int rank = 0;
};

Rref rref(Matrix m);
int rank(const Matrix& m);
Matrix kernel_basis(const Matrix& m);  // basis as columns
Matrix column_space_basis(const Matrix& m);  // independent columns of m, left to right
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Matrix power(const Matrix& m, unsigned long long e);
bool is_nilpotent(const Matrix& m);
bool is_zero(const Vector& v);

// Incrementally grown span of row vectors; good for greedy basis picking.
class RowSpace {
 public:
  RowSpace(PrimeField f, int dim) : field_(f), dim_(dim) {}
  bool contains(const Vector& v) const;
  bool add(const Vector& v);  // true if v was independent
  int rank() const { return int(rows_.size()); }
  int dim() const { return dim_; }
  Vector reduce(Vector v) const;

 private:
  PrimeField field_;
  int dim_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

// Coordinates with respect to a fixed set of independent columns.
class Coordinates {
 public:
  explicit Coordinates(const Matrix& basis_columns);
  std::optional<Vector> of(const Vector& v) const;
  int size() const { return k_; }

 private:
  int n_ = 0, k_ = 0;
  Matrix transform_;  // top k rows give coordinates, the rest must vanish
};

}  // namespace grq::gf
