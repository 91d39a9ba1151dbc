#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddalab/scalar.hpp"

namespace ddalab {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
Vec kron(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
  // Column vector (n x 1) and row-major reshape of a dim rows*cols vector.
  static Matrix column_of(const Field& f, const Vec& v);
  static Matrix reshape(const Field& f, const Vec& v, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  void set_row(std::size_t i, const Vec& v);
  std::vector<Vec> columns() const;

  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix& operator+=(const Matrix& o);
  void add_scaled(const Scalar& s, const Matrix& o);
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Row-major flattening; inverse of reshape.
  Vec flatten() const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  // Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
// Linear combination sum_i c[i] * ms[i]; ms must be non-empty.
Matrix combine(const Vec& c, const std::vector<Matrix>& ms);

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form; pivots are taken left to right, lowest row index first.
Echelon row_echelon(Matrix m);

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<Vec> kernel;  // one vector per free column, ordered by column
  std::vector<Vec> image;   // original columns at the pivot positions
};

RankKernelImage rank_kernel_image(const Matrix& a);
std::size_t rank(const Matrix& a);
std::size_t rank(const Field& f, std::size_t dim, const std::vector<Vec>& vectors);
std::vector<Vec> kernel(const Matrix& a);

// Particular solution of a x = b with free variables set to zero.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);
// Column-wise solve of a X = b.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

// Incrementally grown span kept in semi-echelon form (normalised pivots).
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}
  bool add(Vec v);  // true when v was independent
  bool contains(Vec v) const;
  Vec reduce(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Canonical basis of the span (rows of its reduced row echelon form).
  std::vector<Vec> canonical_basis() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

class not_well_defined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quotient V / span(relations) of an ambient coordinate space. The quotient
// basis consists of the non-pivot ambient coordinates of the reduced
// relation matrix; lift() is the section sending a basis vector to the
// corresponding ambient unit vector.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const Field& f, std::size_t ambient, const SpanBuilder& relations);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec project(const Vec& v) const;
  Vec lift(const Vec& q) const;
  Matrix projection() const;
  Matrix section() const;
  // Does the ambient linear map kill every relation?
  bool kills(const Matrix& ambient_map) const;
  // Map induced on the quotient; throws not_well_defined unless kills().
  Matrix descend(const Matrix& ambient_map) const;
  // Matrix of an ambient endomorphism-like map V -> V' followed by a projection
  // onto another quotient: target.project(ambient_map * lift(.)).
  Matrix induced(const Matrix& ambient_map, const QuotientSpace& target) const;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> pivots_;
  // For each pivot row: (quotient basis index, coefficient) nonzeros of the reduced row.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> tails_;
};

QuotientSpace quotient_by(const Field& f, std::size_t ambient, const std::vector<Vec>& relations);

// Named basis of a finite-dimensional space.
struct FinSpace {
  Field field;
  std::vector<std::string> labels;
  std::size_t dim() const { return labels.size(); }
  static FinSpace numbered(const Field& f, std::size_t n, const std::string& prefix = "b");
};

struct LinMap {
  FinSpace domain;
  FinSpace codomain;
  Matrix matrix;  // codomain.dim() x domain.dim()
};

RankKernelImage rank_kernel_image(const LinMap& m);

}  // namespace ddalab
