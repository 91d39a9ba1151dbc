#include "ddalab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ddalab {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << ']';
  return os.str();
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::column_of(const Field& f, const Vec& v) { return from_columns(f, v.size(), {v}); }

Matrix Matrix::reshape(const Field& f, const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("reshape: size mismatch");
  Matrix m(f, rows, cols);
  m.data_ = v;
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> cs;
  cs.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) r[i].add_mul(a, v[j]);
    }
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: size mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j).add_mul(a, b);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(-field_.one(), o);
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: size mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i].add_mul(s, o.data_[i]);
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec Matrix::flatten() const { return data_; }

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return r;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  Matrix r(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) os << ddalab::to_string(row(i)) << '\n';
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

Matrix combine(const Vec& c, const std::vector<Matrix>& ms) {
  if (ms.empty() || c.size() != ms.size()) throw std::invalid_argument("combine: size mismatch");
  Matrix r(ms[0].field(), ms[0].rows(), ms[0].cols());
  for (std::size_t i = 0; i < ms.size(); ++i) r.add_scaled(c[i], ms[i]);
  return r;
}

Echelon row_echelon(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j).sub_mul(f, m(r, j));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

RankKernelImage rank_kernel_image(const Matrix& a) {
  Echelon e = row_echelon(a);
  RankKernelImage out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec k = zero_vec(a.field(), a.cols());
    k[f] = a.field().one();
    for (std::size_t r = 0; r < e.rank(); ++r) k[e.pivots[r]] = -e.rref(r, f);
    out.kernel.push_back(std::move(k));
  }
  for (auto p : e.pivots) out.image.push_back(a.column(p));
  return out;
}

RankKernelImage rank_kernel_image(const LinMap& m) { return rank_kernel_image(m.matrix); }

std::size_t rank(const Matrix& a) {
  // Eliminate along the shorter side.
  if (a.rows() > a.cols()) return row_echelon(a.transpose()).rank();
  return row_echelon(a).rank();
}

std::size_t rank(const Field& f, std::size_t dim, const std::vector<Vec>& vectors) {
  SpanBuilder s(f, dim);
  for (const auto& v : vectors) {
    s.add(v);
    if (s.rank() == dim) break;
  }
  return s.rank();
}

std::vector<Vec> kernel(const Matrix& a) { return rank_kernel_image(a).kernel; }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row mismatch");
  Echelon e = row_echelon(a.hstack(b));
  const std::size_t n = a.cols();
  Matrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.rref(r, n + j);
  }
  return x;
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  auto x = solve_linear(a, Matrix::column_of(a.field(), b));
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Echelon e = row_echelon(a.hstack(Matrix::identity(a.field(), a.rows())));
  const std::size_t n = a.rows();
  if (e.rank() < n || e.pivots[n - 1] >= n) return std::nullopt;
  return e.rref.column_block(n, n);
}

Vec SpanBuilder::reduce(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar f = c;
    const Vec& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!row[j].is_zero()) v[j].sub_mul(f, row[j]);
  }
  return v;
}

bool SpanBuilder::add(Vec v) {
  if (rows_.size() == dim_) return false;
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(Vec v) const { return is_zero(reduce(std::move(v))); }

std::vector<Vec> SpanBuilder::canonical_basis() const {
  if (rows_.empty()) return {};
  Echelon e = row_echelon(Matrix::from_rows(field_, dim_, rows_));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.rref.row(r));
  return out;
}

QuotientSpace::QuotientSpace(const Field& f, std::size_t ambient, const SpanBuilder& relations)
    : field_(f), ambient_(ambient) {
  std::vector<Vec> rows = relations.canonical_basis();
  std::vector<bool> is_pivot(ambient, false);
  for (const auto& r : rows) {
    std::size_t p = 0;
    while (r[p].is_zero()) ++p;
    pivots_.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<std::size_t> index(ambient, 0);
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) {
      index[c] = basis_.size();
      basis_.push_back(c);
    }
  for (const auto& r : rows) {
    std::vector<std::pair<std::size_t, Scalar>> tail;
    for (std::size_t c = 0; c < ambient; ++c)
      if (!is_pivot[c] && !r[c].is_zero()) tail.emplace_back(index[c], r[c]);
    tails_.push_back(std::move(tail));
  }
}

Vec QuotientSpace::project(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("project: dimension mismatch");
  Vec q;
  q.reserve(basis_.size());
  for (auto c : basis_) q.push_back(v[c]);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    for (const auto& [j, a] : tails_[r]) q[j].sub_mul(c, a);
  }
  return q;
}

Vec QuotientSpace::lift(const Vec& q) const {
  if (q.size() != basis_.size()) throw std::invalid_argument("lift: dimension mismatch");
  Vec v = zero_vec(field_, ambient_);
  for (std::size_t j = 0; j < basis_.size(); ++j) v[basis_[j]] = q[j];
  return v;
}

Matrix QuotientSpace::projection() const {
  Matrix p(field_, dim(), ambient_);
  for (std::size_t j = 0; j < basis_.size(); ++j) p(j, basis_[j]) = field_.one();
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    for (const auto& [j, a] : tails_[r]) p(j, pivots_[r]) = -a;
  return p;
}

Matrix QuotientSpace::section() const {
  Matrix s(field_, ambient_, dim());
  for (std::size_t j = 0; j < basis_.size(); ++j) s(basis_[j], j) = field_.one();
  return s;
}

bool QuotientSpace::kills(const Matrix& ambient_map) const {
  if (ambient_map.cols() != ambient_) throw std::invalid_argument("kills: dimension mismatch");
  // Relation r equals e_pivot + sum_tail a e_basis.
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Vec img = ambient_map.column(pivots_[r]);
    for (const auto& [j, a] : tails_[r]) {
      for (std::size_t i = 0; i < img.size(); ++i) {
        const Scalar& x = ambient_map(i, basis_[j]);
        if (!x.is_zero()) img[i].add_mul(a, x);
      }
    }
    if (!is_zero(img)) return false;
  }
  return true;
}

Matrix QuotientSpace::descend(const Matrix& ambient_map) const {
  if (!kills(ambient_map)) throw not_well_defined("map does not vanish on the defining relations");
  Matrix out(field_, ambient_map.rows(), dim());
  for (std::size_t j = 0; j < basis_.size(); ++j) out.set_column(j, ambient_map.column(basis_[j]));
  return out;
}

Matrix QuotientSpace::induced(const Matrix& ambient_map, const QuotientSpace& target) const {
  Matrix out(field_, target.dim(), dim());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    out.set_column(j, target.project(ambient_map.column(basis_[j])));
  return out;
}

QuotientSpace quotient_by(const Field& f, std::size_t ambient, const std::vector<Vec>& relations) {
  SpanBuilder s(f, ambient);
  for (const auto& r : relations) {
    if (is_zero(r)) continue;
    s.add(r);
    if (s.rank() == ambient) break;
  }
  return QuotientSpace(f, ambient, s);
}

FinSpace FinSpace::numbered(const Field& f, std::size_t n, const std::string& prefix) {
  FinSpace s{f, {}};
  for (std::size_t i = 0; i < n; ++i) s.labels.push_back(prefix + std::to_string(i));
  return s;
}

}  // namespace ddalab
