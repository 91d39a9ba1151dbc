#include "ddalab/algebra.hpp"

#include <sstream>

namespace ddalab {

StructAlgebra::StructAlgebra(FinSpace space, std::vector<Vec> products, std::optional<Vec> unit)
    : space_(std::move(space)), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t n = dim();
  if (products_.size() != n * n) throw std::invalid_argument("structure constants: expected dim^2 products");
  for (const auto& p : products_)
    if (p.size() != n) throw std::invalid_argument("structure constants: product of wrong dimension");
  if (unit_ && unit_->size() != n) throw std::invalid_argument("unit of wrong dimension");
  left_.assign(n, Matrix(field(), n, n));
  right_.assign(n, Matrix(field(), n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (p[k].is_zero()) continue;
        left_[i](k, j) = p[k];
        right_[j](k, i) = p[k];
      }
    }
}

StructAlgebra StructAlgebra::from_bilinear(FinSpace space, const std::function<Vec(std::size_t, std::size_t)>& f,
                                           std::optional<Vec> unit) {
  const std::size_t n = space.dim();
  std::vector<Vec> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(f(i, j));
  return StructAlgebra(std::move(space), std::move(products), std::move(unit));
}

Vec StructAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec r = zero_vec(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      axpy(r, c, product(i, j));
    }
  }
  return r;
}

Matrix StructAlgebra::left_mult(const Vec& x) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(x[i], left_[i]);
  return m;
}

Matrix StructAlgebra::right_mult(const Vec& y) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.add_scaled(y[j], right_[j]);
  return m;
}

const Vec& StructAlgebra::unit() const {
  if (!unit_) throw std::logic_error("algebra has no unit");
  return *unit_;
}

StructAlgebra StructAlgebra::opposite() const {
  return from_bilinear(space_, [this](std::size_t i, std::size_t j) { return product(j, i); }, unit_);
}

std::optional<Vec> find_unit(const StructAlgebra& a) {
  const std::size_t n = a.dim();
  // Unknown u: u b_j = b_j and b_j u = b_j.
  Matrix m(a.field(), 2 * n * n, n);
  Vec rhs = zero_vec(a.field(), 2 * n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t r1 = j * n + k, r2 = n * n + j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        m(r1, i) = a.product(i, j)[k];
        m(r2, i) = a.product(j, i)[k];
      }
      if (j == k) rhs[r1] = rhs[r2] = a.field().one();
    }
  return solve_linear(m, rhs);
}

void check_algebra(const StructAlgebra& a, Report& report, const std::string& prefix) {
  const std::size_t n = a.dim();
  // Small algebras: every basis triple. Larger ones: triples (g, b_j, b_k) for a
  // generating set g whose left-nested words span the algebra, which forces
  // associativity on all triples.
  std::vector<Vec> firsts;
  std::vector<std::string> first_names;
  if (n <= 12 || !a.has_unit()) {
    for (std::size_t i = 0; i < n; ++i) {
      firsts.push_back(a.basis(i));
      first_names.push_back(std::to_string(i));
    }
  } else {
    firsts = algebra_generators(a);
    for (std::size_t i = 0; i < firsts.size(); ++i) first_names.push_back("g" + std::to_string(i));
  }
  std::size_t bad = 0;
  std::string witness;
  for (std::size_t g = 0; g < firsts.size(); ++g) {
    Matrix lg = a.left_mult(firsts[g]);
    for (std::size_t j = 0; j < n; ++j) {
      Vec xy = lg.column(j);
      Matrix lxy = a.left_mult(xy);
      Matrix rhs = lg * a.left(j);
      if (lxy == rhs) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (lxy.column(k) != rhs.column(k)) {
          ++bad;
          if (witness.empty())
            witness = "basis triple (" + first_names[g] + "," + std::to_string(j) + "," + std::to_string(k) +
                      "): (xy)z=" + to_string(lxy.column(k)) + " x(yz)=" + to_string(rhs.column(k));
        }
    }
  }
  report.record(prefix + ".associative", bad == 0,
                bad ? std::to_string(bad) + " non-associative basis triples" : "associative on basis triples",
                witness);
  if (!a.has_unit()) {
    auto u = find_unit(a);
    report.fail(prefix + ".unit", "no unit vector supplied",
                u ? "a unit exists: " + to_string(*u) : "no two-sided unit exists");
    return;
  }
  const Vec& u = a.unit();
  for (std::size_t j = 0; j < n; ++j) {
    Vec b = a.basis(j);
    Vec l = a.mul(u, b), r = a.mul(b, u);
    if (l != b || r != b) {
      report.fail(prefix + ".unit", "unit law fails", "basis " + std::to_string(j) + ": 1b=" + to_string(l) +
                                                          " b1=" + to_string(r));
      return;
    }
  }
  report.pass(prefix + ".unit", "two-sided unit");
}

void check_algebra_map(const StructAlgebra& src, const StructAlgebra& dst, const Matrix& f, bool anti,
                       Report& report, const std::string& id) {
  std::vector<Vec> img;
  for (std::size_t i = 0; i < src.dim(); ++i) img.push_back(f.column(i));
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vec lhs = f.apply(src.product(i, j));
      Vec rhs = anti ? dst.mul(img[j], img[i]) : dst.mul(img[i], img[j]);
      if (lhs != rhs) {
        report.fail(id, anti ? "not anti-multiplicative" : "not multiplicative",
                    "basis pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(lhs) +
                        " vs " + to_string(rhs));
        return;
      }
    }
  if (src.has_unit() && dst.has_unit() && f.apply(src.unit()) != dst.unit()) {
    report.fail(id, "not unital", "image of unit " + to_string(f.apply(src.unit())));
    return;
  }
  report.pass(id, anti ? "unital anti-homomorphism" : "unital homomorphism");
}

SpanBuilder generated_subalgebra(const StructAlgebra& a, const std::vector<Vec>& gens) {
  SpanBuilder s(a.field(), a.dim());
  std::vector<Vec> frontier;
  if (a.has_unit()) {
    if (s.add(a.unit())) frontier.push_back(a.unit());
  } else {
    for (const auto& g : gens)
      if (s.add(g)) frontier.push_back(g);
  }
  std::vector<Matrix> lg;
  for (const auto& g : gens) lg.push_back(a.left_mult(g));
  while (!frontier.empty() && s.rank() < a.dim()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& l : lg) {
        Vec w = l.apply(v);
        if (s.add(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return s;
}

std::vector<Vec> algebra_generators(const StructAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> gens;
  Vec w = zero_vec(a.field(), n);
  for (std::size_t k = 0; k < n; ++k) w[k] = a.field().from_int(static_cast<long long>(k + 1));
  gens.push_back(w);
  SpanBuilder s = generated_subalgebra(a, gens);
  for (std::size_t k = 0; k < n && s.rank() < n; ++k) {
    Vec b = a.basis(k);
    if (s.contains(b)) continue;
    gens.push_back(b);
    s = generated_subalgebra(a, gens);
  }
  return gens;
}

bool SubAlgebra::contains(const Vec& v) const {
  Vec c;
  for (auto p : pivots) c.push_back(v[p]);
  return to_ambient(c) == v;
}

Vec SubAlgebra::coords(const Vec& v) const {
  Vec c;
  for (auto p : pivots) c.push_back(v[p]);
  if (to_ambient(c) != v) throw std::domain_error("element outside subalgebra: " + to_string(v));
  return c;
}

SubAlgebra subalgebra_from_span(const StructAlgebra& ambient, const std::vector<Vec>& spanning,
                                const std::string& label_prefix) {
  SpanBuilder s(ambient.field(), ambient.dim());
  for (const auto& v : spanning) s.add(v);
  std::vector<Vec> basis = s.canonical_basis();
  SubAlgebra sub;
  sub.embed = Matrix::from_columns(ambient.field(), ambient.dim(), basis);
  for (const auto& b : basis) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    sub.pivots.push_back(p);
  }
  const std::size_t d = basis.size();
  std::vector<Vec> products;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec p = ambient.mul(basis[i], basis[j]);
      if (!s.contains(p))
        throw not_closed("span not closed under multiplication: basis pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ") gives " + to_string(p));
      Vec c;
      for (auto q : sub.pivots) c.push_back(p[q]);
      products.push_back(std::move(c));
    }
  FinSpace space = FinSpace::numbered(ambient.field(), d, label_prefix);
  std::optional<Vec> unit;
  if (ambient.has_unit() && s.contains(ambient.unit())) {
    Vec c;
    for (auto q : sub.pivots) c.push_back(ambient.unit()[q]);
    unit = c;
  }
  sub.algebra = StructAlgebra(space, std::move(products), unit);
  if (!unit) {
    auto u = find_unit(sub.algebra);
    if (!u) throw not_closed("subspace has no unit");
    sub.algebra = StructAlgebra(space, [&] {
      std::vector<Vec> ps;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) ps.push_back(sub.algebra.product(i, j));
      return ps;
    }(), u);
  }
  return sub;
}

SubAlgebra centralizer(const StructAlgebra& a, const std::vector<Vec>& with, const std::string& label_prefix) {
  std::vector<Vec> rows;
  for (const auto& x : with) {
    Matrix d = a.right_mult(x) - a.left_mult(x);
    for (std::size_t i = 0; i < d.rows(); ++i) rows.push_back(d.row(i));
  }
  return subalgebra_from_span(a, kernel_of_rows(a.field(), a.dim(), rows), label_prefix);
}

ActionSet right_regular(const StructAlgebra& a, const std::vector<Vec>& acting) {
  ActionSet s{a.dim(), {}};
  for (const auto& x : acting) s.ops.push_back(a.right_mult(x));
  return s;
}

ActionSet left_regular(const StructAlgebra& a, const std::vector<Vec>& acting) {
  ActionSet s{a.dim(), {}};
  for (const auto& x : acting) s.ops.push_back(a.left_mult(x));
  return s;
}

std::vector<Vec> kernel_of_rows(const Field& f, std::size_t n, const std::vector<Vec>& rows,
                                std::vector<std::size_t>* free_columns) {
  SpanBuilder s(f, n);
  for (const auto& r : rows) {
    if (s.rank() == n) break;
    if (!is_zero(r)) s.add(r);
  }
  std::vector<Vec> basis = s.canonical_basis();
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivots;
  for (const auto& b : basis) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    is_pivot[p] = true;
    pivots.push_back(p);
  }
  std::vector<Vec> ker;
  if (free_columns) free_columns->clear();
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec k = zero_vec(f, n);
    k[c] = f.one();
    for (std::size_t r = 0; r < basis.size(); ++r) k[pivots[r]] = -basis[r][c];
    ker.push_back(std::move(k));
    if (free_columns) free_columns->push_back(c);
  }
  return ker;
}

HomSpace::HomSpace(const Field& f, std::size_t src, std::size_t dst, std::vector<Matrix> basis,
                   std::vector<std::size_t> free_entries)
    : field_(f), src_(src), dst_(dst), basis_(std::move(basis)), free_(std::move(free_entries)) {}

Matrix HomSpace::element(const Vec& c) const {
  Matrix m(field_, dst_, src_);
  for (std::size_t i = 0; i < basis_.size(); ++i) m.add_scaled(c[i], basis_[i]);
  return m;
}

bool HomSpace::contains(const Matrix& f) const {
  Vec flat = f.flatten();
  Vec c;
  for (auto e : free_) c.push_back(flat[e]);
  return element(c) == f;
}

Vec HomSpace::coords(const Matrix& f) const {
  Vec flat = f.flatten();
  Vec c;
  for (auto e : free_) c.push_back(flat[e]);
  if (element(c) != f) throw std::domain_error("map outside the hom space");
  return c;
}

HomSpace hom_space(const Field& f, const ActionSet& x, const ActionSet& y) {
  if (x.ops.size() != y.ops.size()) throw std::invalid_argument("hom_space: action lists differ in length");
  const std::size_t sx = x.dim, ty = y.dim, n = sx * ty;
  std::vector<Vec> rows;
  SpanBuilder s(f, n);
  for (std::size_t k = 0; k < x.ops.size() && s.rank() < n; ++k) {
    const Matrix& X = x.ops[k];
    const Matrix& Y = y.ops[k];
    for (std::size_t i = 0; i < ty; ++i)
      for (std::size_t j = 0; j < sx; ++j) {
        Vec row = zero_vec(f, n);
        for (std::size_t l = 0; l < sx; ++l)
          if (!X(l, j).is_zero()) row[i * sx + l] += X(l, j);
        for (std::size_t l = 0; l < ty; ++l)
          if (!Y(i, l).is_zero()) row[l * sx + j] -= Y(i, l);
        if (!is_zero(row)) s.add(std::move(row));
      }
  }
  std::vector<std::size_t> free;
  std::vector<Vec> ker = kernel_of_rows(f, n, s.rows(), &free);
  std::vector<Matrix> basis;
  for (const auto& k : ker) basis.push_back(Matrix::reshape(f, k, ty, sx));
  return HomSpace(f, sx, ty, std::move(basis), std::move(free));
}

TensorProduct::TensorProduct(const Field& f, std::vector<std::size_t> dims, std::vector<TensorJunction> junctions)
    : dims_(std::move(dims)) {
  if (junctions.size() + 1 != dims_.size()) throw std::invalid_argument("tensor: junction count mismatch");
  std::size_t ambient = 1;
  for (auto d : dims_) ambient *= d;
  SpanBuilder rel(f, ambient);
  for (std::size_t k = 0; k < junctions.size() && rel.rank() < ambient; ++k) {
    const auto& jn = junctions[k];
    if (jn.right_ops.size() != jn.left_ops.size()) throw std::invalid_argument("tensor: unbalanced junction");
    for (std::size_t t = 0; t < jn.right_ops.size() && rel.rank() < ambient; ++t) {
      const Matrix& R = jn.right_ops[t];
      const Matrix& L = jn.left_ops[t];
      if (R == Matrix::identity(f, dims_[k]) && L == Matrix::identity(f, dims_[k + 1])) continue;
      for (std::size_t a = 0; a < ambient && rel.rank() < ambient; ++a) {
        std::vector<std::size_t> idx = ambient_tuple(a);
        Vec v = zero_vec(f, ambient);
        std::vector<std::size_t> tmp = idx;
        for (std::size_t i = 0; i < dims_[k]; ++i) {
          if (R(i, idx[k]).is_zero()) continue;
          tmp[k] = i;
          v[ambient_index(tmp)] += R(i, idx[k]);
        }
        tmp = idx;
        for (std::size_t j = 0; j < dims_[k + 1]; ++j) {
          if (L(j, idx[k + 1]).is_zero()) continue;
          tmp[k + 1] = j;
          v[ambient_index(tmp)] -= L(j, idx[k + 1]);
        }
        if (!is_zero(v)) rel.add(std::move(v));
      }
    }
  }
  space_ = QuotientSpace(f, ambient, rel);
}

std::size_t TensorProduct::ambient_index(const std::vector<std::size_t>& idx) const {
  std::size_t a = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) a = a * dims_[k] + idx[k];
  return a;
}

std::vector<std::size_t> TensorProduct::ambient_tuple(std::size_t index) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = index % dims_[k];
    index /= dims_[k];
  }
  return idx;
}

Vec TensorProduct::pure(const std::vector<Vec>& factors) const {
  Vec v = factors.at(0);
  for (std::size_t k = 1; k < factors.size(); ++k) v = kron(v, factors[k]);
  return space_.project(v);
}

Matrix TensorProduct::matrix_of(const std::function<Vec(const std::vector<std::size_t>&)>& f, std::size_t out_dim,
                                bool checked) const {
  if (checked) {
    Matrix amb(field(), out_dim, ambient_dim());
    for (std::size_t a = 0; a < ambient_dim(); ++a) amb.set_column(a, f(ambient_tuple(a)));
    return space_.descend(amb);
  }
  Matrix out(field(), out_dim, dim());
  for (std::size_t j = 0; j < dim(); ++j) out.set_column(j, f(ambient_tuple(space_.basis()[j])));
  return out;
}

FrobeniusResult frobenius_dual_basis(const StructAlgebra& a, const std::vector<Vec>& base_gens, const Matrix& phi) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  FrobeniusResult out;
  for (const auto& g : base_gens) {
    Matrix lg = a.left_mult(g), rg = a.right_mult(g);
    if (phi * lg != lg * phi || phi * rg != rg * phi) {
      out.failure = "Frobenius map is not a bimodule map over the base (generator " + to_string(g) + ")";
      return out;
    }
  }
  TensorJunction jn;
  for (const auto& g : base_gens) {
    jn.right_ops.push_back(a.right_mult(g));
    jn.left_ops.push_back(a.left_mult(g));
  }
  TensorProduct t(f, {n, n}, {jn});
  const std::size_t q = t.dim();
  Matrix eqs(f, 2 * n * n, q);
  for (std::size_t c = 0; c < q; ++c) {
    auto idx = t.ambient_tuple(t.space().basis()[c]);
    std::size_t p = idx[0], r = idx[1];
    Vec fl = (a.left(p) * phi * a.left(r)).flatten();
    Vec gl = (a.right(r) * phi * a.right(p)).flatten();
    for (std::size_t e = 0; e < n * n; ++e) {
      eqs(e, c) = fl[e];
      eqs(n * n + e, c) = gl[e];
    }
  }
  Vec id = Matrix::identity(f, n).flatten();
  Vec rhs = id;
  rhs.insert(rhs.end(), id.begin(), id.end());
  auto z = solve_linear(eqs, rhs);
  if (!z) {
    out.failure = "no dual basis satisfies both Frobenius equations";
    return out;
  }
  FrobeniusData d;
  d.tensor = std::move(t);
  d.element = *z;
  d.pairs = split_pairs(f, n, n, d.tensor.lift(d.element));
  out.data = std::move(d);
  return out;
}

std::vector<std::pair<Vec, Vec>> split_pairs(const Field& f, std::size_t n1, std::size_t n2, const Vec& ambient) {
  std::vector<std::pair<Vec, Vec>> out;
  for (std::size_t p = 0; p < n1; ++p) {
    Vec v(ambient.begin() + static_cast<std::ptrdiff_t>(p * n2),
          ambient.begin() + static_cast<std::ptrdiff_t>((p + 1) * n2));
    if (!is_zero(v)) out.emplace_back(unit_vec(f, n1, p), std::move(v));
  }
  return out;
}

SummandTest summand_of_power(const Field& f, const ActionSet& x, const ActionSet& y) {
  SummandTest out;
  if (x.dim == 0) {
    out.holds = true;
    return out;
  }
  HomSpace hxy = hom_space(f, x, y), hyx = hom_space(f, y, x), eyy = hom_space(f, y, y);
  // Generators of Hom(X, Y) as a left End(Y)-module.
  std::vector<Matrix> gens;
  SpanBuilder reached(f, x.dim * y.dim);
  for (const auto& g : hxy.basis()) {
    if (reached.contains(g.flatten())) continue;
    gens.push_back(g);
    for (const auto& e : eyy.basis()) reached.add((e * g).flatten());
  }
  Vec id = Matrix::identity(f, x.dim).flatten();
  SpanBuilder trace(f, x.dim * x.dim);
  for (const auto& fm : hyx.basis()) {
    for (const auto& g : gens) trace.add((fm * g).flatten());
    if (trace.contains(id)) {
      out.holds = true;
      out.copies = gens.size();
      return out;
    }
  }
  std::ostringstream os;
  os << "identity outside the span of composites (rank " << trace.rank() << " of " << x.dim * x.dim
     << "; dim Hom(X,Y)=" << hxy.dim() << ", dim Hom(Y,X)=" << hyx.dim() << ")";
  out.witness = os.str();
  return out;
}

}  // namespace ddalab
