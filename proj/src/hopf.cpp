#include "ddalab/hopf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ddalab {

std::size_t Group::inv(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mul(g, h) == 0) return h;
  throw std::logic_error("group element without inverse");
}

Group trivial_group() { return Group{"trivial", {"1"}, {0}}; }

Group cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  Group g;
  g.name = "C" + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) g.labels.push_back(k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table.push_back((a + b) % n);
  return g;
}

Group symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Group g;
  g.name = "S3";
  for (const auto& q : perms) g.labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::array<int, 3> c{a[b[0]], a[b[1]], a[b[2]]};
      g.table.push_back(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

Group group_by_name(const std::string& name) {
  if (name == "trivial") return trivial_group();
  if (name == "S3") return symmetric_group3();
  if (name.size() > 1 && name[0] == 'C' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    std::size_t n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 12) return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group '" + name + "' (expected trivial, C<n> with n <= 12, or S3)");
}

HopfData group_hopf(const Group& g, const Field& f) {
  const std::size_t n = g.order();
  FinSpace space{f, g.labels};
  auto alg = StructAlgebra::from_bilinear(
      space, [&](std::size_t a, std::size_t b) { return unit_vec(f, n, g.mul(a, b)); }, unit_vec(f, n, 0));
  HopfData h;
  h.algebra = std::move(alg);
  h.comult = Matrix(f, n * n, n);
  h.antipode = Matrix(f, n, n);
  h.counit = Vec(n, f.one());
  h.integral = Vec(n, f.one());
  h.dual_integral = zero_vec(f, n);
  h.dual_integral[0] = f.one();
  for (std::size_t a = 0; a < n; ++a) {
    h.comult(a * n + a, a) = f.one();
    h.antipode(g.inv(a), a) = f.one();
  }
  return normalize_integrals(std::move(h));
}

namespace {

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = a.empty() ? Scalar() : a[0].field().zero();
  for (std::size_t k = 0; k < a.size(); ++k) s.add_mul(a[k], b[k]);
  return s;
}

// theta(b_h)(b_x) = lambda(b_h * b_x), column h.
Matrix pairing_matrix(const HopfData& h) {
  const std::size_t n = h.algebra.dim();
  Matrix m(h.algebra.field(), n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) m(x, a) = dot(h.dual_integral, h.algebra.product(a, x));
  return m;
}

}  // namespace

HopfData normalize_integrals(HopfData h) {
  Scalar e = dot(h.counit, h.integral);
  if (e.is_zero())
    throw construction_error("counit of the integral vanishes (characteristic divides the dimension?)");
  h.integral = scale(e.inverse(), h.integral);
  Scalar l = dot(h.dual_integral, h.integral);
  if (l.is_zero()) throw construction_error("dual integral vanishes on the integral");
  h.dual_integral = scale(l.inverse(), h.dual_integral);
  return h;
}

void check_hopf(const HopfData& h, Report& report) {
  const StructAlgebra& A = h.algebra;
  const Field& f = A.field();
  const std::size_t n = A.dim();
  check_algebra(A, report, "hopf.algebra");
  if (!A.has_unit()) return;
  Matrix D = h.comult;
  std::string w;
  // Coassociativity and counit.
  for (std::size_t a = 0; a < n && w.empty(); ++a) {
    Vec d = D.column(a);
    Vec l = zero_vec(f, n * n * n), r = l;
    Vec c1 = zero_vec(f, n), c2 = c1;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& c = d[p * n + q];
        if (c.is_zero()) continue;
        Vec dp = D.column(p), dq = D.column(q);
        for (std::size_t k = 0; k < n * n; ++k) {
          if (!dp[k].is_zero()) l[k * n + q].add_mul(c, dp[k]);
          if (!dq[k].is_zero()) r[p * n * n + k].add_mul(c, dq[k]);
        }
        c1[q].add_mul(c, h.counit[p]);
        c2[p].add_mul(c, h.counit[q]);
      }
    if (l != r) w = "coassociativity fails on basis " + std::to_string(a);
    else if (c1 != A.basis(a) || c2 != A.basis(a)) w = "counit law fails on basis " + std::to_string(a);
  }
  report.record("hopf.coalgebra", w.empty(), "coassociative and counital", w);

  auto delta_mul = [&](const Vec& x, const Vec& y) {
    Vec out = zero_vec(f, n * n);
    for (std::size_t p = 0; p < n * n; ++p) {
      if (x[p].is_zero()) continue;
      for (std::size_t q = 0; q < n * n; ++q) {
        if (y[q].is_zero()) continue;
        Vec l = A.product(p / n, q / n), r = A.product(p % n, q % n);
        Scalar c = x[p] * y[q];
        for (std::size_t i = 0; i < n; ++i)
          if (!l[i].is_zero())
            for (std::size_t j = 0; j < n; ++j)
              if (!r[j].is_zero()) out[i * n + j].add_mul(c, l[i] * r[j]);
      }
    }
    return out;
  };
  w.clear();
  if (D.apply(A.unit()) != kron(A.unit(), A.unit()) || dot(h.counit, A.unit()) != f.one())
    w = "comultiplication or counit not unital";
  for (std::size_t a = 0; a < n && w.empty(); ++a)
    for (std::size_t b = 0; b < n && w.empty(); ++b) {
      if (D.apply(A.product(a, b)) != delta_mul(D.column(a), D.column(b)))
        w = "Delta not multiplicative on (" + std::to_string(a) + "," + std::to_string(b) + ")";
      else if (dot(h.counit, A.product(a, b)) != h.counit[a] * h.counit[b])
        w = "counit not multiplicative on (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  report.record("hopf.bialgebra", w.empty(), "Delta and eps are algebra maps", w);

  w.clear();
  for (std::size_t a = 0; a < n && w.empty(); ++a) {
    Vec d = D.column(a), l = zero_vec(f, n), r = l;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& c = d[p * n + q];
        if (c.is_zero()) continue;
        axpy(l, c, A.mul(h.antipode.column(p), A.basis(q)));
        axpy(r, c, A.mul(A.basis(p), h.antipode.column(q)));
      }
    Vec target = scale(h.counit[a], A.unit());
    if (l != target || r != target) w = "antipode law fails on basis " + std::to_string(a);
  }
  report.record("hopf.antipode", w.empty(), "S(h1) h2 = eps(h) 1 = h1 S(h2)", w);

  w.clear();
  for (std::size_t a = 0; a < n && w.empty(); ++a) {
    if (A.mul(A.basis(a), h.integral) != scale(h.counit[a], h.integral))
      w = "h Lambda != eps(h) Lambda for basis " + std::to_string(a);
    Vec d = D.column(a), l = zero_vec(f, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (!d[p * n + q].is_zero()) axpy(l, d[p * n + q] * h.dual_integral[q], A.basis(p));
    if (w.empty() && l != scale(h.dual_integral[a], A.unit()))
      w = "h1 lambda(h2) != lambda(h) 1 for basis " + std::to_string(a);
  }
  report.record("hopf.integrals", w.empty(), "Lambda is a left integral, lambda a left integral on the dual", w);
  bool normalized = dot(h.counit, h.integral).is_one() && dot(h.dual_integral, h.integral).is_one();
  report.record("hopf.integrals_normalized", normalized, "eps(Lambda) = 1 and lambda(Lambda) = 1",
                "eps(Lambda) = " + dot(h.counit, h.integral).to_string() + ", lambda(Lambda) = " +
                    dot(h.dual_integral, h.integral).to_string());
  report.record("hopf.pairing_nondegenerate", rank(pairing_matrix(h)) == n, "lambda(h * h') is nondegenerate",
                "rank " + std::to_string(rank(pairing_matrix(h))));
}

DoubleAlgebra dda_from_hopf(const HopfData& hin) {
  HopfData h = normalize_integrals(hin);
  const StructAlgebra& A = h.algebra;
  const Field& f = A.field();
  const std::size_t n = A.dim();
  Matrix theta = pairing_matrix(h);
  auto inv = inverse(theta);
  if (!inv) {
    auto k = rank_kernel_image(theta).kernel;
    throw construction_error("singular pairing lambda(h * h'): kernel vector " + to_string(k.at(0)));
  }
  auto circ = [&](std::size_t a, std::size_t b) {
    Vec ta = theta.column(a), tb = theta.column(b), prod = zero_vec(f, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t p = 0; p < n; ++p) {
        if (ta[p].is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = h.comult(p * n + q, x);
          if (!c.is_zero() && !tb[q].is_zero()) prod[x].add_mul(c, ta[p] * tb[q]);
        }
      }
    return inv->apply(prod);
  };
  DoubleAlgebra d;
  d.vertical = StructAlgebra::from_bilinear(A.space(), circ, inv->apply(h.counit));
  d.horizontal = A;
  return d;
}

Matrix transported_antipode(const HopfData& hin) {
  HopfData h = normalize_integrals(hin);
  Matrix theta = pairing_matrix(h);
  auto inv = inverse(theta);
  if (!inv) throw construction_error("singular pairing");
  // functional x -> lambda(b_a * S_H(x)) has coordinates (S_H^T theta)[., a]
  return *inv * (h.antipode.transpose() * theta);
}

DoubleAlgebra trivial_dda(const Field& f) {
  FinSpace s{f, {"1"}};
  StructAlgebra k(s, {Vec{f.one()}}, Vec{f.one()});
  return DoubleAlgebra{k, k};
}

}  // namespace ddalab
