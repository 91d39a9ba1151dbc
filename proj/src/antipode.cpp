#include "ddalab/antipode.hpp"

#include "ddalab/instances.hpp"

namespace ddalab {

const char* antipode_status_name(AntipodeStatus s) {
  switch (s) {
    case AntipodeStatus::unique: return "unique";
    case AntipodeStatus::ambiguous: return "ambiguous";
    case AntipodeStatus::none: return "none";
  }
  return "none";
}

namespace {

// Accumulates equations L(S) = rhs for linear maps L of the n x n matrix S.
class LinearSystem {
 public:
  LinearSystem(const Field& f, std::size_t n) : f_(f), n_(n) {}

  void add(const std::function<Vec(const Matrix&)>& l, const Vec& rhs) {
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      Matrix e(f_, n_, n_);
      e(k / n_, k % n_) = f_.one();
      cols.push_back(l(e));
    }
    for (std::size_t r = 0; r < rhs.size(); ++r) {
      Vec row = zero_vec(f_, n_ * n_);
      bool any = false;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        row[k] = cols[k][r];
        any = any || !row[k].is_zero();
      }
      if (!any && rhs[r].is_zero()) continue;
      rows_.push_back(std::move(row));
      rhs_.push_back(rhs[r]);
    }
  }

  Matrix matrix() const { return Matrix::from_rows(f_, n_ * n_, rows_); }
  Vec rhs() const { return rhs_; }

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  Vec rhs_;
};

std::vector<Vec> relation_vectors(const QuotientSpace& q) {
  std::vector<Vec> out;
  for (std::size_t p : q.pivots()) {
    Vec e = unit_vec(q.field(), q.ambient_dim(), p);
    out.push_back(sub(e, q.lift(q.project(e))));
  }
  return out;
}

Vec stack(const std::vector<Vec>& parts) {
  Vec out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

void check_antipode(const DdaContext& c, const Matrix& s, Report& report, const std::string& prefix) {
  const std::size_t n = c.d.dim();
  const Field& f = c.d.field();
  auto s_inv = inverse(s);
  report.record(prefix + ".invertible", s_inv.has_value(), "S is bijective", "S is singular");
  std::string wc, ws;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec x = c.d.vertical.basis(a), y = c.d.vertical.basis(b);
      if (wc.empty() && s.apply(c.d.circ(x, y)) != c.d.circ(s.apply(y), s.apply(x)))
        wc = "S(b" + std::to_string(a) + " o b" + std::to_string(b) + ") != S(b" + std::to_string(b) + ") o S(b" +
             std::to_string(a) + ")";
      if (ws.empty() && s.apply(c.d.star(x, y)) != c.d.star(s.apply(y), s.apply(x)))
        ws = "S(b" + std::to_string(a) + " * b" + std::to_string(b) + ") != S(b" + std::to_string(b) + ") * S(b" +
             std::to_string(a) + ")";
    }
  report.record(prefix + ".anti_multiplicative_vertical", wc.empty(), "S(a o a') = S(a') o S(a)", wc);
  report.record(prefix + ".anti_multiplicative_horizontal", ws.empty(), "S(a * a') = S(a') * S(a)", ws);
  report.record(prefix + ".fixes_units", s.apply(c.d.e()) == c.d.e() && s.apply(c.d.i()) == c.d.i(),
                "S(e) = e and S(i) = i", "a unit is moved");
  std::string wx;
  for (const auto& t : c.get(Base::T).sub.ambient_basis()) {
    Vec pt = c.phi(Base::B, c.phi(Base::R, t));
    for (std::size_t a = 0; a < n && wx.empty(); ++a) {
      Vec x = c.d.vertical.basis(a);
      if (s.apply(c.d.star(t, x)) != c.d.star(s.apply(x), pt)) wx = "fails for t = " + to_string(t) + ", a = b" + std::to_string(a);
    }
  }
  report.record(prefix + ".exchange_law", wx.empty(), "S(t * a) = S(a) * Phi_B Phi_R(t) for t in T", wx);
  (void)f;
  if (s_inv) {
    HModuleAlgebra v = self_module_algebra(c);
    check_phi(c, build_galois_maps(c, v), s, report, prefix + ".self_module");
  }
}

void antipode_diagnostics(const DdaContext& c, const Matrix& s, Report& report, const std::string& prefix) {
  std::string w;
  for (const auto& t : c.get(Base::T).sub.ambient_basis())
    for (std::size_t a = 0; a < c.d.dim() && w.empty(); ++a) {
      Vec x = c.d.vertical.basis(a);
      if (s.apply(c.d.star(t, x)) != c.d.circ(c.phi(Base::R, t), x))
        w = "differs for t = " + to_string(t) + ", a = b" + std::to_string(a);
    }
  report.record(prefix + ".star_t_equals_circ_phi_r", w.empty(), "S(t * a) = Phi_R(t) o a for t in T", w);
}

AntipodeResult solve_antipode(const DdaContext& c) {
  const std::size_t n = c.d.dim();
  const Field& f = c.d.field();
  AntipodeResult out;

  // Stage one: linear constraints.
  LinearSystem sys(f, n);
  sys.add([&](const Matrix& s) { return s.apply(c.d.e()); }, c.d.e());
  sys.add([&](const Matrix& s) { return s.apply(c.d.i()); }, c.d.i());
  for (const auto& t : c.get(Base::T).sub.ambient_basis()) {
    Vec pt = c.phi(Base::B, c.phi(Base::R, t));
    for (std::size_t a = 0; a < n; ++a) {
      Vec x = c.d.vertical.basis(a), tx = c.d.star(t, x);
      sys.add([&](const Matrix& s) { return sub(s.apply(tx), c.d.star(s.apply(x), pt)); }, zero_vec(f, n));
    }
  }
  HModuleAlgebra self = self_module_algebra(c);
  GaloisMaps g = build_galois_maps(c, self);
  {
    // phi must kill the relations of M (x)_T A and send gamma^M to gamma_M.
    std::vector<Vec> probes = relation_vectors(g.comodule.over_t.space());
    std::vector<Vec> targets(probes.size(), zero_vec(f, g.comodule.over_b.dim()));
    for (std::size_t x = 0; x < g.gamma_upper.cols(); ++x) {
      probes.push_back(g.comodule.over_t.lift(g.gamma_upper.column(x)));
      targets.push_back(g.gamma_lower.column(x));
    }
    sys.add(
        [&](const Matrix& s) {
          Matrix amb = phi_on_ambient(c, g, s);
          std::vector<Vec> parts;
          for (const auto& p : probes) parts.push_back(amb.apply(p));
          return stack(parts);
        },
        stack(targets));
  }
  Matrix a = sys.matrix();
  auto particular = solve_linear(a, sys.rhs());
  if (!particular) {
    out.witness = "linear constraints (units, exchange law, phi o gamma^M = gamma_M) are inconsistent";
    return out;
  }
  std::vector<Vec> family = kernel(a);
  out.linear_solution_dim = family.size();
  Matrix s0 = Matrix::reshape(f, *particular, n, n);
  std::vector<Matrix> ks;
  for (const auto& k : family) ks.push_back(Matrix::reshape(f, k, n, n));

  Matrix candidate = s0;
  if (!ks.empty()) {
    // Stage two: S = S0 + sum x_j K_j; quadratic monomials x_j x_k become extra unknowns y_jk (j <= k).
    const std::size_t m = ks.size();
    std::vector<std::pair<std::size_t, std::size_t>> mono;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) mono.emplace_back(j, k);
    std::vector<Vec> rows;
    Vec rhs;
    auto add_law = [&](const std::function<Vec(const Vec&, const Vec&)>& mul) {
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Vec x = c.d.vertical.basis(p), y = c.d.vertical.basis(q), xy = mul(x, y);
          // S(xy) - S(y) S(x) = 0
          std::vector<Vec> cols;
          for (std::size_t j = 0; j < m; ++j)
            cols.push_back(sub(ks[j].apply(xy), add(mul(ks[j].apply(y), s0.apply(x)), mul(s0.apply(y), ks[j].apply(x)))));
          for (const auto& [j, k] : mono) {
            Vec v = mul(ks[j].apply(y), ks[k].apply(x));
            if (j != k) v = add(v, mul(ks[k].apply(y), ks[j].apply(x)));
            cols.push_back(scale(-f.one(), v));
          }
          Vec r = sub(mul(s0.apply(y), s0.apply(x)), s0.apply(xy));
          for (std::size_t row = 0; row < n; ++row) {
            Vec eq;
            for (const auto& col : cols) eq.push_back(col[row]);
            rows.push_back(std::move(eq));
            rhs.push_back(r[row]);
          }
        }
    };
    add_law([&](const Vec& x, const Vec& y) { return c.d.circ(x, y); });
    add_law([&](const Vec& x, const Vec& y) { return c.d.star(x, y); });
    Matrix lin = Matrix::from_rows(f, m + mono.size(), rows);
    auto sol = solve_linear(lin, rhs);
    if (!sol) {
      out.witness = "anti-multiplicativity has no solution in the " + std::to_string(m) + "-dimensional linear family";
      return out;
    }
    bool x_determined = true;
    for (const auto& k : kernel(lin))
      for (std::size_t j = 0; j < m; ++j) x_determined = x_determined && k[j].is_zero();
    candidate = s0;
    for (std::size_t j = 0; j < m; ++j) candidate.add_scaled((*sol)[j], ks[j]);
    if (!x_determined) {
      out.status = AntipodeStatus::ambiguous;
      out.witness = "linearized anti-multiplicativity leaves the family undetermined";
    }
  }

  check_antipode(c, candidate, out.report, "antipode");
  antipode_diagnostics(c, candidate, out.diagnostics, "antipode.diagnostic");
  if (!out.report.ok()) {
    if (out.status != AntipodeStatus::ambiguous) {
      out.status = AntipodeStatus::none;
      for (const auto& ch : out.report.checks())
        if (!ch.holds) {
          out.witness = ch.id + ": " + ch.witness;
          break;
        }
    }
    return out;
  }
  auto inv = inverse(candidate);
  out.antipode = Antipode{candidate, *inv};
  if (out.status != AntipodeStatus::ambiguous) out.status = AntipodeStatus::unique;
  return out;
}

}  // namespace ddalab
