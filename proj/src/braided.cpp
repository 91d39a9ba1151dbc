#include "ddalab/braided.hpp"

#include <stdexcept>

namespace ddalab {

namespace {

using Terms = std::vector<std::tuple<std::size_t, std::size_t, Scalar>>;

// Nonzero entries of an ambient vector of X (x) Y as (x index, y index, coefficient).
Terms terms(const Vec& amb, std::size_t dim_y) {
  Terms out;
  for (std::size_t k = 0; k < amb.size(); ++k)
    if (!amb[k].is_zero()) out.emplace_back(k / dim_y, k % dim_y, amb[k]);
  return out;
}

Matrix on_quotient(const TensorProduct& t, const Matrix& ambient) {
  return t.space().descend(t.space().projection() * ambient);
}

Vec through(const TensorProduct& t, const Matrix& op, const Vec& x) { return t.project(op.apply(t.lift(x))); }

// H (x)_R H junction: h * Phi_T(r) (x) h' ~ h (x) h' * Phi_B(r).
TensorJunction hh_junction(const DdaContext& c) {
  TensorJunction j;
  for (const auto& r : c.get(Base::R).gens) {
    j.right_ops.push_back(c.d.horizontal.right_mult(c.phi(Base::T, r)));
    j.left_ops.push_back(c.d.horizontal.right_mult(c.phi(Base::B, r)));
  }
  return j;
}

TensorJunction hm_junction(const DdaContext& c, const RightHModule& m) {
  TensorJunction j;
  for (const auto& r : c.get(Base::R).gens) {
    j.right_ops.push_back(c.d.horizontal.right_mult(c.phi(Base::T, r)));
    j.left_ops.push_back(m.action(c.phi(Base::B, r)));
  }
  return j;
}

std::vector<std::vector<std::pair<Vec, Vec>>> delta_r_table(const DdaContext& c) {
  std::vector<std::vector<std::pair<Vec, Vec>>> out;
  for (std::size_t h = 0; h < c.d.dim(); ++h) out.push_back(c.delta(Base::R, c.d.horizontal.basis(h)));
  return out;
}

std::string at(const char* what, std::size_t a) { return std::string(what) + " " + std::to_string(a); }

std::vector<Vec> lifted_columns(const TensorProduct& t, const Matrix& m) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(t.lift(m.column(j)));
  return out;
}

HomSpace bimodule_end(const Extension& e) {
  ActionSet bi{e.m.dim(), {}};
  std::vector<Vec> ng = e.n_gens();
  for (const auto& n : ng) bi.ops.push_back(e.m.left_mult(n));
  for (const auto& n : ng) bi.ops.push_back(e.m.right_mult(n));
  return hom_space(e.m.field(), bi, bi);
}

}  // namespace

YDModule make_yd(const DdaContext& c, RightHModule z, Matrix tau) {
  YDModule y;
  y.hz = h_tensor_module(c, z);
  y.zh = module_tensor_h(c, z);
  y.z = std::move(z);
  y.tau = std::move(tau);
  return y;
}

void check_yd(const DdaContext& c, const YDModule& y, Report& report, const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dz = y.dim();
  const auto& H = c.d.horizontal;
  Matrix id_z = Matrix::identity(f, dz), id_h = Matrix::identity(f, n);
  std::vector<Vec> lifts = lifted_columns(y.hz, y.tau);
  std::vector<Vec> r_basis = c.get(Base::R).sub.ambient_basis();

  std::string w;
  for (const auto& r : r_basis)
    for (const auto& r2 : r_basis) {
      Matrix lhs = y.tau * y.z.action(H.mul(c.phi(Base::B, r), c.phi(Base::T, r2)));
      Matrix op = kron(H.left_mult(c.phi(Base::B, r2)) * H.right_mult(c.phi(Base::B, r)), id_z);
      for (std::size_t a = 0; a < dz && w.empty(); ++a)
        if (lhs.column(a) != through(y.hz, op, y.tau.column(a))) w = at("fails on basis", a);
    }
  report.record(prefix + ".tau_bimodule_map", w.empty(),
                "(r.z.r')<-1> (x) (r.z.r')<0> = Phi_B(r') * z<-1> * Phi_B(r) (x) z<0>", w);

  w.clear();
  for (const auto& r : r_basis) {
    Vec t = c.phi(Base::T, r);
    Matrix l = kron(H.left_mult(t), id_z), rr = kron(id_h, y.z.action(t));
    for (std::size_t a = 0; a < dz && w.empty(); ++a)
      if (through(y.hz, l, y.tau.column(a)) != through(y.hz, rr, y.tau.column(a))) w = at("fails on basis", a);
  }
  report.record(prefix + ".tau_takeuchi", w.empty(), "Phi_T(r) * z<-1> (x) z<0> = z<-1> (x) z<0> < Phi_T(r)", w);

  w.clear();
  for (std::size_t a = 0; a < dz && w.empty(); ++a) {
    Vec sum = zero_vec(f, dz);
    for (const auto& [h, b, x] : terms(lifts[a], dz))
      axpy(sum, x, y.z.action(c.phi(Base::B, c.phi(Base::R, H.basis(h)))).column(b));
    if (sum != id_z.column(a)) w = at("fails on basis", a);
  }
  report.record(prefix + ".tau_counit", w.empty(), "Phi_R(z<-1>) . z<0> = z", w);

  auto deltas = delta_r_table(c);
  TensorProduct hhz(f, {n, n, dz}, {hh_junction(c), hm_junction(c, y.z)});
  w.clear();
  for (std::size_t a = 0; a < dz && w.empty(); ++a) {
    Vec lhs = zero_vec(f, n * n * dz), rhs = lhs;
    for (const auto& [h, b, x] : terms(lifts[a], dz)) {
      axpy(lhs, x, kron(H.basis(h), lifts[b]));
      for (const auto& [p, q] : deltas[h]) axpy(rhs, x, kron(kron(p, q), id_z.column(b)));
    }
    if (hhz.project(lhs) != hhz.project(rhs)) w = at("fails on basis", a);
  }
  report.record(prefix + ".tau_coassociative", w.empty(), "(H (x) tau) tau = (Delta_R (x) Z) tau", w);

  w.clear();
  for (std::size_t h = 0; h < n && w.empty(); ++h)
    for (std::size_t a = 0; a < dz && w.empty(); ++a) {
      Vec lhs = zero_vec(f, n * dz), rhs = lhs;
      for (const auto& [p, q] : deltas[h]) {
        lhs = add(lhs, kron(H.left_mult(q), id_z).apply(y.hz.lift(y.tau.apply(y.z.action(p).column(a)))));
        rhs = add(rhs, kron(H.right_mult(p), y.z.action(q)).apply(lifts[a]));
      }
      if (y.hz.project(lhs) != y.hz.project(rhs)) w = "h = b" + std::to_string(h) + ", z = b" + std::to_string(a);
    }
  report.record(prefix + ".yetter_drinfeld", w.empty(),
                "h[2] * (z < h[1])<-1> (x) (z < h[1])<0> = z<-1> * h[1] (x) z<0> < h[2]", w);

  if (!y.tau_bar) return;
  std::vector<Vec> bars = lifted_columns(y.zh, *y.tau_bar);
  std::string w1, w2;
  for (std::size_t a = 0; a < dz; ++a) {
    Vec one = zero_vec(f, dz * n), two = zero_vec(f, n * dz);
    for (const auto& [h, b, x] : terms(lifts[a], dz))
      for (const auto& [b2, h2, x2] : terms(bars[b], n)) axpy(one, x * x2, kron(id_z.column(b2), H.product(h, h2)));
    for (const auto& [b, h, x] : terms(bars[a], n))
      for (const auto& [h2, b2, x2] : terms(lifts[b], dz)) axpy(two, x * x2, kron(H.product(h, h2), id_z.column(b2)));
    if (w1.empty() && y.zh.project(one) != y.zh.pure({id_z.column(a), c.d.i()})) w1 = at("fails on basis", a);
    if (w2.empty() && y.hz.project(two) != y.hz.pure({c.d.i(), id_z.column(a)})) w2 = at("fails on basis", a);
  }
  report.record(prefix + ".tau_bar_inverse_first", w1.empty(), "z<0><0> (x) z<-1> * z<0><1> = z (x) i", w1);
  report.record(prefix + ".tau_bar_inverse_second", w2.empty(), "z<1> * z<0><-1> (x) z<0><0> = i (x) z", w2);
}

Matrix inverse_coaction(const DdaContext& c, const YDModule& y) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dz = y.dim();
  const auto& pairs = c.get(Base::R).frob.pairs;
  Matrix amb(f, y.zh.dim(), n * dz);
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<Matrix> ops;
    for (const auto& [u, v] : pairs)
      ops.push_back(y.z.action(c.phi(Base::B, c.phi(Base::R, c.phi(Base::T, c.d.star(u, c.d.horizontal.basis(h)))))));
    for (std::size_t b = 0; b < dz; ++b) {
      Vec out = zero_vec(f, dz * n);
      for (std::size_t j = 0; j < pairs.size(); ++j) out = add(out, kron(ops[j].column(b), pairs[j].second));
      amb.set_column(h * dz + b, y.zh.project(out));
    }
  }
  return y.hz.space().descend(amb) * y.tau;
}

Braiding braiding(const DdaContext& c, const YDModule& y, const RightHModule& w) {
  const Field& f = c.d.field();
  const std::size_t dz = y.dim(), dw = w.dim(), n = c.d.dim();
  Braiding b;
  b.zw = module_tensor(c, y.z, w);
  b.wz = module_tensor(c, w, y.z);
  std::vector<Vec> lifts = lifted_columns(y.hz, y.tau);
  Matrix id_z = Matrix::identity(f, dz), id_w = Matrix::identity(f, dw);
  Matrix amb(f, b.wz.dim(), dz * dw);
  for (std::size_t a = 0; a < dz; ++a)
    for (std::size_t x = 0; x < dw; ++x) {
      Vec out = zero_vec(f, dw * dz);
      for (const auto& [h, u, s] : terms(lifts[a], dz)) axpy(out, s, kron(w.action(c.d.horizontal.basis(h)).column(x), id_z.column(u)));
      amb.set_column(a * dw + x, b.wz.project(out));
    }
  b.beta = b.zw.space().descend(amb);
  if (y.tau_bar) {
    std::vector<Vec> bars = lifted_columns(y.zh, *y.tau_bar);
    Matrix inv(f, b.zw.dim(), dw * dz);
    for (std::size_t x = 0; x < dw; ++x)
      for (std::size_t a = 0; a < dz; ++a) {
        Vec out = zero_vec(f, dz * dw);
        for (const auto& [u, h, s] : terms(bars[a], n)) axpy(out, s, kron(id_z.column(u), w.action(c.d.horizontal.basis(h)).column(x)));
        inv.set_column(x * dz + a, b.zw.project(out));
      }
    b.beta_inverse = b.wz.space().descend(inv);
  }
  return b;
}

void check_braiding(const Braiding& b, Report& report, const std::string& prefix) {
  if (b.beta_inverse.rows() == 0 && b.beta_inverse.cols() == 0) {
    report.fail(prefix + ".inverse", "beta has the inverse built from tau_bar", "no right coaction");
    return;
  }
  const Field& f = b.beta.field();
  bool ok = b.beta * b.beta_inverse == Matrix::identity(f, b.wz.dim()) &&
            b.beta_inverse * b.beta == Matrix::identity(f, b.zw.dim());
  report.record(prefix + ".inverse", ok, "beta and the tau_bar braiding are mutually inverse", "composites differ from identity");
}

YDModule unit_yd(const DdaContext& c) {
  RightHModule r = trivial_module(c);
  const SubAlgebra& rs = c.get(Base::R).sub;
  Vec e = rs.coords(c.d.e());
  TensorProduct hz = h_tensor_module(c, r);
  Matrix tau(c.d.field(), hz.dim(), r.dim());
  for (std::size_t a = 0; a < r.dim(); ++a)
    tau.set_column(a, hz.pure({c.phi(Base::B, rs.to_ambient(unit_vec(c.d.field(), r.dim(), a))), e}));
  YDModule y = make_yd(c, std::move(r), std::move(tau));
  y.tau_bar = inverse_coaction(c, y);
  return y;
}

BCA unit_bca(const DdaContext& c) {
  YDModule y = unit_yd(c);
  HModuleAlgebra q = make_module_algebra(c, "R", y.z, c.get(Base::R).sub.algebra);
  return BCA{std::move(q), std::move(y)};
}

void check_bca(const DdaContext& c, const BCA& b, Report& report, const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dq = b.q.dim();
  check_module_algebra(c, b.q, report, prefix);
  check_yd(c, b.yd, report, prefix);
  std::vector<Vec> lifts = lifted_columns(b.yd.hz, b.yd.tau);
  const auto& Q = b.q.algebra;
  std::string wm, wc;
  for (std::size_t a = 0; a < dq; ++a)
    for (std::size_t x = 0; x < dq; ++x) {
      Vec rhs = zero_vec(f, n * dq);
      for (const auto& [h, u, s] : terms(lifts[a], dq))
        for (const auto& [h2, u2, s2] : terms(lifts[x], dq))
          axpy(rhs, s * s2, kron(c.d.horizontal.product(h2, h), Q.product(u, u2)));
      if (wm.empty() && b.yd.tau.apply(Q.product(a, x)) != b.yd.hz.project(rhs))
        wm = "q = b" + std::to_string(a) + ", q' = b" + std::to_string(x);
      Vec bc = zero_vec(f, dq);
      for (const auto& [h, u, s] : terms(lifts[a], dq))
        axpy(bc, s, Q.mul(b.q.module.action(c.d.horizontal.basis(h)).column(x), Q.basis(u)));
      if (wc.empty() && bc != Q.product(a, x)) wc = "q = b" + std::to_string(a) + ", q' = b" + std::to_string(x);
    }
  report.record(prefix + ".comodule_algebra", wm.empty(), "(qq')<-1> (x) (qq')<0> = q'<-1> * q<-1> (x) q<0> q'<0>", wm);
  std::string wu;
  const SubAlgebra& rs = c.get(Base::R).sub;
  for (std::size_t r = 0; r < rs.dim() && wu.empty(); ++r) {
    Vec er = unit_vec(f, rs.dim(), r);
    if (b.yd.tau.apply(b.q.eta.apply(er)) != b.yd.hz.pure({c.phi(Base::B, rs.to_ambient(er)), b.q.one()}))
      wu = at("fails on R basis", r);
  }
  report.record(prefix + ".comodule_unit", wu.empty(), "eta(r)<-1> (x) eta(r)<0> = Phi_B(r) (x) 1", wu);
  report.record(prefix + ".braided_commutative", wc.empty(), "(q' < q<-1>) q<0> = q q'", wc);
}

CentralizerBCA centralizer_bca(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g) {
  if (!(g.cap_gamma_lower.rows() == g.cap_gamma_lower.cols() && rank(g.cap_gamma_lower) == g.cap_gamma_lower.cols()))
    throw std::invalid_argument("centralizer BCA needs a bijective Gamma_M");
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim();
  CentralizerBCA out;
  out.c_in_m = centralizer(m.algebra, g.ext.n_gens(), "c");
  const SubAlgebra& sub = out.c_in_m;
  const std::size_t dc = sub.dim();
  RightHModule mod{sub.algebra.space(), {}};
  for (std::size_t h = 0; h < n; ++h) {
    Matrix a = m.module.action(c.d.horizontal.basis(h)) * sub.embed;
    Matrix r(f, dc, dc);
    for (std::size_t j = 0; j < dc; ++j) {
      if (!sub.contains(a.column(j))) throw std::logic_error("centralizer is not an H-submodule");
      r.set_column(j, sub.coords(a.column(j)));
    }
    mod.act.push_back(std::move(r));
  }
  HModuleAlgebra q = make_module_algebra(c, m.name + "^N", mod, sub.algebra);

  TensorProduct hc = h_tensor_module(c, mod), ch = module_tensor_h(c, mod);
  Matrix into_hm = hc.space().descend(g.h_r_m.space().projection() * kron(Matrix::identity(f, n), sub.embed));
  Matrix into_mh = ch.space().descend(g.m_r_h.space().projection() * kron(sub.embed, Matrix::identity(f, n)));
  Matrix tau(f, hc.dim(), dc), bar(f, ch.dim(), dc);
  for (std::size_t j = 0; j < dc; ++j) {
    Vec cv = sub.to_ambient(unit_vec(f, dc, j));
    auto x = solve_linear(g.cap_gamma_lower, g.end_left.coords(m.algebra.left_mult(cv)));
    auto xc = x ? solve_linear(into_hm, *x) : std::nullopt;
    if (!xc) throw std::logic_error("Gamma_M^-1(left multiplication) is not in H (x)_R C");
    tau.set_column(j, *xc);
    auto y = solve_linear(g.cap_gamma_upper, g.end_right.coords(m.algebra.right_mult(cv)));
    auto yc = y ? solve_linear(into_mh, *y) : std::nullopt;
    if (!yc) throw std::logic_error("(Gamma^M)^-1(right multiplication) is not in C (x)_R H");
    bar.set_column(j, *yc);
  }
  YDModule yd = make_yd(c, mod, std::move(tau));
  try {
    yd.tau_bar = inverse_coaction(c, yd);
  } catch (const not_well_defined&) {
  }
  out.bca = BCA{std::move(q), std::move(yd)};
  out.tau_bar_galois = std::move(bar);
  return out;
}

void check_centralizer(const DdaContext& c, const HModuleAlgebra& m, const CentralizerBCA& cb, Report& report,
                       const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dm = m.dim(), dc = cb.bca.q.dim();
  const YDModule& y = cb.bca.yd;
  std::vector<Vec> lifts = lifted_columns(y.hz, y.tau);
  std::string wl;
  for (std::size_t j = 0; j < dc && wl.empty(); ++j) {
    Vec cv = cb.c_in_m.to_ambient(unit_vec(f, dc, j));
    for (std::size_t a = 0; a < dm && wl.empty(); ++a) {
      Vec sum = zero_vec(f, dm);
      for (const auto& [h, u, s] : terms(lifts[j], dc))
        axpy(sum, s, m.mul(m.module.action(c.d.horizontal.basis(h)).column(a), cb.c_in_m.to_ambient(unit_vec(f, dc, u))));
      if (sum != m.mul(cv, m.algebra.basis(a))) wl = "c = b" + std::to_string(j) + ", m = b" + std::to_string(a);
    }
  }
  report.record(prefix + ".tau_in_action", wl.empty(), "(m < c<-1>) c<0> = c m for all m in M", wl);
  report.record(prefix + ".tau_bar_defined", y.tau_bar.has_value(),
                "the dual-basis formula for the right coaction descends to H (x)_R C", "formula does not descend");
  if (!y.tau_bar) return;
  std::vector<Vec> bars = lifted_columns(y.zh, *y.tau_bar);
  std::string wr;
  for (std::size_t j = 0; j < dc && wr.empty(); ++j) {
    Vec cv = cb.c_in_m.to_ambient(unit_vec(f, dc, j));
    for (std::size_t a = 0; a < dm && wr.empty(); ++a) {
      Vec sum = zero_vec(f, dm);
      for (const auto& [u, h, s] : terms(bars[j], n))
        axpy(sum, s, m.mul(cb.c_in_m.to_ambient(unit_vec(f, dc, u)), m.module.action(c.d.horizontal.basis(h)).column(a)));
      if (sum != m.mul(m.algebra.basis(a), cv)) wr = "c = b" + std::to_string(j) + ", m = b" + std::to_string(a);
    }
  }
  report.record(prefix + ".tau_bar_in_action", wr.empty(), "c<0> (m < c<1>) = m c for all m in M", wr);
  report.record(prefix + ".tau_bar_matches_gamma_upper", *y.tau_bar == cb.tau_bar_galois,
                "dual-basis right coaction equals (Gamma^M)^-1 of right multiplication", "coactions differ");
}

ForkMaps fork_maps(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g, const CentralizerBCA& cb) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dm = m.dim();
  const SubAlgebra& sub = cb.c_in_m;
  const RightHModule& cmod = cb.bca.q.module;
  ForkMaps fm;
  fm.end = bimodule_end(g.ext);
  const auto& eb = fm.end.basis();
  const std::size_t de = eb.size();
  auto on_end = [&](const std::function<Matrix(const Matrix&)>& op) {
    Matrix r(f, de, de);
    for (std::size_t k = 0; k < de; ++k) r.set_column(k, fm.end.coords(op(eb[k])));
    return r;
  };
  TensorJunction jc;
  for (const auto& cg : algebra_generators(sub.algebra)) {
    Vec cv = sub.to_ambient(cg);
    Matrix rc = m.algebra.right_mult(cv), lc = m.algebra.left_mult(cv);
    jc.right_ops.push_back(on_end([&](const Matrix& a) { return rc * a; }));
    jc.left_ops.push_back(on_end([&](const Matrix& a) { return lc * a; }));
  }
  fm.e_c_e = TensorProduct(f, {de, de}, {jc});
  fm.h_h_c = TensorProduct(f, {n, n, sub.dim()}, {hh_junction(c), hm_junction(c, cmod)});
  fm.mnm = g.mnm;

  ActionSet x{fm.mnm.dim(), {}}, y{dm, {}};
  Matrix id = Matrix::identity(f, dm);
  for (const auto& nv : g.ext.n_gens()) {
    x.ops.push_back(on_quotient(fm.mnm, kron(m.algebra.left_mult(nv), id)));
    y.ops.push_back(m.algebra.left_mult(nv));
    x.ops.push_back(on_quotient(fm.mnm, kron(id, m.algebra.right_mult(nv))));
    y.ops.push_back(m.algebra.right_mult(nv));
  }
  fm.hom = hom_space(f, x, y);
  // A bilinear map on M x M, evaluated on the basis of M (x)_N M.
  auto on_mnm = [&](const std::function<Vec(std::size_t, std::size_t)>& b) {
    Matrix r(f, dm, fm.mnm.dim());
    for (std::size_t j = 0; j < fm.mnm.dim(); ++j) {
      auto t = fm.mnm.ambient_tuple(fm.mnm.space().basis()[j]);
      r.set_column(j, b(t[0], t[1]));
    }
    return fm.hom.coords(r);
  };
  fm.fork = fm.e_c_e.matrix_of(
      [&](const std::vector<std::size_t>& t) {
        return on_mnm([&](std::size_t a, std::size_t b) { return m.mul(eb[t[0]].column(a), eb[t[1]].column(b)); });
      },
      fm.hom.dim(), true);
  fm.fine_fork = fm.h_h_c.matrix_of(
      [&](const std::vector<std::size_t>& t) {
        Matrix ah = m.module.action(c.d.horizontal.basis(t[0])), ah2 = m.module.action(c.d.horizontal.basis(t[1]));
        Vec cv = sub.to_ambient(unit_vec(f, sub.dim(), t[2]));
        return on_mnm([&](std::size_t a, std::size_t b) { return m.mul(m.mul(ah.column(a), ah2.column(b)), cv); });
      },
      fm.hom.dim(), true);
  return fm;
}

EndoHopfAlgebroid endo_hopf_algebroid(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                      const CentralizerBCA& cb, Report& report, const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dm = m.dim();
  const SubAlgebra& sub = cb.c_in_m;
  const std::size_t dc = sub.dim();
  EndoHopfAlgebroid eh;
  eh.fork = fork_maps(c, m, g, cb);
  const ForkMaps& fm = eh.fork;
  const auto& eb = fm.end.basis();
  const std::size_t de = eb.size();
  auto bij = [](const Matrix& x) { return x.rows() == x.cols() && rank(x) == x.cols(); };
  report.record(prefix + ".fork_iso", bij(fm.fork), "E (x)_C E -> Hom_{N-N}(M (x)_N M, M) is bijective",
                std::to_string(fm.fork.cols()) + " -> " + std::to_string(fm.fork.rows()) + ", rank " + std::to_string(rank(fm.fork)));
  report.record(prefix + ".fine_fork_iso", bij(fm.fine_fork), "H (x)_R H (x)_R C -> Hom_{N-N}(M (x)_N M, M) is bijective",
                std::to_string(fm.fine_fork.cols()) + " -> " + std::to_string(fm.fine_fork.rows()) + ", rank " +
                    std::to_string(rank(fm.fine_fork)));

  eh.s_e = Matrix(f, de, dc);
  eh.t_e = Matrix(f, de, dc);
  for (std::size_t j = 0; j < dc; ++j) {
    Vec cv = sub.to_ambient(unit_vec(f, dc, j));
    eh.s_e.set_column(j, fm.end.coords(m.algebra.right_mult(cv)));
    eh.t_e.set_column(j, fm.end.coords(m.algebra.left_mult(cv)));
  }
  eh.eps_e = Matrix(f, dc, de);
  for (std::size_t k = 0; k < de; ++k) eh.eps_e.set_column(k, sub.coords(eb[k].apply(m.one())));

  eh.delta_e = Matrix(f, fm.e_c_e.dim(), de);
  std::string wd;
  for (std::size_t k = 0; k < de; ++k) {
    Matrix r(f, dm, fm.mnm.dim());
    for (std::size_t j = 0; j < fm.mnm.dim(); ++j) {
      auto t = fm.mnm.ambient_tuple(fm.mnm.space().basis()[j]);
      r.set_column(j, eb[k].apply(m.mul(m.algebra.basis(t[0]), m.algebra.basis(t[1]))));
    }
    auto x = solve_linear(fm.fork, fm.hom.coords(r));
    if (!x) {
      if (wd.empty()) wd = at("no solution for E basis", k);
      continue;
    }
    eh.delta_e.set_column(k, *x);
  }
  report.record(prefix + ".delta_e_solved", wd.empty(), "a[1](m) a[2](m') = a(mm') has a solution in E (x)_C E", wd);

  eh.h_smash_c = smash_product(c, cb.bca.q);
  const TensorProduct& hc = eh.h_smash_c.tensor;
  auto gamma_of = [&](std::size_t h, const Vec& cv) {
    return m.algebra.right_mult(cv) * m.module.action(c.d.horizontal.basis(h));
  };
  eh.gamma = hc.matrix_of(
      [&](const std::vector<std::size_t>& t) { return fm.end.coords(gamma_of(t[0], sub.to_ambient(unit_vec(f, dc, t[1])))); },
      de, true);
  report.record(prefix + ".gamma_iso", bij(eh.gamma), "Gamma_M restricts to a bijection H#C -> E",
                std::to_string(eh.gamma.cols()) + " -> " + std::to_string(eh.gamma.rows()));

  // Gamma(xy) = Gamma(y) Gamma(x) as maps on M.
  const StructAlgebra& G = eh.h_smash_c.algebra;
  std::string wm;
  for (std::size_t a = 0; a < G.dim() && wm.empty(); ++a)
    for (std::size_t b = 0; b < G.dim() && wm.empty(); ++b)
      if (fm.end.element(eh.gamma.apply(G.product(a, b))) !=
          fm.end.element(eh.gamma.column(b)) * fm.end.element(eh.gamma.column(a)))
        wm = "basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
  report.record(prefix + ".gamma_multiplicative", wm.empty(), "Gamma(xy) = Gamma(y) o Gamma(x)", wm);

  Matrix s_g(f, hc.dim(), dc);
  for (std::size_t j = 0; j < dc; ++j) s_g.set_column(j, hc.pure({c.d.i(), unit_vec(f, dc, j)}));
  report.record(prefix + ".gamma_source", eh.gamma * s_g == eh.s_e, "Gamma(i#c) = right multiplication by c",
                "source maps differ");
  report.record(prefix + ".gamma_target", eh.gamma * cb.bca.yd.tau == eh.t_e,
                "Gamma(c<-1>#c<0>) = left multiplication by c", "target maps differ");

  Matrix eps_g = hc.matrix_of(
      [&](const std::vector<std::size_t>& t) {
        Vec r = c.get(Base::R).sub.coords(c.phi(Base::R, c.d.horizontal.basis(t[0])));
        return cb.bca.q.mul(cb.bca.q.eta.apply(r), unit_vec(f, dc, t[1]));
      },
      dc, true);
  report.record(prefix + ".gamma_counit", eh.eps_e * eh.gamma == eps_g, "Gamma(h#c)(1) = eta(Phi_R(h)) c",
                "counits differ");

  // (Gamma (x) Gamma) Delta_G = Delta_E Gamma.
  std::string wc;
  for (std::size_t j = 0; j < hc.dim() && wc.empty(); ++j) {
    auto t = hc.ambient_tuple(hc.space().basis()[j]);
    Vec amb = zero_vec(f, de * de);
    Vec cv = sub.to_ambient(unit_vec(f, dc, t[1]));
    for (const auto& [p, q] : c.delta(Base::R, c.d.horizontal.basis(t[0]))) {
      Matrix gp(f, dm, dm), gq(f, dm, dm);
      for (std::size_t h = 0; h < n; ++h) {
        if (!p[h].is_zero()) gp.add_scaled(p[h], gamma_of(h, m.one()));
        if (!q[h].is_zero()) gq.add_scaled(q[h], gamma_of(h, cv));
      }
      amb = add(amb, kron(fm.end.coords(gp), fm.end.coords(gq)));
    }
    if (fm.e_c_e.project(amb) != eh.delta_e.apply(eh.gamma.column(j))) wc = at("fails on H#C basis", j);
  }
  report.record(prefix + ".gamma_comultiplicative", wc.empty(),
                "Delta_E solved from the fork map equals the transported smash coproduct", wc);
  return eh;
}

ScalarExtension scalar_extension(const DdaContext& c, const BCA& q) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dq = q.q.dim();
  const auto& Qa = q.q.algebra;
  ScalarExtension se;
  se.smash = smash_product(c, q.q);
  const TensorProduct& t = se.smash.tensor;
  const StructAlgebra& G = se.smash.algebra;
  const std::size_t dg = G.dim();

  Bialgebroid& b = se.bialgebroid;
  b.name = "H#Q";
  b.left = false;
  b.total = G;
  b.base = Qa;
  b.s = Matrix(f, dg, dq);
  for (std::size_t a = 0; a < dq; ++a) b.s.set_column(a, t.pure({c.d.i(), Qa.basis(a)}));
  b.t = q.yd.tau;
  b.tensor = bialgebroid_tensor(G, Qa, b.s, b.t, false);
  Matrix delta_amb(f, b.tensor.dim(), n * dq), eps_amb(f, dq, n * dq);
  for (std::size_t h = 0; h < n; ++h) {
    auto pairs = c.delta(Base::R, c.d.horizontal.basis(h));
    Vec r = c.get(Base::R).sub.coords(c.phi(Base::R, c.d.horizontal.basis(h)));
    Vec er = q.q.eta.apply(r);
    for (std::size_t a = 0; a < dq; ++a) {
      Vec amb = zero_vec(f, dg * dg);
      for (const auto& [p, pp] : pairs) amb = add(amb, kron(t.pure({p, q.q.one()}), t.pure({pp, Qa.basis(a)})));
      delta_amb.set_column(h * dq + a, b.tensor.project(amb));
      eps_amb.set_column(h * dq + a, Qa.mul(er, Qa.basis(a)));
    }
  }
  b.delta = t.space().descend(delta_amb);
  b.eps = t.space().descend(eps_amb);

  se.iota = Matrix(f, dg, n);
  for (std::size_t h = 0; h < n; ++h) se.iota.set_column(h, t.pure({c.d.horizontal.basis(h), q.q.one()}));

  std::vector<Vec> lifts = lifted_columns(q.yd.hz, q.yd.tau);
  auto vertical = [&](std::size_t x, std::size_t y) {
    std::size_t a = x / dq, qa = x % dq, a2 = y / dq, qb = y % dq;
    Vec out = zero_vec(f, n * dq);
    for (const auto& [h, w, s] : terms(lifts[qa], dq))
      axpy(out, s, kron(c.d.circ(c.d.vertical.basis(a), c.d.horizontal.product(a2, h)), Qa.product(w, qb)));
    return out;
  };
  StructAlgebra v = tensor_algebra(t, vertical, kron(c.d.e(), q.q.one()), "s", true);
  se.e_g = t.pure({c.d.e(), q.q.one()});
  se.dda = DoubleAlgebra{std::move(v), G};
  return se;
}

void check_scalar_extension(const DdaContext& c, const BCA& q, const ScalarExtension& s, Report& report,
                            const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim();
  const Bialgebroid& b = s.bialgebroid;
  const StructAlgebra& G = b.total;
  check_bialgebroid(b, report, prefix + ".bialgebroid");
  check_algebra_map(c.d.horizontal, G, s.iota, false, report, prefix + ".iota_algebra_map");
  const SubAlgebra& rs = c.get(Base::R).sub;
  std::string ws, wt, we, wd;
  for (std::size_t r = 0; r < rs.dim(); ++r) {
    Vec er = unit_vec(f, rs.dim(), r), ra = rs.to_ambient(er), eta = q.q.eta.apply(er);
    if (ws.empty() && s.iota.apply(c.phi(Base::T, ra)) != b.s.apply(eta)) ws = at("fails on R basis", r);
    if (wt.empty() && s.iota.apply(c.phi(Base::B, ra)) != b.t.apply(eta)) wt = at("fails on R basis", r);
  }
  for (std::size_t h = 0; h < n; ++h) {
    Vec hv = c.d.horizontal.basis(h);
    if (we.empty() && b.eps.apply(s.iota.apply(hv)) != q.q.eta.apply(rs.coords(c.phi(Base::R, hv))))
      we = at("fails on H basis", h);
    Vec amb = zero_vec(f, G.dim() * G.dim());
    for (const auto& [p, pp] : c.delta(Base::R, hv)) amb = add(amb, kron(s.iota.apply(p), s.iota.apply(pp)));
    if (wd.empty() && b.tensor.project(amb) != b.delta.apply(s.iota.apply(hv))) wd = at("fails on H basis", h);
  }
  report.record(prefix + ".iota_source", ws.empty(), "iota(Phi_T(r)) = s_G(eta(r))", ws);
  report.record(prefix + ".iota_target", wt.empty(), "iota(Phi_B(r)) = t_G(eta(r))", wt);
  report.record(prefix + ".iota_counit", we.empty(), "eps_G(iota(h)) = eta(Phi_R(h))", we);
  report.record(prefix + ".iota_comultiplicative", wd.empty(), "Delta_G(iota(h)) = iota(h[1]) (x)_Q iota(h[2])", wd);

  DdaAnalysis a = analyze_double_algebra(s.dda);
  report.merge(a.report, prefix + ".smash_dda.");
  report.record(prefix + ".smash_dda_valid", a.valid(), "A#Q is a distributive double algebra",
                std::to_string(a.report.failures()) + " failing checks");
  report.record(prefix + ".e_g_vertical_unit", s.dda.e() == s.e_g, "e#1 is the vertical unit of A#Q",
                "vertical unit differs from e#1");
}

void check_tensor_with_q_strong_monoidal(const DdaContext& c, const BCA& q, Report& report,
                                         const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t dq = q.q.dim();
  const auto& Qa = q.q.algebra;
  std::vector<Vec> lifts = lifted_columns(q.yd.hz, q.yd.tau);
  std::vector<Vec> qgens = algebra_generators(Qa);

  RightHModule r = trivial_module(c), h = regular_module(c);
  RightHModule hh = tensor_module(c, h, h, nullptr);
  std::vector<std::pair<std::string, RightHModule>> objects{{"R", r}, {"H", h}, {"HH", hh}};

  struct WithQ {
    TensorProduct t;
    std::vector<Matrix> right_q, left_q;  // by generators of Q
  };
  auto with_q = [&](const RightHModule& y) {
    WithQ w{module_tensor(c, y, q.q.module), {}, {}};
    Matrix id_y = Matrix::identity(f, y.dim());
    for (const auto& g : qgens) {
      w.right_q.push_back(on_quotient(w.t, kron(id_y, Qa.right_mult(g))));
      Vec tg = q.yd.hz.lift(q.yd.tau.apply(g));
      Matrix op(f, y.dim() * dq, y.dim() * dq);
      for (const auto& [hh_, u, s] : terms(tg, dq))
        op.add_scaled(s, kron(y.action(c.d.horizontal.basis(hh_)), Qa.left(u)));
      w.left_q.push_back(on_quotient(w.t, op));
    }
    return w;
  };

  std::string w;
  for (const auto& [ny, y] : objects)
    for (const auto& [ny2, y2] : objects) {
      WithQ a = with_q(y), b = with_q(y2);
      TensorProduct x(f, {a.t.dim(), b.t.dim()}, {TensorJunction{a.right_q, b.left_q}});
      TensorProduct yy;
      RightHModule ymod = tensor_module(c, y, y2, &yy);
      TensorProduct target = module_tensor(c, ymod, q.q.module);
      Matrix id_y = Matrix::identity(f, y.dim()), id_y2 = Matrix::identity(f, y2.dim());
      Matrix fwd = x.matrix_of(
          [&](const std::vector<std::size_t>& t) {
            auto u = a.t.ambient_tuple(a.t.space().basis()[t[0]]);
            auto v = b.t.ambient_tuple(b.t.space().basis()[t[1]]);
            Vec out = zero_vec(f, target.ambient_dim());
            for (const auto& [hh_, wq, s] : terms(lifts[u[1]], dq)) {
              Vec yv = yy.project(kron(id_y.column(u[0]), y2.action(c.d.horizontal.basis(hh_)).column(v[0])));
              axpy(out, s, kron(yv, Qa.product(wq, v[1])));
            }
            return target.project(out);
          },
          target.dim(), true);
      Matrix back = target.matrix_of(
          [&](const std::vector<std::size_t>& t) {
            auto yi = yy.ambient_tuple(yy.space().basis()[t[0]]);
            return x.project(kron(a.t.project(kron(id_y.column(yi[0]), q.q.one())),
                                  b.t.project(kron(id_y2.column(yi[1]), Qa.basis(t[1])))));
          },
          x.dim(), true);
      bool ok = fwd.rows() == fwd.cols() && fwd * back == Matrix::identity(f, target.dim()) &&
                back * fwd == Matrix::identity(f, x.dim());
      if (!ok && w.empty()) w = "Y = " + ny + ", Y' = " + ny2;
    }
  report.record(prefix + ".tensor_with_q_strong_monoidal", w.empty(),
                "(Y (x)_R Q) (x)_Q (Y' (x)_R Q) -> (Y (x)_R Y') (x)_R Q is inverted by (y (x) y') (x) q -> (y (x) 1) (x) (y' (x) q) for Y, Y' in {R, H, H (x)_R H}",
                w);
  TensorProduct rq = module_tensor(c, r, q.q.module);
  Vec e = c.get(Base::R).sub.coords(c.d.e());
  Matrix unit(f, rq.dim(), dq);
  for (std::size_t a = 0; a < dq; ++a) unit.set_column(a, rq.pure({e, Qa.basis(a)}));
  report.record(prefix + ".tensor_with_q_unit", unit.rows() == unit.cols() && rank(unit) == dq,
                "q -> e (x) q is a bijection Q -> R (x)_R Q", "not bijective");
}

TransitivityResult bca_transitivity(const DdaContext& c, const BCA& q, const ScalarExtension& s,
                                    const DdaContext& cg, const BCA& p, Report& report, const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dp = p.q.dim(), dq = q.q.dim();
  const TensorProduct& gt = s.smash.tensor;
  const SubAlgebra& rg = cg.get(Base::R).sub;
  // Q -> R_G, q -> e#q, then eta_P.
  Matrix q_to_p(f, dp, dq);
  for (std::size_t a = 0; a < dq; ++a)
    q_to_p.set_column(a, p.q.eta.apply(rg.coords(gt.pure({c.d.e(), q.q.algebra.basis(a)}))));

  RightHModule mod{p.q.module.space, {}};
  for (std::size_t h = 0; h < n; ++h) mod.act.push_back(p.q.module.action(s.iota.column(h)));
  Matrix eta = q_to_p * q.q.eta;
  HModuleAlgebra ph{p.q.name + "/H", mod, p.q.algebra, eta};

  TensorProduct hp = h_tensor_module(c, mod);
  const std::size_t dg = gt.dim();
  Matrix amb(f, hp.dim(), dg * dp);
  for (std::size_t g = 0; g < dg; ++g) {
    auto t = gt.ambient_tuple(gt.space().basis()[g]);
    Vec qp = q_to_p.column(t[1]);
    for (std::size_t w = 0; w < dp; ++w)
      amb.set_column(g * dp + w, hp.project(kron(c.d.horizontal.basis(t[0]), p.q.mul(qp, p.q.algebra.basis(w)))));
  }
  Matrix tau = p.yd.hz.space().descend(amb) * p.yd.tau;
  YDModule yd = make_yd(c, mod, std::move(tau));
  try {
    yd.tau_bar = inverse_coaction(c, yd);
  } catch (const not_well_defined&) {
  }
  TransitivityResult out{BCA{std::move(ph), std::move(yd)}, {}};
  check_bca(c, out.p_over_h, report, prefix + ".p_over_h");

  SmashAlgebra hpp = smash_product(c, out.p_over_h.q);
  SmashAlgebra gpp = smash_product(cg, p.q);
  out.iso = hpp.tensor.matrix_of(
      [&](const std::vector<std::size_t>& t) { return gpp.tensor.pure({s.iota.column(t[0]), p.q.algebra.basis(t[1])}); },
      gpp.tensor.dim(), true);
  bool bij = out.iso.rows() == out.iso.cols() && rank(out.iso) == out.iso.cols();
  report.record(prefix + ".smash_iso_bijective", bij, "H#P -> (H#Q)#P, h#p -> (h#1)#p is bijective",
                std::to_string(out.iso.cols()) + " -> " + std::to_string(out.iso.rows()));
  if (bij) check_algebra_map(hpp.algebra, gpp.algebra, out.iso, false, report, prefix + ".smash_iso_algebra_map");
  return out;
}

}  // namespace ddalab
