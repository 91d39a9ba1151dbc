#include "ddalab/representation.hpp"

namespace ddalab {

namespace {

Matrix combo(const Field& f, std::size_t dim, const std::vector<Matrix>& ops, const Vec& coeffs) {
  Matrix out(f, dim, dim);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) out.add_scaled(coeffs[k], ops[k]);
  return out;
}

// Action of a base element g (given in A) on M through the base's own action matrices.
Matrix base_action(const DdaContext& c, Base x, const std::vector<Matrix>& base_act, std::size_t dim, const Vec& g) {
  return combo(c.d.field(), dim, base_act, c.get(x).sub.coords(g));
}

std::vector<Vec> span_basis(const Field& f, std::size_t n, const std::vector<Vec>& vs) {
  SpanBuilder s(f, n);
  for (const auto& v : vs) s.add(v);
  return s.canonical_basis();
}

bool same_span(const Field& f, std::size_t n, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::size_t r = rank(f, n, all);
  return r == rank(f, n, a) && r == rank(f, n, b);
}

// Kernel of a stack of square matrices.
std::vector<Vec> common_kernel(const Field& f, std::size_t n, const std::vector<Matrix>& ms) {
  std::vector<Vec> rows;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return span_basis(f, n, kernel_of_rows(f, n, rows));
}

}  // namespace

Matrix RightHModule::action(const Vec& h) const { return combo(field(), dim(), act, h); }

void check_module(const DdaContext& c, const RightHModule& m, Report& report, const std::string& prefix) {
  const StructAlgebra& H = c.d.horizontal;
  std::string w;
  if (m.action(H.unit()) != Matrix::identity(m.field(), m.dim())) w = "m < i != m";
  for (std::size_t h = 0; h < H.dim() && w.empty(); ++h)
    for (std::size_t k = 0; k < H.dim() && w.empty(); ++k)
      if (m.action(H.product(h, k)) != m.act[k] * m.act[h])
        w = "(m < b" + std::to_string(h) + ") < b" + std::to_string(k) + " != m < (b" + std::to_string(h) + " * b" +
            std::to_string(k) + ")";
  report.record(prefix + ".module", w.empty(), "associative unital right H-action", w);
}

RightHModule regular_module(const DdaContext& c) {
  RightHModule m{c.d.space(), {}};
  for (std::size_t h = 0; h < c.d.dim(); ++h) m.act.push_back(c.d.horizontal.right(h));
  return m;
}

RightHModule trivial_module(const DdaContext& c) {
  const SubAlgebra& R = c.get(Base::R).sub;
  RightHModule m{R.algebra.space(), {}};
  for (std::size_t h = 0; h < c.d.dim(); ++h) {
    Matrix a(c.d.field(), R.dim(), R.dim());
    for (std::size_t k = 0; k < R.dim(); ++k)
      a.set_column(k, R.coords(c.d.star(R.embed.column(k), c.d.horizontal.basis(h))));
    m.act.push_back(std::move(a));
  }
  return m;
}

Matrix r_generator_action(const DdaContext& c, const RightHModule& m, Base via, const Vec& r) {
  return m.action(c.phi(via, r));
}

TensorProduct module_tensor_h(const DdaContext& c, const RightHModule& m) {
  TensorJunction jn;
  for (const auto& r : c.get(Base::R).gens) {
    jn.right_ops.push_back(m.action(c.phi(Base::T, r)));
    jn.left_ops.push_back(c.d.horizontal.right_mult(c.phi(Base::B, r)));
  }
  return TensorProduct(c.d.field(), {m.dim(), c.d.dim()}, {jn});
}

TensorProduct h_tensor_module(const DdaContext& c, const RightHModule& m) {
  TensorJunction jn;
  for (const auto& r : c.get(Base::R).gens) {
    jn.right_ops.push_back(c.d.horizontal.right_mult(c.phi(Base::T, r)));
    jn.left_ops.push_back(m.action(c.phi(Base::B, r)));
  }
  return TensorProduct(c.d.field(), {c.d.dim(), m.dim()}, {jn});
}

TensorProduct module_tensor(const DdaContext& c, const RightHModule& m, const RightHModule& m2) {
  TensorJunction jn;
  for (const auto& r : c.get(Base::R).gens) {
    jn.right_ops.push_back(m.action(c.phi(Base::T, r)));
    jn.left_ops.push_back(m2.action(c.phi(Base::B, r)));
  }
  return TensorProduct(c.d.field(), {m.dim(), m2.dim()}, {jn});
}

RightHModule tensor_module(const DdaContext& c, const RightHModule& m, const RightHModule& m2, TensorProduct* out) {
  TensorProduct t = module_tensor(c, m, m2);
  RightHModule res{FinSpace::numbered(c.d.field(), t.dim(), "t"), {}};
  for (std::size_t h = 0; h < c.d.dim(); ++h) {
    Matrix amb(c.d.field(), m.dim() * m2.dim(), m.dim() * m2.dim());
    for (const auto& [p, q] : c.delta(Base::R, c.d.horizontal.basis(h))) amb += kron(m.action(p), m2.action(q));
    res.act.push_back(t.space().descend(t.space().projection() * amb));
  }
  if (out) *out = std::move(t);
  return res;
}

TensorProduct comodule_tensor(const DdaContext& c, Base x, const std::vector<Matrix>& base_act, std::size_t dim) {
  TensorJunction jn;
  for (const auto& g : c.get(x).gens) {
    jn.right_ops.push_back(base_action(c, x, base_act, dim, g));
    jn.left_ops.push_back(c.d.horizontal.left_mult(g));
  }
  return TensorProduct(c.d.field(), {dim, c.d.dim()}, {jn});
}

RightVComodule coactions_from_action(const DdaContext& c, const RightHModule& m) {
  RightVComodule v;
  v.space = m.space;
  for (const auto& t : c.get(Base::T).sub.ambient_basis()) v.t_act.push_back(m.action(t));
  for (const auto& b : c.get(Base::B).sub.ambient_basis()) v.b_act.push_back(m.action(b));
  v.over_t = comodule_tensor(c, Base::T, v.t_act, m.dim());
  v.over_b = comodule_tensor(c, Base::B, v.b_act, m.dim());
  auto coaction = [&](Base x, const TensorProduct& t) {
    Matrix out(m.field(), t.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Vec amb = zero_vec(m.field(), m.dim() * c.d.dim());
      for (const auto& [u, w] : c.get(x).frob.pairs) {
        Vec k = kron(m.action(u).column(j), w);
        for (std::size_t i = 0; i < k.size(); ++i) amb[i] += k[i];
      }
      out.set_column(j, t.project(amb));
    }
    return out;
  };
  v.delta_t = coaction(Base::T, v.over_t);
  v.delta_b = coaction(Base::B, v.over_b);
  return v;
}

RightHModule action_from_coactions(const DdaContext& c, const RightVComodule& v) {
  const std::size_t n = c.d.dim(), dm = v.dim();
  RightHModule out{v.space, {}};
  for (std::size_t h = 0; h < n; ++h) {
    Vec hv = c.d.horizontal.basis(h);
    auto via = [&](Base x, const std::vector<Matrix>& act, const TensorProduct& t, const Matrix& delta) {
      Matrix amb(c.d.field(), dm, dm * n);
      for (std::size_t a = 0; a < n; ++a) {
        Matrix op = base_action(c, x, act, dm, c.phi(x, c.d.star(c.d.horizontal.basis(a), hv)));
        for (std::size_t mi = 0; mi < dm; ++mi) amb.set_column(mi * n + a, op.column(mi));
      }
      return t.space().descend(amb) * delta;
    };
    Matrix ab = via(Base::B, v.b_act, v.over_b, v.delta_b);
    Matrix at = via(Base::T, v.t_act, v.over_t, v.delta_t);
    if (ab != at)
      throw coaction_mismatch("the two coactions induce different actions of basis element " + std::to_string(h) +
                              ": " + ab.to_string() + " vs " + at.to_string());
    out.act.push_back(std::move(ab));
  }
  return out;
}

void check_comodule(const DdaContext& c, const RightVComodule& v, Report& report, const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dm = v.dim();
  auto junction = [&](Base x, bool on_module, const std::vector<Matrix>& act) {
    TensorJunction jn;
    for (const auto& g : c.get(x).gens) {
      jn.right_ops.push_back(on_module ? base_action(c, x, act, dm, g) : c.d.horizontal.right_mult(g));
      jn.left_ops.push_back(c.d.horizontal.left_mult(g));
    }
    return jn;
  };
  struct Side {
    Base x;
    const std::vector<Matrix>& act;
    const TensorProduct& t;
    const Matrix& delta;
  };
  const Side sides[] = {{Base::T, v.t_act, v.over_t, v.delta_t}, {Base::B, v.b_act, v.over_b, v.delta_b}};
  auto lifted_delta = [&](const Side& s, std::size_t mi) { return s.t.lift(s.delta.column(mi)); };
  auto lifted_comul = [&](Base x, std::size_t a) {
    return c.get(x).frob.tensor.lift(c.comul.get(x).column(a));
  };

  for (const auto& s : sides) {
    TensorProduct triple(f, {dm, n, n}, {junction(s.x, true, s.act), junction(s.x, false, s.act)});
    std::string coassoc, counit;
    for (std::size_t m = 0; m < dm; ++m) {
      Vec d = lifted_delta(s, m);
      Vec lhs = zero_vec(f, dm * n * n), rhs = lhs, cu = zero_vec(f, dm);
      for (std::size_t mi = 0; mi < dm; ++mi)
        for (std::size_t a = 0; a < n; ++a) {
          const Scalar& co = d[mi * n + a];
          if (co.is_zero()) continue;
          axpy(lhs, co, kron(lifted_delta(s, mi), c.d.horizontal.basis(a)));
          axpy(rhs, co, kron(unit_vec(f, dm, mi), lifted_comul(s.x, a)));
          axpy(cu, co, base_action(c, s.x, s.act, dm, c.phi(s.x, c.d.horizontal.basis(a))).column(mi));
        }
      if (coassoc.empty() && triple.project(lhs) != triple.project(rhs)) coassoc = "element " + std::to_string(m);
      if (counit.empty() && cu != unit_vec(f, dm, m)) counit = "element " + std::to_string(m) + " -> " + to_string(cu);
    }
    const std::string id = prefix + ".coaction_" + base_name(s.x);
    report.record(id + ".coassociative", coassoc.empty(), "coaction is coassociative", coassoc);
    report.record(id + ".counit", counit.empty(), "coaction is counital", counit);
  }

  // Mixed laws: first coaction applied after the second on the module factor, versus
  // the comultiplication of the first base applied to the coalgebra factor.
  for (int k = 0; k < 2; ++k) {
    const Side& outer = sides[k];      // applied first to m
    const Side& inner = sides[1 - k];  // applied to m(0)
    TensorProduct triple(f, {dm, n, n}, {junction(inner.x, true, inner.act), junction(outer.x, false, outer.act)});
    std::string w;
    for (std::size_t m = 0; m < dm && w.empty(); ++m) {
      Vec lhs = zero_vec(f, dm * n * n), rhs = lhs;
      Vec d1 = lifted_delta(outer, m), d2 = lifted_delta(inner, m);
      for (std::size_t mi = 0; mi < dm; ++mi)
        for (std::size_t a = 0; a < n; ++a) {
          if (!d1[mi * n + a].is_zero())
            axpy(lhs, d1[mi * n + a], kron(lifted_delta(inner, mi), c.d.horizontal.basis(a)));
          if (!d2[mi * n + a].is_zero())
            axpy(rhs, d2[mi * n + a], kron(unit_vec(f, dm, mi), lifted_comul(outer.x, a)));
        }
      if (triple.project(lhs) != triple.project(rhs)) w = "element " + std::to_string(m);
    }
    report.record(prefix + (k == 0 ? ".mixed_coassociativity_B_T" : ".mixed_coassociativity_T_B"), w.empty(),
                  "mixed coassociativity of the two coactions", w);
  }
}

std::vector<Vec> invariants(const DdaContext& c, const RightHModule& m) {
  std::vector<Matrix> ds;
  for (std::size_t h = 0; h < c.d.dim(); ++h) {
    Vec hv = c.d.horizontal.basis(h);
    ds.push_back(m.act[h] - m.action(c.phi(Base::T, c.phi(Base::R, hv))));
  }
  return common_kernel(m.field(), m.dim(), ds);
}

void check_invariants_agree(const DdaContext& c, const RightHModule& m, Report& report, const std::string& prefix) {
  const Field& f = m.field();
  std::vector<Vec> inv = invariants(c, m);
  std::vector<Matrix> ds;
  for (std::size_t h = 0; h < c.d.dim(); ++h) {
    Vec hv = c.d.horizontal.basis(h);
    ds.push_back(m.act[h] - m.action(c.phi(Base::B, c.phi(Base::R, hv))));
  }
  std::vector<Vec> inv_b = common_kernel(f, m.dim(), ds);
  RightVComodule v = coactions_from_action(c, m);
  auto coinv = [&](const TensorProduct& t, const Matrix& delta) {
    Matrix triv(f, t.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) triv.set_column(j, t.project(kron(unit_vec(f, m.dim(), j), c.d.e())));
    return common_kernel(f, m.dim(), {delta - triv});
  };
  std::vector<Vec> ct = coinv(v.over_t, v.delta_t), cb = coinv(v.over_b, v.delta_b);
  bool ok = same_span(f, m.dim(), inv, inv_b) && same_span(f, m.dim(), inv, ct) && same_span(f, m.dim(), inv, cb);
  report.record(prefix + ".invariants_agree", ok, "invariants via Phi_T Phi_R, Phi_B Phi_R and both coinvariant spaces coincide",
                "dims " + std::to_string(inv.size()) + ", " + std::to_string(inv_b.size()) + ", " +
                    std::to_string(ct.size()) + ", " + std::to_string(cb.size()));
}

Matrix default_eta(const DdaContext& c, const RightHModule& m, const StructAlgebra& a) {
  const SubAlgebra& R = c.get(Base::R).sub;
  Matrix eta(m.field(), m.dim(), R.dim());
  for (std::size_t k = 0; k < R.dim(); ++k) eta.set_column(k, m.apply(a.unit(), c.phi(Base::T, R.embed.column(k))));
  return eta;
}

HModuleAlgebra make_module_algebra(const DdaContext& c, std::string name, RightHModule m, StructAlgebra a) {
  Matrix eta = default_eta(c, m, a);
  return HModuleAlgebra{std::move(name), std::move(m), std::move(a), std::move(eta)};
}

void check_module_algebra(const DdaContext& c, const HModuleAlgebra& m, Report& report, const std::string& prefix) {
  const Field& f = m.field();
  const std::size_t dm = m.dim(), n = c.d.dim();
  check_algebra(m.algebra, report, prefix + ".algebra");
  check_module(c, m.module, report, prefix);
  if (!m.algebra.has_unit()) return;
  std::string w;
  for (std::size_t h = 0; h < n && w.empty(); ++h) {
    auto pairs = c.delta(Base::R, c.d.horizontal.basis(h));
    std::vector<std::pair<Matrix, Matrix>> ops;
    for (const auto& [p, q] : pairs) ops.emplace_back(m.module.action(p), m.module.action(q));
    for (std::size_t a = 0; a < dm && w.empty(); ++a)
      for (std::size_t b = 0; b < dm && w.empty(); ++b) {
        Vec lhs = m.module.act[h].apply(m.algebra.product(a, b)), rhs = zero_vec(f, dm);
        for (const auto& [p, q] : ops) rhs = add(rhs, m.mul(p.column(a), q.column(b)));
        if (lhs != rhs)
          w = "(m" + std::to_string(a) + " m" + std::to_string(b) + ") < h" + std::to_string(h) + ": " +
              to_string(lhs) + " vs " + to_string(rhs);
      }
  }
  report.record(prefix + ".module_algebra_law", w.empty(), "(mm') < h = (m < h[1])(m' < h[2])", w);

  const SubAlgebra& R = c.get(Base::R).sub;
  w.clear();
  for (std::size_t h = 0; h < n && w.empty(); ++h) {
    Vec hv = c.d.horizontal.basis(h);
    if (m.module.apply(m.one(), hv) != m.eta.apply(R.coords(c.phi(Base::R, hv)))) w = "basis " + std::to_string(h);
  }
  report.record(prefix + ".unit_action", w.empty(), "1 < h = eta(Phi_R(h))", w);
  check_algebra_map(R.algebra, m.algebra, m.eta, false, report, prefix + ".eta_algebra_map");

  w.clear();
  for (const auto& r : c.get(Base::R).gens) {
    Vec er = m.eta.apply(R.coords(r));
    Matrix right = m.algebra.right_mult(er), left = m.algebra.left_mult(er);
    if (right != m.module.action(c.phi(Base::T, r)) || left != m.module.action(c.phi(Base::B, r)))
      w = "generator " + to_string(r);
    if (!w.empty()) break;
  }
  report.record(prefix + ".eta_induces_bimodule", w.empty(),
                "m eta(r) = m < Phi_T(r) and eta(r) m = m < Phi_B(r)", w);
}

void check_comodule_algebra(const DdaContext& c, const HModuleAlgebra& m, const RightVComodule& v, Report& report,
                            const std::string& prefix) {
  const Field& f = m.field();
  const std::size_t dm = m.dim(), n = c.d.dim();
  struct Side {
    const char* name;
    const TensorProduct& t;
    const Matrix& delta;
  };
  for (const Side& s : {Side{"T", v.over_t, v.delta_t}, Side{"B", v.over_b, v.delta_b}}) {
    std::vector<Vec> lifts;
    for (std::size_t a = 0; a < dm; ++a) lifts.push_back(s.t.lift(s.delta.column(a)));
    std::string w;
    if (s.delta.apply(m.one()) != s.t.project(kron(m.one(), c.d.e()))) w = "unit coaction differs from 1 (x) e";
    for (std::size_t a = 0; a < dm && w.empty(); ++a)
      for (std::size_t b = 0; b < dm && w.empty(); ++b) {
        Vec amb = zero_vec(f, dm * n);
        for (std::size_t x = 0; x < dm * n; ++x) {
          if (lifts[a][x].is_zero()) continue;
          for (std::size_t y = 0; y < dm * n; ++y) {
            if (lifts[b][y].is_zero()) continue;
            axpy(amb, lifts[a][x] * lifts[b][y],
                 kron(m.algebra.product(x / n, y / n), c.d.vertical.product(x % n, y % n)));
          }
        }
        if (s.t.project(amb) != s.delta.apply(m.algebra.product(a, b)))
          w = "basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    report.record(prefix + ".comodule_algebra_" + s.name, w.empty(), "coaction is multiplicative and unital", w);
  }
}

InvariantAlgebra invariants_subalgebra(const DdaContext& c, const HModuleAlgebra& m, Report& report,
                                       const std::string& prefix) {
  InvariantAlgebra out;
  std::vector<Vec> inv = invariants(c, m.module);
  out.sub = subalgebra_from_span(m.algebra, inv, "n");
  report.pass(prefix + ".invariants_subalgebra", "invariants form a unital subalgebra of dimension " +
                                                     std::to_string(out.sub.dim()));
  const SubAlgebra& R = c.get(Base::R).sub;
  RightHModule rm = trivial_module(c);
  std::vector<Vec> hgens = algebra_generators(c.d.horizontal);
  ActionSet xs{R.dim(), {}}, ys{m.dim(), {}};
  for (const auto& h : hgens) {
    xs.ops.push_back(rm.action(h));
    ys.ops.push_back(m.module.action(h));
  }
  out.hom_r = hom_space(m.field(), xs, ys);
  Vec e_r = R.coords(c.d.e());
  std::string w;
  Matrix to(m.field(), out.sub.dim(), out.hom_r.dim());
  for (std::size_t k = 0; k < out.hom_r.dim() && w.empty(); ++k) {
    Vec v = out.hom_r.basis()[k].apply(e_r);
    if (!out.sub.contains(v)) {
      w = "f(e) not invariant for Hom basis " + std::to_string(k);
      break;
    }
    to.set_column(k, out.sub.coords(v));
  }
  bool iso = w.empty() && to.rows() == to.cols() && rank(to) == to.cols();
  if (w.empty() && !iso) w = "dim Hom_H(R,M) = " + std::to_string(out.hom_r.dim()) + ", rank " + std::to_string(rank(to));
  report.record(prefix + ".convolution_iso", iso, "f -> f(e) is a bijection Hom_H(R, M) -> M^H", w);
  out.to_invariants = std::move(to);
  return out;
}

StructAlgebra tensor_algebra(const TensorProduct& t, const std::function<Vec(std::size_t, std::size_t)>& ambient_product,
                             const Vec& ambient_unit, const std::string& label, bool check_descends) {
  const QuotientSpace& q = t.space();
  const Field& f = t.field();
  const std::size_t amb = t.ambient_dim();
  std::vector<std::vector<std::optional<Vec>>> table(amb, std::vector<std::optional<Vec>>(amb));
  auto prod = [&](std::size_t x, std::size_t y) -> const Vec& {
    if (!table[x][y]) table[x][y] = ambient_product(x, y);
    return *table[x][y];
  };
  std::vector<Vec> products;
  for (std::size_t a : q.basis())
    for (std::size_t b : q.basis()) products.push_back(q.project(prod(a, b)));
  if (check_descends) {
    for (std::size_t x : q.pivots()) {
      Vec nf = q.lift(q.project(unit_vec(f, amb, x)));
      for (std::size_t y = 0; y < amb; ++y) {
        Vec l = prod(x, y), r = prod(y, x);
        for (std::size_t k = 0; k < amb; ++k) {
          if (nf[k].is_zero()) continue;
          axpy(l, -nf[k], prod(k, y));
          axpy(r, -nf[k], prod(y, k));
        }
        if (!is_zero(q.project(l)) || !is_zero(q.project(r)))
          throw not_well_defined("product does not descend to the tensor product (ambient basis " +
                                 std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
  return StructAlgebra(FinSpace::numbered(f, q.dim(), label), std::move(products), q.project(ambient_unit));
}

SmashAlgebra smash_product(const DdaContext& c, const HModuleAlgebra& m) {
  SmashAlgebra s;
  s.tensor = h_tensor_module(c, m.module);
  const std::size_t n = c.d.dim(), dm = m.dim();
  std::vector<std::vector<std::pair<Vec, Matrix>>> deltas(n);
  for (std::size_t h = 0; h < n; ++h)
    for (const auto& [p, q] : c.delta(Base::R, c.d.horizontal.basis(h))) deltas[h].emplace_back(p, m.module.action(q));
  auto product = [&](std::size_t x, std::size_t y) {
    std::size_t h = x / dm, a = x % dm, h2 = y / dm, b = y % dm;
    Vec out = zero_vec(m.field(), n * dm);
    for (const auto& [p, q] : deltas[h2])
      axpy(out, m.field().one(), kron(c.d.horizontal.mul(c.d.horizontal.basis(h), p), m.mul(q.column(a), m.algebra.basis(b))));
    return out;
  };
  s.algebra = tensor_algebra(s.tensor, product, kron(c.d.i(), m.one()), "s", true);
  s.iota_h = Matrix(m.field(), s.tensor.dim(), n);
  for (std::size_t h = 0; h < n; ++h) s.iota_h.set_column(h, s.tensor.pure({c.d.horizontal.basis(h), m.one()}));
  s.iota_m = Matrix(m.field(), s.tensor.dim(), dm);
  for (std::size_t a = 0; a < dm; ++a) s.iota_m.set_column(a, s.tensor.pure({c.d.i(), m.algebra.basis(a)}));
  return s;
}

void check_smash(const DdaContext& c, const HModuleAlgebra& m, const SmashAlgebra& s, Report& report,
                 const std::string& prefix) {
  check_algebra(s.algebra, report, prefix);
  check_algebra_map(c.d.horizontal, s.algebra, s.iota_h, false, report, prefix + ".iota_h_algebra_map");
  check_algebra_map(m.algebra, s.algebra, s.iota_m, false, report, prefix + ".iota_m_algebra_map");
}

}  // namespace ddalab
