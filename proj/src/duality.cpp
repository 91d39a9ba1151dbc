#include "ddalab/duality.hpp"

namespace ddalab {

namespace {

Matrix on_quotient(const TensorProduct& t, const Matrix& ambient) {
  return t.space().descend(t.space().projection() * ambient);
}

bool bijective(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.cols(); }

std::string at(const std::string& what, std::size_t i) { return what + " " + std::to_string(i); }

ActionSet via(const std::vector<Vec>& gens, const RightHModule& y) {
  ActionSet s{y.dim(), {}};
  for (const auto& g : gens) s.ops.push_back(y.action(g));
  return s;
}

// Hom_H(Y, M) with the actions of generators of H.
HomSpace k_of(const std::vector<Vec>& hgens, const RightHModule& y, const HModuleAlgebra& m) {
  return hom_space(m.field(), via(hgens, y), via(hgens, m.module));
}

// Matrix of xi -> post * xi * pre on coordinates of a hom space.
Matrix hom_map(const Field& f, const HomSpace& k, const Matrix* post, const Matrix* pre) {
  Matrix out(f, k.dim(), k.dim());
  for (std::size_t j = 0; j < k.dim(); ++j) {
    Matrix x = k.basis()[j];
    if (post) x = *post * x;
    if (pre) x = x * *pre;
    out.set_column(j, k.coords(x));
  }
  return out;
}

// N-bimodule actions on Hom_H(Y, M): left and right multiplication in M, generator by generator.
struct Bimodule {
  std::vector<Matrix> left, right;
};

Bimodule n_bimodule(const HomSpace& k, const Extension& e) {
  Bimodule b;
  for (const auto& g : e.n_gens()) {
    Matrix l = e.m.left_mult(g), r = e.m.right_mult(g);
    b.left.push_back(hom_map(e.m.field(), k, &l, nullptr));
    b.right.push_back(hom_map(e.m.field(), k, &r, nullptr));
  }
  return b;
}

// Hom_{N^e}(X, M) for X with the given bimodule actions.
HomSpace j_of(const Bimodule& x, std::size_t dim_x, const Extension& e) {
  ActionSet src{dim_x, {}}, dst{e.m.dim(), {}};
  for (std::size_t k = 0; k < x.left.size(); ++k) {
    src.ops.push_back(x.left[k]);
    dst.ops.push_back(e.m.left_mult(e.n_gens()[k]));
  }
  for (std::size_t k = 0; k < x.right.size(); ++k) {
    src.ops.push_back(x.right[k]);
    dst.ops.push_back(e.m.right_mult(e.n_gens()[k]));
  }
  return hom_space(e.m.field(), src, dst);
}

}  // namespace

std::vector<TestObject> standard_test_objects(const DdaContext& c) {
  RightHModule h = regular_module(c);
  return {{"R", trivial_module(c)}, {"H", h}, {"HH", tensor_module(c, h, h, nullptr)}};
}

GammaRB gamma_rb(const DdaContext& c, Report& report, const std::string& prefix) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim();
  GammaRB g;
  RightHModule h = regular_module(c);
  RightHModule hh = tensor_module(c, h, h, &g.h_r_h);
  g.a_b_h = c.get(Base::B).frob.tensor;
  const auto& pairs = c.get(Base::B).frob.pairs;
  try {
    g.map = g.h_r_h.matrix_of(
        [&](const std::vector<std::size_t>& t) {
          Vec amb = zero_vec(f, n * n);
          Vec a = c.d.horizontal.basis(t[0]), a2 = c.d.horizontal.basis(t[1]);
          for (const auto& [u, v] : pairs) amb = add(amb, kron(c.d.star(a, u), c.d.circ(v, a2)));
          return g.a_b_h.project(amb);
        },
        g.a_b_h.dim(), true);
  } catch (const not_well_defined& e) {
    report.fail(prefix + ".defined", "a (x)_R a' -> a_(1) (x)_B a_(2) o a' descends to H (x)_R H", e.what());
    return g;
  }
  report.pass(prefix + ".defined", "a (x)_R a' -> a_(1) (x)_B a_(2) o a' descends to H (x)_R H");
  g.bijective = bijective(g.map);
  report.record(prefix + ".bijective", g.bijective, "Gamma_RB: H (x)_R H -> A (x)_B H is bijective",
                "rank " + std::to_string(rank(g.map)) + " on " + std::to_string(g.map.cols()) + " -> " +
                    std::to_string(g.map.rows()));
  std::string w;
  Matrix id = Matrix::identity(f, n);
  for (const auto& x : algebra_generators(c.d.horizontal)) {
    Matrix tgt = on_quotient(g.a_b_h, kron(id, c.d.horizontal.right_mult(x)));
    if (g.map * hh.action(x) != tgt * g.map) {
      w = "fails for generator " + to_string(x);
      break;
    }
  }
  report.record(prefix + ".h_module_map", w.empty(),
                "Gamma_RB intertwines the diagonal action with right multiplication on the H factor", w);
  return g;
}

HomFunctorData hom_functor(const DdaContext& c, const HModuleAlgebra& m, std::vector<TestObject> objects,
                           std::size_t max_pair_dim) {
  const Field& f = c.d.field();
  std::vector<Vec> hgens = algebra_generators(c.d.horizontal);
  HomFunctorData d;
  d.ext = invariant_extension(c, m);
  d.objects = std::move(objects);
  for (const auto& y : d.objects) d.k.push_back(k_of(hgens, y.module, m));

  HomSpace kr = k_of(hgens, trivial_module(c), m);
  d.f0 = Matrix(f, kr.dim(), d.ext.n.dim());
  for (std::size_t j = 0; j < d.ext.n.dim(); ++j) {
    Vec nv = d.ext.n.to_ambient(unit_vec(f, d.ext.n.dim(), j));
    Matrix x(f, m.dim(), m.eta.cols());
    for (std::size_t r = 0; r < m.eta.cols(); ++r) x.set_column(r, m.mul(nv, m.eta.column(r)));
    d.f0.set_column(j, kr.coords(x));
  }

  std::vector<Bimodule> bim;
  for (const auto& k : d.k) bim.push_back(n_bimodule(k, d.ext));
  for (std::size_t a = 0; a < d.objects.size(); ++a)
    for (std::size_t b = 0; b < d.objects.size(); ++b) {
      const RightHModule& y = d.objects[a].module;
      const RightHModule& y2 = d.objects[b].module;
      std::string label = d.objects[a].name + "_" + d.objects[b].name;
      if (y.dim() * y2.dim() > max_pair_dim) {
        d.skipped.push_back(label);
        continue;
      }
      HomFunctorData::Pair p;
      p.y = a;
      p.y2 = b;
      p.yy_module = tensor_module(c, y, y2, &p.yy);
      p.k_yy = k_of(hgens, p.yy_module, m);
      p.kk = TensorProduct(f, {d.k[a].dim(), d.k[b].dim()}, {TensorJunction{bim[a].right, bim[b].left}});
      const HomSpace &ka = d.k[a], &kb = d.k[b];
      p.f2 = p.kk.matrix_of(
          [&](const std::vector<std::size_t>& t) {
            Matrix x(f, m.dim(), p.yy.dim());
            for (std::size_t q = 0; q < p.yy.dim(); ++q) {
              auto yt = p.yy.ambient_tuple(p.yy.space().basis()[q]);
              x.set_column(q, m.mul(ka.basis()[t[0]].column(yt[0]), kb.basis()[t[1]].column(yt[1])));
            }
            return p.k_yy.coords(x);
          },
          p.k_yy.dim(), true);
      p.bijective = bijective(p.f2);
      d.pairs.push_back(std::move(p));
    }
  return d;
}

OpmonoidalReport opmonoidal_constraints(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                        const GaloisReport& gr, std::size_t max_pair_dim) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim();
  OpmonoidalReport o;
  Report& rep = o.report;
  try {
    o.data = hom_functor(c, m, standard_test_objects(c), max_pair_dim);
  } catch (const std::exception& e) {
    rep.fail("duality.opmonoidal.defined", "F^0 and F^{Y,Y'} are well defined", e.what());
    return o;
  }
  const HomFunctorData& d = o.data;
  o.f0_iso = bijective(d.f0);
  rep.record("duality.f0_bijective", o.f0_iso, "F^0: N -> Hom_H(R, M), n -> {r -> n eta(r)} is bijective",
             std::to_string(d.f0.cols()) + " -> " + std::to_string(d.f0.rows()));
  bool normal = d.ext.n.dim() == invariants(c, m.module).size();
  rep.record("duality.f0_matches_normal", o.f0_iso == normal, "F^0 is invertible iff N = M^H");

  o.strong = o.f0_iso;
  std::string tested;
  const HomFunctorData::Pair* hh = nullptr;
  for (const auto& p : d.pairs) {
    std::string label = d.objects[p.y].name + "_" + d.objects[p.y2].name;
    tested += (tested.empty() ? "" : ", ") + label;
    rep.record("duality.f2." + label, p.bijective, "F^{Y,Y'} is bijective for Y (x)_R Y' = " + label,
               std::to_string(p.f2.cols()) + " -> " + std::to_string(p.f2.rows()));
    o.strong = o.strong && p.bijective;
    if (d.objects[p.y].name == "H" && d.objects[p.y2].name == "H") hh = &p;
  }
  std::string skipped;
  for (const auto& s : d.skipped) skipped += (skipped.empty() ? "" : ", ") + s;
  rep.pass("duality.tested_pairs", "pairs tested: " + tested + (skipped.empty() ? "" : "; skipped: " + skipped));
  if (!hh) {
    rep.fail("duality.square_commutes", "the pair (H, H) is required", "H (x)_R H over the size limit");
    return o;
  }
  o.fhh_iso = hh->bijective;
  rep.record("duality.f2_hh_matches_galois", o.fhh_iso == gr.galois(), "F^{H,H} is invertible iff gamma^M is",
             std::string("F^{H,H} ") + (o.fhh_iso ? "bijective" : "not bijective") + ", gamma^M " +
                 (gr.galois() ? "bijective" : "not bijective"));
  rep.record("duality.strong_matches_galois", o.strong == gr.galois(),
             "F is strong on the tested objects iff M is Galois over M^H");

  // iota: M -> Hom_H(H, M), m -> {h -> m < h}.
  const HomSpace& kh = d.k[hh->y];
  Matrix iota(f, kh.dim(), m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Matrix x(f, m.dim(), n);
    for (std::size_t h = 0; h < n; ++h) x.set_column(h, m.module.act[h].column(j));
    iota.set_column(j, kh.coords(x));
  }
  rep.record("duality.iota_bijective", bijective(iota), "m -> {h -> m < h} is a bijection M -> Hom_H(H, M)");
  Matrix ii = g.mnm.matrix_of(
      [&](const std::vector<std::size_t>& t) { return hh->kk.project(kron(iota.column(t[0]), iota.column(t[1]))); },
      hh->kk.dim(), true);
  // Hom_H(H (x)_R H, M) -> M (x)_T A, chi -> chi(i (x) u_k) (x)_T v_k.
  const TensorProduct& mta = g.comodule.over_t;
  Matrix lower(f, mta.dim(), hh->k_yy.dim());
  for (std::size_t l = 0; l < hh->k_yy.dim(); ++l) {
    Vec amb = zero_vec(f, mta.ambient_dim());
    for (const auto& [u, v] : c.get(Base::T).frob.pairs)
      amb = add(amb, kron(hh->k_yy.basis()[l].apply(hh->yy.project(kron(c.d.i(), u))), v));
    lower.set_column(l, mta.project(amb));
  }
  rep.record("duality.lower_bijective", bijective(lower),
             "Hom_H(H (x)_R H, M) -> M (x)_T A, chi -> chi(i (x) u_k) (x) v_k is bijective");
  o.square_commutes = lower * hh->f2 * ii == g.gamma_upper;
  rep.record("duality.square_commutes", o.square_commutes,
             "gamma^M factors as F^{H,H} o (iota (x) iota) followed by Hom_H(H (x)_R H, M) -> M (x)_T A");
  return o;
}

LeftDistributivity left_distributivity_check(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                             const GaloisReport& gr) {
  const Field& f = c.d.field();
  const std::size_t n = c.d.dim(), dm = m.dim();
  LeftDistributivity l;
  Report scratch;
  auto fe = frobenius_extension_data(c, m, g, scratch, "duality.left_distributivity.psi");
  l.psi_frobenius = fe.has_value();
  l.report.record("duality.left_distributivity.psi_frobenius", l.psi_frobenius,
                  "psi = (.) < e: M -> N is a Frobenius homomorphism", "no dual basis for psi");
  if (fe) {
    l.rule_holds = true;
    std::vector<std::vector<Vec>> f_act(n);  // f_i < a'
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [e, fi] : fe->pairs) f_act[a].push_back(m.module.act[a].apply(fi));
    for (std::size_t x = 0; x < dm && l.rule_holds; ++x) {
      Vec mv = unit_vec(f, dm, x);
      std::vector<Vec> me;
      for (const auto& [e, fi] : fe->pairs) me.push_back(m.mul(mv, e));
      for (std::size_t a = 0; a < n && l.rule_holds; ++a) {
        std::vector<Vec> p;
        for (const auto& v : me) p.push_back(m.module.act[a].apply(v));
        for (std::size_t a2 = 0; a2 < n; ++a2) {
          Vec lhs = m.module.apply(mv, c.d.circ(c.d.vertical.basis(a), c.d.vertical.basis(a2)));
          Vec rhs = zero_vec(f, dm);
          for (std::size_t i = 0; i < p.size(); ++i) rhs = add(rhs, m.mul(p[i], f_act[a2][i]));
          if (lhs != rhs) {
            l.rule_holds = false;
            l.witness = "m = " + m.algebra.space().labels[x] + ", a = " + c.d.space().labels[a] +
                        ", a' = " + c.d.space().labels[a2];
            break;
          }
        }
      }
    }
    l.report.record("duality.left_distributivity.rule", l.rule_holds,
                    "m < (a o a') = (m e_i < a)(f_i < a') on all basis triples", l.witness);
  }
  l.report.record("duality.left_distributivity.matches_galois", l.holds() == gr.galois(),
                  "psi Frobenius with left distributivity iff gamma^M is bijective",
                  std::string("left distributivity ") + (l.holds() ? "holds" : "fails") + ", Galois " +
                      (gr.galois() ? "holds" : "fails"));
  return l;
}

ReflexivityReport reflexivity_and_duality(const DdaContext& c, const HModuleAlgebra& m,
                                          std::vector<TestObject> objects, std::size_t max_pair_dim) {
  const Field& f = c.d.field();
  std::vector<Vec> hgens = algebra_generators(c.d.horizontal);
  ReflexivityReport r;
  HomFunctorData d = hom_functor(c, m, std::move(objects), max_pair_dim);
  const Extension& e = d.ext;

  // Hom_{N^e}(K, M) and sigma: Y -> Hom_{N^e}(K, M), y -> {xi -> xi(y)}.
  struct Dual {
    HomSpace j;
    Matrix sigma;
  };
  auto dual_of = [&](const HomSpace& k, const RightHModule& y) {
    Dual out{j_of(n_bimodule(k, e), k.dim(), e), Matrix(f, 0, 0)};
    out.sigma = Matrix(f, out.j.dim(), y.dim());
    for (std::size_t col = 0; col < y.dim(); ++col) {
      Matrix x(f, m.dim(), k.dim());
      for (std::size_t j = 0; j < k.dim(); ++j) x.set_column(j, k.basis()[j].column(col));
      out.sigma.set_column(col, out.j.coords(x));
    }
    return out;
  };

  std::vector<Dual> duals;
  std::string facts;
  r.all_reflexive = true;
  for (std::size_t a = 0; a < d.objects.size(); ++a) {
    const TestObject& y = d.objects[a];
    duals.push_back(dual_of(d.k[a], y.module));
    const Dual& du = duals.back();
    bool iso = bijective(du.sigma);
    r.sigma.emplace_back(y.name, iso);
    r.all_reflexive = r.all_reflexive && iso;
    facts += (facts.empty() ? "" : ", ") + ("sigma_" + y.name) + (iso ? " bijective" : " not bijective");
    std::string w;
    for (const auto& g : hgens) {
      Matrix act = m.module.action(g);
      Matrix jact = hom_map(f, du.j, &act, nullptr);
      if (du.sigma * y.module.action(g) != jact * du.sigma) {
        w = "fails for generator " + to_string(g);
        break;
      }
    }
    r.report.record("duality.sigma." + y.name + ".h_linear", w.empty(), "sigma_Y is a right H-module map", w);
    if (y.name == "H") {
      Matrix ev(f, m.dim(), d.k[a].dim());
      for (std::size_t j = 0; j < d.k[a].dim(); ++j) ev.set_column(j, d.k[a].basis()[j].apply(c.d.i()));
      r.report.record("duality.k_regular_is_m", bijective(ev), "Hom_H(H, M) -> M, xi -> xi(i) is bijective");
    }
  }

  for (const auto& p : d.pairs) {
    std::string label = d.objects[p.y].name + "_" + d.objects[p.y2].name;
    Dual dyy = dual_of(p.k_yy, p.yy_module);
    const Dual &da = duals[p.y], &db = duals[p.y2];
    std::string w;
    for (std::size_t b = 0; b < p.yy.dim() && w.empty(); ++b) {
      auto yt = p.yy.ambient_tuple(p.yy.space().basis()[b]);
      Matrix sa = da.j.element(da.sigma.column(yt[0])), sb = db.j.element(db.sigma.column(yt[1]));
      Matrix syy = dyy.j.element(dyy.sigma.column(b));
      for (std::size_t q = 0; q < p.kk.dim(); ++q) {
        auto kt = p.kk.ambient_tuple(p.kk.space().basis()[q]);
        if (m.mul(sa.column(kt[0]), sb.column(kt[1])) != syy.apply(p.f2.column(q))) {
          w = at("fails on Y (x) Y' basis", b) + ", " + at("K basis", q);
          break;
        }
      }
    }
    r.report.record("duality.mate." + label, w.empty(),
                    "J_{KY,KY'} o (sigma_Y (x) sigma_Y') = JK^{Y,Y'} o sigma_{Y (x) Y'} for " + label, w);
  }

  const SubAlgebra& rs = c.get(Base::R).sub;
  std::string w;
  for (std::size_t j = 0; j < e.n.dim() && w.empty(); ++j) {
    Vec nv = e.n.to_ambient(unit_vec(f, e.n.dim(), j));
    for (std::size_t k = 0; k < rs.dim(); ++k)
      if (m.module.apply(nv, rs.embed.column(k)) != m.mul(nv, m.eta.column(k))) {
        w = at("fails on N basis", j) + ", " + at("R basis", k);
        break;
      }
  }
  r.report.record("duality.mate_unit", w.empty(), "J_0 = JK^0 o sigma_R, i.e. n < r = n eta(r)", w);
  // H -> End(_N M_N), h -> (m -> m < h).
  ActionSet nn{m.dim(), {}};
  for (const auto& g : e.n_gens()) {
    nn.ops.push_back(e.m.left_mult(g));
    nn.ops.push_back(e.m.right_mult(g));
  }
  HomSpace end = hom_space(f, nn, nn);
  Matrix canon(f, end.dim(), c.d.dim());
  for (std::size_t h = 0; h < c.d.dim(); ++h) canon.set_column(h, end.coords(m.module.act[h]));
  bool embedding = bijective(canon);
  r.report.record("duality.reflexivity_matches_canonical_embedding", r.all_reflexive == embedding,
                  "the test objects are M-reflexive iff H -> End(_N M_N) is bijective",
                  facts + "; H -> End(_N M_N) " + (embedding ? "bijective" : "not bijective"));
  r.report.pass("duality.reflexivity", facts + "; H -> End(_N M_N) " + (embedding ? "bijective" : "not bijective"));
  return r;
}

}  // namespace ddalab
