#include "ddalab/double_algebra.hpp"

#include <functional>

namespace ddalab {

namespace {

const StructAlgebra& algebra_of(const DoubleAlgebra& d, Base b) {
  return (b == Base::L || b == Base::R) ? d.vertical : d.horizontal;
}

std::string basis_triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

TensorJunction base_junction(const StructAlgebra& alg, const std::vector<Vec>& gens) {
  TensorJunction jn;
  for (const auto& g : gens) {
    jn.right_ops.push_back(alg.right_mult(g));
    jn.left_ops.push_back(alg.left_mult(g));
  }
  return jn;
}

// Element of a 2-fold ambient space from (left, right) pairs.
Vec ambient_of_pairs(const Field& f, std::size_t n1, std::size_t n2, const std::vector<std::pair<Vec, Vec>>& pairs) {
  Vec v = zero_vec(f, n1 * n2);
  for (const auto& [p, q] : pairs)
    for (std::size_t i = 0; i < n1; ++i) {
      if (p[i].is_zero()) continue;
      for (std::size_t j = 0; j < n2; ++j)
        if (!q[j].is_zero()) v[i * n2 + j].add_mul(p[i], q[j]);
    }
  return v;
}

}  // namespace

const char* base_name(Base b) {
  switch (b) {
    case Base::L: return "L";
    case Base::R: return "R";
    case Base::B: return "B";
    case Base::T: return "T";
  }
  return "?";
}

Matrix frobenius_map(const DoubleAlgebra& d, Base b) {
  switch (b) {
    case Base::L: return d.horizontal.right_mult(d.e());
    case Base::R: return d.horizontal.left_mult(d.e());
    case Base::B: return d.vertical.right_mult(d.i());
    case Base::T: return d.vertical.left_mult(d.i());
  }
  throw std::logic_error("unknown base");
}

std::optional<BaseData> derive_base_data(const DoubleAlgebra& d, Report& report) {
  BaseData out;
  bool ok = true;
  for (Base b : kBases) {
    const std::string id = std::string("dda.base.") + base_name(b);
    const StructAlgebra& alg = algebra_of(d, b);
    BaseAlgebra& x = out.get(b);
    x.which = b;
    x.phi = frobenius_map(d, b);
    std::vector<Vec> image = rank_kernel_image(x.phi).image;
    try {
      x.sub = subalgebra_from_span(alg, image, base_name(b));
      report.pass(id + ".subalgebra", "image of the Frobenius map is a unital subalgebra of dimension " +
                                          std::to_string(x.sub.dim()));
    } catch (const not_closed& e) {
      report.fail(id + ".subalgebra", "image of the Frobenius map is not a unital subalgebra", e.what());
      ok = false;
      continue;
    }
    for (const auto& g : algebra_generators(x.sub.algebra)) x.gens.push_back(x.sub.to_ambient(g));

    Matrix restricted = x.phi * x.sub.embed;
    bool invertible = rank(restricted) == x.sub.dim();
    Matrix square = x.phi * x.phi;
    if (b == Base::L || b == Base::R) {
      report.record(id + ".phi_idempotent", square == x.phi, "Frobenius map is a projection onto its image",
                    "Phi(Phi(a)) != Phi(a)");
    } else {
      report.record(id + ".phi_restriction_invertible", invertible,
                    square == x.phi ? "restriction to the base is the identity"
                                    : "restriction to the base is invertible (not idempotent: scaled by the index)",
                    "Phi restricted to the base is singular");
    }

    FrobeniusResult fr = frobenius_dual_basis(alg, x.gens, x.phi);
    if (!fr.data) {
      report.fail(id + ".frobenius", "no Frobenius dual basis", fr.failure);
      ok = false;
      continue;
    }
    x.frob = std::move(*fr.data);
    report.pass(id + ".frobenius", "dual basis with " + std::to_string(x.frob.pairs.size()) + " terms");
  }
  if (!ok) return std::nullopt;
  return out;
}

std::vector<std::pair<Vec, Vec>> coproduct_pairs(const DoubleAlgebra& d, const BaseData& base, Base b,
                                                 const Vec& a) {
  const StructAlgebra& alg = algebra_of(d, b);
  std::vector<std::pair<Vec, Vec>> out;
  for (const auto& [u, v] : base.get(b).frob.pairs) out.emplace_back(alg.mul(a, u), v);
  return out;
}

Comultiplications comultiplications(const DoubleAlgebra& d, const BaseData& base) {
  Comultiplications c;
  const std::size_t n = d.dim();
  for (Base b : kBases) {
    const TensorProduct& t = base.get(b).frob.tensor;
    Matrix m(d.field(), t.dim(), n);
    for (std::size_t a = 0; a < n; ++a)
      m.set_column(a, t.project(ambient_of_pairs(d.field(), n, n, coproduct_pairs(d, base, b, d.vertical.basis(a)))));
    c.delta[static_cast<std::size_t>(b)] = std::move(m);
  }
  return c;
}

void check_comultiplications(const DoubleAlgebra& d, const BaseData& base, const Comultiplications& c,
                             Report& report) {
  const Field& f = d.field();
  const std::size_t n = d.dim();
  for (Base b : kBases) {
    const std::string id = std::string("dda.comul.") + base_name(b);
    const BaseAlgebra& x = base.get(b);
    const StructAlgebra& alg = algebra_of(d, b);
    TensorJunction jn = base_junction(alg, x.gens);
    TensorProduct triple(f, {n, n, n}, {jn, jn});

    std::string coassoc, counit, bimod;
    for (std::size_t a = 0; a < n && (coassoc.empty() || counit.empty() || bimod.empty()); ++a) {
      Vec av = alg.basis(a);
      Vec lhs = zero_vec(f, n * n * n), rhs = lhs;
      Vec cl = zero_vec(f, n), cr = zero_vec(f, n);
      for (const auto& [u, v] : x.frob.pairs) {
        Vec au = alg.mul(av, u);
        for (const auto& [u2, v2] : x.frob.pairs) {
          Vec l = kron(kron(alg.mul(au, u2), v2), v);
          for (std::size_t i = 0; i < l.size(); ++i) lhs[i] += l[i];
          Vec r = kron(kron(au, alg.mul(v, u2)), v2);
          for (std::size_t i = 0; i < r.size(); ++i) rhs[i] += r[i];
        }
        cl = add(cl, alg.mul(x.phi.apply(au), v));
        cr = add(cr, alg.mul(au, x.phi.apply(v)));
      }
      if (coassoc.empty() && triple.project(lhs) != triple.project(rhs))
        coassoc = "basis element " + std::to_string(a);
      if (counit.empty() && (cl != av || cr != av))
        counit = "basis element " + std::to_string(a) + ": " + to_string(cl) + ", " + to_string(cr);
      for (const auto& g : x.gens) {
        if (!bimod.empty()) break;
        std::vector<std::pair<Vec, Vec>> right;
        for (const auto& [u, v] : x.frob.pairs) right.emplace_back(alg.mul(av, u), alg.mul(v, g));
        Vec lhs2 = c.get(b).apply(alg.mul(av, g));
        Vec rhs2 = x.frob.tensor.project(ambient_of_pairs(f, n, n, right));
        if (lhs2 != rhs2) bimod = "basis element " + std::to_string(a) + ", base generator " + to_string(g);
      }
    }
    report.record(id + ".coassociative", coassoc.empty(), "(Delta x id)Delta = (id x Delta)Delta", coassoc);
    report.record(id + ".counit", counit.empty(), "counit laws for the Frobenius map", counit);
    report.record(id + ".bimodule_map", bimod.empty(), "Delta commutes with the base actions", bimod);
  }
}

void check_distributivity(const DoubleAlgebra& d, const BaseData& base, Report& report) {
  const std::size_t n = d.dim();
  struct Law {
    const char* id;
    Base base;
    const char* text;
  };
  const Law laws[] = {
      {"dda.distributivity.bottom", Base::B, "a o (a' * a'') = (a(1) o a') * (a(2) o a'')"},
      {"dda.distributivity.left", Base::L, "a * (a' o a'') = (a[1] * a') o (a[2] * a'')"},
      {"dda.distributivity.top", Base::T, "(a' * a'') o a = (a' o a(1)) * (a'' o a(2))"},
      {"dda.distributivity.right", Base::R, "(a' o a'') * a = (a' * a[1]) o (a'' * a[2])"},
  };
  for (const auto& law : laws) {
    std::string witness;
    std::size_t bad = 0;
    for (std::size_t a = 0; a < n; ++a) {
      Vec av = d.vertical.basis(a);
      auto pairs = coproduct_pairs(d, base, law.base, av);
      for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t a2 = 0; a2 < n; ++a2) {
          Vec x = d.vertical.basis(a1), y = d.vertical.basis(a2);
          Vec lhs, rhs = zero_vec(d.field(), n);
          switch (law.base) {
            case Base::B:
              lhs = d.circ(av, d.star(x, y));
              for (const auto& [p, q] : pairs) rhs = add(rhs, d.star(d.circ(p, x), d.circ(q, y)));
              break;
            case Base::L:
              lhs = d.star(av, d.circ(x, y));
              for (const auto& [p, q] : pairs) rhs = add(rhs, d.circ(d.star(p, x), d.star(q, y)));
              break;
            case Base::T:
              lhs = d.circ(d.star(x, y), av);
              for (const auto& [p, q] : pairs) rhs = add(rhs, d.star(d.circ(x, p), d.circ(y, q)));
              break;
            case Base::R:
              lhs = d.star(d.circ(x, y), av);
              for (const auto& [p, q] : pairs) rhs = add(rhs, d.circ(d.star(x, p), d.star(y, q)));
              break;
          }
          if (lhs != rhs) {
            ++bad;
            if (witness.empty())
              witness = "basis triple " + basis_triple(a, a1, a2) + ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
          }
        }
    }
    report.record(law.id, bad == 0, bad ? std::to_string(bad) + " failing basis triples; " + law.text : law.text,
                  witness);
  }
}

TensorProduct bialgebroid_tensor(const StructAlgebra& total, const StructAlgebra& base, const Matrix& s,
                                 const Matrix& t, bool left) {
  TensorJunction jn;
  for (const auto& g : algebra_generators(base)) {
    Vec sg = s.apply(g), tg = t.apply(g);
    if (left) {
      jn.right_ops.push_back(total.left_mult(tg));
      jn.left_ops.push_back(total.left_mult(sg));
    } else {
      jn.right_ops.push_back(total.right_mult(sg));
      jn.left_ops.push_back(total.right_mult(tg));
    }
  }
  return TensorProduct(total.field(), {total.dim(), total.dim()}, {jn});
}

void check_bialgebroid(const Bialgebroid& b, Report& report, const std::string& prefix) {
  const StructAlgebra& A = b.total;
  const StructAlgebra& X = b.base;
  const Field& f = A.field();
  const std::size_t n = A.dim();
  check_algebra_map(X, A, b.s, false, report, prefix + ".source_algebra_map");
  check_algebra_map(X, A, b.t, true, report, prefix + ".target_anti_algebra_map");

  std::vector<Vec> gens = algebra_generators(X);
  std::string w;
  for (const auto& g : gens)
    for (const auto& h : gens)
      if (w.empty() && A.mul(b.s.apply(g), b.t.apply(h)) != A.mul(b.t.apply(h), b.s.apply(g)))
        w = "generators " + to_string(g) + ", " + to_string(h);
  report.record(prefix + ".source_target_commute", w.empty(), "s(x) t(y) = t(y) s(x)", w);

  auto pairs_of = [&](const Vec& q) { return split_pairs(f, n, n, b.tensor.lift(q)); };
  auto proj = [&](const std::vector<std::pair<Vec, Vec>>& ps) {
    return b.tensor.project(ambient_of_pairs(f, n, n, ps));
  };
  auto eps = [&](const Vec& a) { return b.eps.apply(a); };
  auto s = [&](const Vec& x) { return b.s.apply(x); };
  auto t = [&](const Vec& x) { return b.t.apply(x); };

  // Unit and multiplicativity of Delta.
  std::string mult;
  if (b.delta.apply(A.unit()) != b.tensor.pure({A.unit(), A.unit()})) mult = "Delta(1) != 1 (x) 1";
  std::vector<std::vector<std::pair<Vec, Vec>>> deltas;
  for (std::size_t a = 0; a < n; ++a) deltas.push_back(pairs_of(b.delta.column(a)));
  for (std::size_t a = 0; a < n && mult.empty(); ++a)
    for (std::size_t c = 0; c < n && mult.empty(); ++c) {
      std::vector<std::pair<Vec, Vec>> prod;
      for (const auto& [p, q] : deltas[a])
        for (const auto& [p2, q2] : deltas[c]) prod.emplace_back(A.mul(p, p2), A.mul(q, q2));
      if (proj(prod) != b.delta.apply(A.product(a, c)))
        mult = "basis pair (" + std::to_string(a) + "," + std::to_string(c) + ")";
    }
  report.record(prefix + ".delta_multiplicative", mult.empty(), "Delta(ab) = Delta(a) Delta(b), Delta(1) = 1 (x) 1",
                mult);

  std::string tak, counit, bimod;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& dp = deltas[a];
    Vec av = A.basis(a);
    for (const auto& g : gens) {
      std::vector<std::pair<Vec, Vec>> l, r;
      for (const auto& [p, q] : dp) {
        if (b.left) {
          l.emplace_back(A.mul(p, t(g)), q);
          r.emplace_back(p, A.mul(q, s(g)));
        } else {
          l.emplace_back(A.mul(s(g), p), q);
          r.emplace_back(p, A.mul(t(g), q));
        }
      }
      if (tak.empty() && proj(l) != proj(r)) tak = "basis element " + std::to_string(a) + ", generator " + to_string(g);
      // Bimodule property of Delta.
      std::vector<std::pair<Vec, Vec>> bs, bt;
      Vec lhs_s, lhs_t;
      for (const auto& [p, q] : dp) {
        if (b.left) {
          bs.emplace_back(A.mul(s(g), p), q);
          bt.emplace_back(p, A.mul(t(g), q));
        } else {
          bs.emplace_back(p, A.mul(q, s(g)));
          bt.emplace_back(A.mul(p, t(g)), q);
        }
      }
      if (b.left) {
        lhs_s = b.delta.apply(A.mul(s(g), av));
        lhs_t = b.delta.apply(A.mul(t(g), av));
      } else {
        lhs_s = b.delta.apply(A.mul(av, s(g)));
        lhs_t = b.delta.apply(A.mul(av, t(g)));
      }
      if (bimod.empty() && (lhs_s != proj(bs) || lhs_t != proj(bt)))
        bimod = "basis element " + std::to_string(a) + ", generator " + to_string(g);
    }
    Vec c1 = zero_vec(f, n), c2 = c1;
    for (const auto& [p, q] : dp) {
      if (b.left) {
        c1 = add(c1, A.mul(s(eps(p)), q));
        c2 = add(c2, A.mul(t(eps(q)), p));
      } else {
        c1 = add(c1, A.mul(p, s(eps(q))));
        c2 = add(c2, A.mul(q, t(eps(p))));
      }
    }
    if (counit.empty() && (c1 != av || c2 != av))
      counit = "basis element " + std::to_string(a) + ": " + to_string(c1) + ", " + to_string(c2);
  }
  report.record(prefix + ".takeuchi", tak.empty(), "Delta lands in the Takeuchi product", tak);
  report.record(prefix + ".delta_bimodule_map", bimod.empty(), "Delta is a base bimodule map", bimod);
  report.record(prefix + ".counit", counit.empty(), "counit laws", counit);

  std::string ce;
  Vec one_x = X.unit();
  if (eps(A.unit()) != one_x) ce = "eps(1) != 1";
  for (std::size_t x = 0; x < X.dim() && ce.empty(); ++x) {
    Vec xv = X.basis(x);
    if (eps(s(xv)) != xv || eps(t(xv)) != xv) ce = "eps(s(x)) or eps(t(x)) differs from x for basis " + std::to_string(x);
  }
  for (std::size_t a = 0; a < n && ce.empty(); ++a)
    for (std::size_t c = 0; c < n && ce.empty(); ++c) {
      Vec av = A.basis(a), cv = A.basis(c);
      Vec lhs = eps(A.product(a, c));
      Vec r1, r2;
      if (b.left) {
        r1 = eps(A.mul(av, s(eps(cv))));
        r2 = eps(A.mul(av, t(eps(cv))));
      } else {
        r1 = eps(A.mul(s(eps(av)), cv));
        r2 = eps(A.mul(t(eps(av)), cv));
      }
      if (lhs != r1 || lhs != r2) ce = "basis pair (" + std::to_string(a) + "," + std::to_string(c) + ")";
    }
  report.record(prefix + ".counit_product", ce.empty(), "eps is unital and satisfies the product rule", ce);
}

std::vector<Bialgebroid> bialgebroid_views(const DoubleAlgebra& d, const BaseData& base, const Comultiplications& c,
                                           Report& report) {
  struct Spec {
    const char* name;
    bool left;
    bool vertical_total;
    Base over, src, tgt;
  };
  const Spec specs[] = {
      {"V_over_B", true, true, Base::B, Base::L, Base::R},
      {"H_over_L", true, false, Base::L, Base::B, Base::T},
      {"V_over_T", false, true, Base::T, Base::R, Base::L},
      {"H_over_R", false, false, Base::R, Base::T, Base::B},
  };
  std::vector<Bialgebroid> out;
  for (const auto& sp : specs) {
    const std::string prefix = std::string("dda.view.") + sp.name;
    const BaseAlgebra& x = base.get(sp.over);
    Bialgebroid b;
    b.name = sp.name;
    b.left = sp.left;
    b.total = sp.vertical_total ? d.vertical : d.horizontal;
    b.base = x.sub.algebra;
    b.s = frobenius_map(d, sp.src) * x.sub.embed;
    b.t = frobenius_map(d, sp.tgt) * x.sub.embed;
    b.tensor = bialgebroid_tensor(b.total, b.base, b.s, b.t, b.left);
    const QuotientSpace& native = b.tensor.space();
    const QuotientSpace& frob = x.frob.tensor.space();
    bool agree = native.dim() == frob.dim() && native.kills(frob.projection()) && frob.kills(native.projection());
    report.record(prefix + ".tensor_agrees", agree,
                  "source/target actions generate the same relations as the base actions",
                  "native dim " + std::to_string(native.dim()) + " vs base tensor dim " + std::to_string(frob.dim()));
    if (!agree) continue;
    b.delta = c.get(sp.over);
    Matrix eps(d.field(), x.sub.dim(), d.dim());
    for (std::size_t a = 0; a < d.dim(); ++a) eps.set_column(a, x.sub.coords(x.phi.column(a)));
    b.eps = std::move(eps);
    check_bialgebroid(b, report, prefix);
    out.push_back(std::move(b));
  }
  return out;
}

void check_base_identities(const DoubleAlgebra& d, const BaseData& base, Report& report) {
  const BaseAlgebra& R = base.get(Base::R);
  const BaseAlgebra& T = base.get(Base::T);
  const BaseAlgebra& B = base.get(Base::B);
  auto restricted = [](const BaseAlgebra& from, const Matrix& phi, const BaseAlgebra& to) {
    Matrix m(from.sub.embed.field(), to.sub.dim(), from.sub.dim());
    for (std::size_t j = 0; j < from.sub.dim(); ++j) m.set_column(j, to.sub.coords(phi.apply(from.sub.embed.column(j))));
    return m;
  };
  Matrix rt = restricted(R, T.phi, T), rb = restricted(R, B.phi, B);
  check_algebra_map(R.sub.algebra, T.sub.algebra, rt, false, report, "dda.identity.phiT_on_R_homomorphism");
  check_algebra_map(R.sub.algebra, B.sub.algebra, rb, true, report, "dda.identity.phiB_on_R_anti_homomorphism");
  report.record("dda.identity.phiT_on_R_bijective", rt.rows() == rt.cols() && rank(rt) == rt.cols(),
                "Phi_T restricted to R is bijective onto T", "rank " + std::to_string(rank(rt)));
  report.record("dda.identity.phiB_on_R_bijective", rb.rows() == rb.cols() && rank(rb) == rb.cols(),
                "Phi_B restricted to R is bijective onto B", "rank " + std::to_string(rank(rb)));
  const Matrix phiR = base.get(Base::R).phi;
  std::string w;
  for (const auto& t : T.sub.ambient_basis())
    for (std::size_t a = 0; a < d.dim() && w.empty(); ++a) {
      Vec v = d.vertical.basis(a);
      if (d.star(v, t) != d.circ(v, phiR.apply(t))) w = "basis " + std::to_string(a) + ", t=" + to_string(t);
    }
  report.record("dda.identity.star_T_is_circ_phiR", w.empty(), "v * t = v o Phi_R(t) for t in T", w);
}

DdaAnalysis analyze_double_algebra(const DoubleAlgebra& d) {
  DdaAnalysis out;
  check_algebra(d.vertical, out.report, "dda.vertical");
  check_algebra(d.horizontal, out.report, "dda.horizontal");
  if (!d.vertical.has_unit() || !d.horizontal.has_unit()) return out;
  out.base = derive_base_data(d, out.report);
  if (!out.base) return out;
  out.comul = comultiplications(d, *out.base);
  check_comultiplications(d, *out.base, *out.comul, out.report);
  check_distributivity(d, *out.base, out.report);
  bialgebroid_views(d, *out.base, *out.comul, out.report);
  check_base_identities(d, *out.base, out.report);
  return out;
}

DdaContext make_context(const DoubleAlgebra& d) {
  DdaAnalysis a = analyze_double_algebra(d);
  if (!a.valid()) {
    std::string first = "double algebra is invalid";
    for (const auto& c : a.report.sorted())
      if (!c.holds) {
        first += ": " + c.id + (c.witness.empty() ? "" : " (" + c.witness + ")");
        break;
      }
    throw invalid_structure(first, std::move(a.report));
  }
  return DdaContext{d, std::move(*a.base), std::move(*a.comul)};
}

}  // namespace ddalab
