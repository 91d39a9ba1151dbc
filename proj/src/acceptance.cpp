#include "ddalab/acceptance.hpp"

#include <functional>

#include "ddalab/antipode.hpp"
#include "ddalab/braided.hpp"
#include "ddalab/duality.hpp"
#include "ddalab/instances.hpp"
#include "ddalab/pipelines.hpp"

namespace ddalab {

namespace {

const Field& f_of(const Extension& e) { return e.m.field(); }

std::string field_tag(const Field& f) { return f.is_rational() ? "Q" : "F" + std::to_string(f.characteristic()); }

bool usable(const Field& f, const Group& g) { return f.is_rational() || g.order() % f.characteristic() != 0; }

std::vector<Field> variant_fields(const Field& main) {
  std::vector<Field> out{main};
  for (std::uint64_t p : {5, 7})
    if (main != Field::prime(p)) out.push_back(Field::prime(p));
  return out;
}

DdaContext group_context(const Group& g, const Field& f) { return make_context(dda_from_hopf(group_hopf(g, f))); }

struct GaloisCase {
  std::string name;
  bool expect_galois = true;
  DdaContext c;
  HModuleAlgebra m;
  GaloisMaps g;
  GaloisReport gr;
};

GaloisCase galois_case(std::string name, bool expect, DdaContext c, HModuleAlgebra m) {
  GaloisMaps g = build_galois_maps(c, m);
  GaloisReport gr = decide_galois(c, m, g);
  return {std::move(name), expect, std::move(c), std::move(m), std::move(g), std::move(gr)};
}

struct MatrixEndo {
  Extension ext;
  EndoConstruction ec;
};

MatrixEndo matrix_endo(const Field& f, Report& rep, const std::string& prefix) {
  Extension e = matrix_extension(f, 2);
  auto fe = frobenius_from_psi(e, *e.psi, rep, prefix + ".frobenius");
  if (!fe) throw construction_error("M_2 over the diagonal has no Frobenius dual basis");
  return {e, endo_double_algebra(e, *fe)};
}

GaloisCase matrix_endo_case(const Field& f) {
  Report scratch;
  MatrixEndo me = matrix_endo(f, scratch, "m2");
  DdaContext c = make_context(me.ec.dda);
  HModuleAlgebra m = endo_module_algebra(c, me.ext, me.ec);
  return galois_case("M2_endo", true, std::move(c), std::move(m));
}

// Function algebras, the self-test, the endomorphism instance and a trivial action.
std::vector<GaloisCase> galois_universe(const Field& f) {
  std::vector<GaloisCase> out;
  for (const char* name : {"C2", "C3", "S3"}) {
    Group g = group_by_name(name);
    if (!usable(f, g)) continue;
    DdaContext c = group_context(g, f);
    HModuleAlgebra m = function_module_algebra(c, g);
    out.push_back(galois_case(std::string("k^") + name, true, std::move(c), std::move(m)));
  }
  {
    DdaContext c = group_context(group_by_name("C3"), f);
    HModuleAlgebra m = self_module_algebra(c);
    out.push_back(galois_case("self_C3", true, std::move(c), std::move(m)));
  }
  out.push_back(matrix_endo_case(f));
  {
    DdaContext c = group_context(group_by_name("C2"), f);
    HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(f, 2), "trivial_action");
    out.push_back(galois_case("trivial_action_C2", false, std::move(c), std::move(m)));
  }
  return out;
}

// Records that some check in r failed with a non-empty witness.
void expect_rejected(Report& out, const std::string& id, const Report& r, const std::string& what,
                     const std::string& id_prefix = {}) {
  std::string first;
  bool witnessed = true;
  for (const auto& c : r.sorted())
    if (!c.holds && c.id.rfind(id_prefix, 0) == 0) {
      if (first.empty()) first = c.id;
      witnessed = witnessed && !c.witness.empty();
    }
  out.record(id, !first.empty() && witnessed, what + " is rejected with a witness",
             first.empty() ? "no failing check" : "failing check without witness: " + first);
  if (!first.empty()) out.pass(id + ".first_failure", first);
}

Report criterion1(const Field& f) {
  Report rep;
  for (const Field& fv : variant_fields(f))
    for (const char* name : {"trivial", "C2", "C3", "S3"}) {
      Group g = group_by_name(name);
      if (!usable(fv, g)) continue;
      std::string p = "dda_validity." + field_tag(fv) + "." + name;
      HopfData h = group_hopf(g, fv);
      Report hr;
      check_hopf(h, hr);
      rep.merge(hr, p + ".");
      DdaAnalysis a = analyze_double_algebra(dda_from_hopf(h));
      rep.merge(a.report, p + ".");
      rep.record(p + ".valid", a.valid(), "full double algebra suite passes");
      std::vector<std::string> laws;
      for (const char* x : {"L", "R", "B", "T"}) {
        laws.push_back(std::string("dda.base.") + x + ".frobenius");
        laws.push_back(std::string("dda.comul.") + x + ".coassociative");
        laws.push_back(std::string("dda.comul.") + x + ".counit");
      }
      for (const char* x : {"bottom", "left", "top", "right"}) laws.push_back(std::string("dda.distributivity.") + x);
      std::string missing;
      for (const auto& l : laws)
        if (!a.report.find(l)) missing += l + " ";
      rep.record(p + ".covers_all_laws", missing.empty(),
                 "Frobenius bases, coassociativity, counits and the four distributivity laws were checked", missing);
    }
  return rep;
}

Report criterion2(const Field& f) {
  Report rep;
  for (const Field& fv : variant_fields(f))
    for (const char* name : {"trivial", "C2", "C3", "S3"}) {
      Group g = group_by_name(name);
      if (!usable(fv, g)) continue;
      std::string p = "antipode." + field_tag(fv) + "." + name;
      HopfData h = normalize_integrals(group_hopf(g, fv));
      DdaContext c = make_context(dda_from_hopf(h));
      AntipodeResult ar = solve_antipode(c);
      rep.record(p + ".unique", ar.status == AntipodeStatus::unique, "the antipode is unique",
                 antipode_status_name(ar.status));
      rep.merge(ar.report, p + ".");
      if (!ar.antipode) continue;
      rep.record(p + ".matches_group_inverse", ar.antipode->s == transported_antipode(h),
                 "S equals the transported antipode g -> g^-1");
      HModuleAlgebra self = self_module_algebra(c);
      GaloisMaps gm = build_galois_maps(c, self);
      check_phi(c, gm, ar.antipode->s, rep, p + ".canonical_comodule");
    }
  return rep;
}

Report criterion3(const std::vector<GaloisCase>& cases) {
  Report rep;
  for (const auto& k : cases) {
    std::string p = "galois_equivalence." + k.name;
    rep.record(p + ".six_agree", k.gr.all_equal(), "the six Galois conditions evaluate identically");
    rep.record(p + ".expected", k.gr.galois() == k.expect_galois,
               k.expect_galois ? "the instance is Galois" : "the instance is not Galois");
    if (!k.expect_galois) {
      std::string w;
      for (std::size_t i = 0; i < 6; ++i)
        if (k.gr.conditions[i].holds || k.gr.conditions[i].witness.empty()) w += std::string(kGaloisConditionIds[i]) + " ";
      rep.record(p + ".all_false_with_witnesses", w.empty(), "all six conditions fail with concrete witnesses", w);
    }
  }
  return rep;
}

Report criterion4(const std::vector<GaloisCase>& cases) {
  Report rep;
  std::size_t surjective = 0;
  for (const auto& k : cases) {
    if (!k.gr.conditions[0].holds) continue;
    ++surjective;
    std::string p = "kreimer_takeuchi." + k.name;
    rep.record(p + ".dual_basis", k.gr.report.holds("galois.kreimer_takeuchi.dual_basis"),
               "the dual basis (m'_j .) < e proves M_N fgp");
    rep.record(p + ".pairs", !k.gr.kt_pairs.empty(), "dual basis pairs were produced");
    rep.record(p + ".bijective", k.gr.conditions[2].holds, "gamma^M is bijective");
  }
  rep.record("kreimer_takeuchi.instances", surjective >= 4, "instances with gamma^M onto were found",
             std::to_string(surjective));
  return rep;
}

Report criterion5(const std::vector<GaloisCase>& cases, const Field& f) {
  Report rep;
  for (const auto& k : cases) {
    if (!k.gr.galois()) continue;
    std::string p = "galois_frobenius_d2." + k.name;
    auto fe = frobenius_extension_data(k.c, k.m, k.g, rep, p + ".psi");
    rep.record(p + ".frobenius", fe.has_value(), "psi = (.) < e is a Frobenius homomorphism");
    if (fe) check_frobenius_extension(k.g.ext, *fe, rep, p + ".psi");
    BalancedD2 b = check_balanced_and_d2(k.g.ext);
    rep.merge(b.report, p + ".");
  }
  Report conv;
  MatrixEndo me = matrix_endo(f, conv, "endo_converse.M2");
  BalancedD2 b = check_balanced_and_d2(me.ext);
  conv.merge(b.report, "endo_converse.M2.");
  DdaContext c = make_context(me.ec.dda);
  HModuleAlgebra m = endo_module_algebra(c, me.ext, me.ec);
  GaloisReport gr = decide_galois(c, m);
  bool all = true;
  for (const auto& x : gr.conditions) all = all && x.holds;
  conv.record("endo_converse.M2.all_six_true", all, "decide_galois returns all-true on the endomorphism structure");
  rep.merge(conv);
  return rep;
}

Report criterion6(const Field& f) {
  Report rep;
  std::vector<GaloisCase> cases;
  {
    Group g = group_by_name("C2");
    DdaContext c = group_context(g, f);
    HModuleAlgebra m = function_module_algebra(c, g);
    cases.push_back(galois_case("k^C2", true, std::move(c), std::move(m)));
  }
  cases.push_back(matrix_endo_case(f));
  for (const auto& k : cases) {
    std::string p = "scalars." + k.name;
    CentralizerBCA cb = centralizer_bca(k.c, k.m, k.g);
    check_bca(k.c, cb.bca, rep, p + ".centralizer");
    check_centralizer(k.c, k.m, cb, rep, p + ".centralizer");
    ScalarExtension se = scalar_extension(k.c, cb.bca);
    check_scalar_extension(k.c, cb.bca, se, rep, p + ".smash");
    endo_hopf_algebroid(k.c, k.m, k.g, cb, rep, p + ".endo");
  }
  return rep;
}

Report criterion7(const std::vector<GaloisCase>& cases, const Field& f) {
  Report rep;
  {
    Report g;
    gamma_rb(make_context(trivial_dda(f)), g, "duality.trivial.gamma_rb");
    rep.merge(g);
  }
  for (const auto& k : cases) {
    std::string p = "duality." + k.name;
    Report g;
    GammaRB gm = gamma_rb(k.c, g, "gamma_rb");
    rep.merge(g, p + ".");
    OpmonoidalReport o = opmonoidal_constraints(k.c, k.m, k.g, k.gr);
    rep.record(p + ".f2_hh_matches_galois", o.report.holds("duality.f2_hh_matches_galois"),
               "F^{H,H} is invertible iff gamma^M is");
    rep.record(p + ".square_commutes", o.square_commutes, "the commuting square holds as a matrix identity");
    LeftDistributivity l = left_distributivity_check(k.c, k.m, k.g, k.gr);
    rep.record(p + ".left_distributivity_matches_galois", l.holds() == k.gr.galois(),
               "left distributivity agrees with decide_galois", l.witness);
  }
  return rep;
}

Report criterion8(const Field& f) {
  Report rep;
  GaloisCase k = matrix_endo_case(f);
  ReflexivityReport r = reflexivity_and_duality(k.c, k.m, standard_test_objects(k.c));
  rep.merge(r.report, "monoidal_duality.M2_endo.");
  for (const auto& [name, iso] : r.sigma)
    rep.record("monoidal_duality.M2_endo.sigma_" + name, iso, "sigma_Y is bijective for Y = " + name);
  OpmonoidalReport o = opmonoidal_constraints(k.c, k.m, k.g, k.gr);
  rep.merge(o.report, "monoidal_duality.M2_endo.");
  rep.record("monoidal_duality.M2_endo.all_pairs_tested", o.data.skipped.empty(),
             "F^{Y,Y'} was computed for every pair in {R, E, E (x) E}");
  return rep;
}

Report criterion9(const std::vector<GaloisCase>& cases) {
  Report rep;
  for (const auto& k : cases) {
    std::string p = "structure." + k.name;
    StructureReport s = structure_theorem_conditions(k.c, k.m, k.g, k.gr);
    rep.record(p + ".first_group_agree", s.report.holds("structure.first_group_agree"), "galois, smash-end and smash-summand conditions agree");
    if (k.gr.galois())
      rep.record(p + ".second_group_agree", s.report.holds("structure.second_group_agree"),
                 "progenerator, summand and splitting conditions agree");
    if (k.name != "k^C2") continue;
    bool ok = s.splitting.has_value();
    std::string w = ok ? "" : "no splitting";
    if (ok) {
      const Matrix& pi = *s.splitting;  // M -> N coordinates
      const Extension& e = k.g.ext;
      Matrix proj = e.n.embed * pi;
      ok = proj * proj == proj && pi * e.n.embed == Matrix::identity(f_of(e), e.n.dim());
      for (std::size_t j = 0; j < e.n.dim(); ++j) {
        Vec nc = unit_vec(f_of(e), e.n.dim(), j);
        ok = ok && pi * e.m.left_mult(e.n.to_ambient(nc)) == e.n.algebra.left_mult(nc) * pi;
      }
      if (!ok) w = "projection is not a left N-linear idempotent onto N";
    }
    rep.record(p + ".unit_splitting_exhibited", ok, "an explicit left N-linear projection M -> N fixing N", w);
  }
  return rep;
}

Report criterion10(const Field& f) {
  Report rep;
  const Field q = Field::rationals();
  DoubleAlgebra c2 = dda_from_hopf(group_hopf(group_by_name("C2"), f));
  {
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < c2.dim(); ++i)
      for (std::size_t j = 0; j < c2.dim(); ++j) prods.push_back(c2.vertical.product(i, j));
    prods[3][0] += f.one();
    DoubleAlgebra bad{StructAlgebra(c2.vertical.space(), prods, c2.vertical.unit()), c2.horizontal};
    expect_rejected(rep, "robustness.corrupted_constants", analyze_double_algebra(bad).report,
                    "a perturbed vertical structure constant");
  }
  {
    DoubleAlgebra s3 = dda_from_hopf(group_hopf(group_by_name("S3"), usable(f, group_by_name("S3")) ? f : q));
    expect_rejected(rep, "robustness.broken_distributivity",
                    analyze_double_algebra(DoubleAlgebra{s3.horizontal, s3.horizontal}).report,
                    "kS3 with both products equal", "dda.distributivity.");
  }
  {
    DdaContext c = make_context(c2);
    HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(f, 2), "trivial_action");
    expect_rejected(rep, "robustness.non_galois_action", decide_galois(c, m).report, "the trivial action on k^2",
                    "galois.condition");
    HModuleAlgebra bad = function_module_algebra(c, group_by_name("C2"));
    bad.module.act[1](0, 0) += f.one();
    Report r;
    check_module_algebra(c, bad, r, "module_algebra");
    expect_rejected(rep, "robustness.corrupted_action", r, "a perturbed action matrix");
  }
  // Q and F_p agree where the characteristic permits.
  for (std::uint64_t p : {5, 7}) {
    Field fp = Field::prime(p);
    for (const char* name : {"C2", "C3", "S3"}) {
      Group g = group_by_name(name);
      DdaContext cq = group_context(g, q), cp = group_context(g, fp);
      GaloisReport a = decide_galois(cq, function_module_algebra(cq, g));
      GaloisReport b = decide_galois(cp, function_module_algebra(cp, g));
      bool same = true;
      for (std::size_t i = 0; i < 6; ++i) same = same && a.conditions[i].holds == b.conditions[i].holds;
      rep.record("robustness.q_fp_agree.F" + std::to_string(p) + "." + name, same,
                 "the six Galois conditions agree over Q and F_p");
      bool dims = cq.get(Base::R).sub.dim() == cp.get(Base::R).sub.dim() &&
                  cq.get(Base::B).sub.dim() == cp.get(Base::B).sub.dim();
      rep.record("robustness.q_fp_base_dims.F" + std::to_string(p) + "." + name, dims,
                 "base algebra dimensions agree over Q and F_p");
    }
  }
  return rep;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const Field& f = options.field;
  std::vector<GaloisCase> universe = galois_universe(f);
  std::vector<std::pair<std::string, std::function<Report()>>> criteria{
      {"double algebra validity", [&] { return criterion1(f); }},
      {"antipode", [&] { return criterion2(f); }},
      {"six-way Galois equivalence", [&] { return criterion3(universe); }},
      {"Kreimer-Takeuchi dual basis", [&] { return criterion4(universe); }},
      {"Galois implies Frobenius, balanced, D2 and the endomorphism converse", [&] { return criterion5(universe, f); }},
      {"noncommutative scalars", [&] { return criterion6(f); }},
      {"fiber functor and left distributivity", [&] { return criterion7(universe, f); }},
      {"monoidal duality for the endomorphism instance", [&] { return criterion8(f); }},
      {"structure theorem module-level equivalences", [&] { return criterion9(universe); }},
      {"robustness", [&] { return criterion10(f); }},
  };
  std::vector<std::function<Report()>> tasks;
  for (const auto& c : criteria) tasks.push_back(c.second);
  std::vector<Report> reports = run_parallel(tasks, options.threads);
  std::vector<CriterionResult> out;
  for (std::size_t k = 0; k < criteria.size(); ++k)
    out.push_back({static_cast<int>(k + 1), criteria[k].first, std::move(reports[k])});
  return out;
}

}  // namespace ddalab
