#include "ddalab/pipelines.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "ddalab/antipode.hpp"
#include "ddalab/braided.hpp"
#include "ddalab/duality.hpp"

namespace ddalab {

namespace {

std::optional<DdaContext> context_of(const DoubleAlgebra& d, Report& rep) {
  DdaAnalysis a = analyze_double_algebra(d);
  rep.merge(a.report);
  if (!a.valid()) return std::nullopt;
  return DdaContext{d, std::move(*a.base), std::move(*a.comul)};
}

struct Endo {
  EndoConstruction ec;
  FrobeniusExtension fe;
};

// Frobenius data from the supplied psi, the balanced and D2 properties, and the endomorphism double algebra.
std::optional<Endo> endo_of(const Extension& e, Report& rep) {
  if (!e.psi) {
    rep.fail("extension.psi_supplied", "a Frobenius map psi: M -> N is supplied", e.name);
    return std::nullopt;
  }
  auto fe = frobenius_from_psi(e, *e.psi, rep, "extension.frobenius");
  if (!fe) return std::nullopt;
  check_frobenius_extension(e, *fe, rep, "extension.frobenius");
  rep.merge(check_balanced_and_d2(e).report);
  EndoConstruction ec = endo_double_algebra(e, *fe);
  rep.record("extension.endo_dimension_within_limit", ec.end.dim() <= kMaxEndoDim,
             "End(_N M_N) is small enough for the double algebra suite",
             "dimension " + std::to_string(ec.end.dim()) + " exceeds " + std::to_string(kMaxEndoDim));
  if (ec.end.dim() > kMaxEndoDim) return std::nullopt;
  return Endo{std::move(ec), std::move(*fe)};
}

struct Resolved {
  DdaContext c;
  HModuleAlgebra m;
};

// Context and module algebra of an instance; failures are recorded in rep.
std::optional<Resolved> resolve(const Instance& in, Report& rep) {
  if (in.extension) {
    auto endo = endo_of(*in.extension, rep);
    if (!endo) return std::nullopt;
    auto c = context_of(endo->ec.dda, rep);
    if (!c) return std::nullopt;
    HModuleAlgebra m = endo_module_algebra(*c, *in.extension, endo->ec);
    return Resolved{std::move(*c), std::move(m)};
  }
  if (!in.dda) {
    rep.fail("instance.has_double_algebra", "the instance provides a double algebra", in.kind);
    return std::nullopt;
  }
  auto c = context_of(*in.dda, rep);
  if (!c) return std::nullopt;
  if (!in.module) {
    rep.fail("instance.has_module_algebra", "the instance provides a module algebra", in.kind);
    return std::nullopt;
  }
  HModuleAlgebra m = in.module(*c);
  return Resolved{std::move(*c), std::move(m)};
}

}  // namespace

std::vector<Report> run_parallel(const std::vector<std::function<Report()>>& tasks, std::size_t threads) {
  std::vector<Report> out(tasks.size());
  threads = std::max<std::size_t>(1, std::min(threads, tasks.size()));
  if (threads == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) out[k] = tasks[k]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) {
        try {
          out[k] = tasks[k]();
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::size_t default_threads() {
  if (const char* env = std::getenv("DDA_LAB_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PipelineResult check_dda(const Instance& in) {
  PipelineResult r;
  if (in.hopf) check_hopf(*in.hopf, r.report);
  if (in.extension) {
    auto endo = endo_of(*in.extension, r.report);
    if (endo) context_of(endo->ec.dda, r.report);
  } else if (in.dda) {
    context_of(*in.dda, r.report);
  }
  return r;
}

PipelineResult derive_hopf(const Instance& in) {
  PipelineResult r;
  Report& rep = r.report;
  std::optional<DoubleAlgebra> d = in.dda;
  if (in.extension) {
    auto endo = endo_of(*in.extension, rep);
    if (!endo) return r;
    d = endo->ec.dda;
  }
  if (!d) return r;
  auto c = context_of(*d, rep);
  if (!c) return r;
  AntipodeResult ar = solve_antipode(*c);
  rep.record("antipode.unique", ar.status == AntipodeStatus::unique, "the antipode equations have a unique solution",
             std::string(antipode_status_name(ar.status)) + (ar.witness.empty() ? "" : ": " + ar.witness));
  rep.merge(ar.report);
  Json out;
  out["schema"] = kSchema;
  out["kind"] = "hopf-algebroid";
  out["name"] = in.name;
  field_to_json(c->d.field(), out);
  out["antipode_status"] = antipode_status_name(ar.status);
  Json bases;
  for (Base b : kBases) bases[base_name(b)] = c->get(b).sub.dim();
  out["base_dims"] = bases;
  if (ar.antipode) {
    out["antipode"] = matrix_to_json(ar.antipode->s);
    out["antipode_inverse"] = matrix_to_json(ar.antipode->s_inverse);
    if (in.hopf)
      rep.record("antipode.matches_transported", ar.antipode->s == transported_antipode(*in.hopf),
                 "the solved antipode equals the transported Hopf antipode");
  }
  out["dda"] = dda_document(c->d, in.name);
  r.output = std::move(out);
  return r;
}

PipelineResult check_galois(const Instance& in, std::size_t threads) {
  PipelineResult r;
  Report& rep = r.report;
  auto res = resolve(in, rep);
  if (!res) return r;
  const DdaContext& c = res->c;
  const HModuleAlgebra& m = res->m;
  check_module_algebra(c, m, rep, "module_algebra");
  GaloisMaps g = build_galois_maps(c, m);
  GaloisReport gr = decide_galois(c, m, g);
  rep.merge(gr.report);
  std::vector<std::function<Report()>> tasks;
  tasks.push_back([&] { return structure_theorem_conditions(c, m, g, gr).report; });
  if (gr.galois())
    tasks.push_back([&] {
      // Galois implies Frobenius with psi = (.) < e, balanced and D2.
      Report t;
      auto fe = frobenius_extension_data(c, m, g, t, "galois.frobenius");
      if (fe) check_frobenius_extension(g.ext, *fe, t, "galois.frobenius");
      t.merge(check_balanced_and_d2(g.ext).report, "galois.");
      return t;
    });
  tasks.push_back([&] {
    Report t;
    AntipodeResult ar = solve_antipode(c);
    if (ar.antipode)
      check_phi(c, g, ar.antipode->s, t, "galois.phi");
    else
      t.fail("galois.phi.antipode", "an antipode is available for phi", antipode_status_name(ar.status));
    return t;
  });
  for (const auto& t : run_parallel(tasks, threads)) rep.merge(t);
  return r;
}

PipelineResult build_smash(const Instance& in, bool scalars) {
  PipelineResult r;
  Report& rep = r.report;
  auto res = resolve(in, rep);
  if (!res) return r;
  const DdaContext& c = res->c;
  const HModuleAlgebra& m = res->m;
  SmashAlgebra s = smash_product(c, m);
  check_smash(c, m, s, rep, "smash");
  if (!scalars) {
    r.output = algebra_document(s.algebra, "H#" + m.name, in.name);
    return r;
  }
  GaloisMaps g = build_galois_maps(c, m);
  GaloisReport gr = decide_galois(c, m, g);
  if (!gr.galois()) {
    rep.fail("scalars.galois", "the centralizer construction needs a Galois extension", "gamma^M is not bijective");
    return r;
  }
  CentralizerBCA cb = centralizer_bca(c, m, g);
  check_bca(c, cb.bca, rep, "scalars.centralizer");
  check_centralizer(c, m, cb, rep, "scalars.centralizer");
  ScalarExtension se = scalar_extension(c, cb.bca);
  check_scalar_extension(c, cb.bca, se, rep, "scalars.extension");
  check_tensor_with_q_strong_monoidal(c, cb.bca, rep, "scalars");
  endo_hopf_algebroid(c, m, g, cb, rep, "scalars.endo");
  r.output = dda_document(se.dda, "A#" + cb.bca.q.name, in.name);
  return r;
}

PipelineResult build_endo(const Instance& in) {
  PipelineResult r;
  Report& rep = r.report;
  Extension e;
  if (in.extension) {
    e = *in.extension;
  } else {
    auto res = resolve(in, rep);
    if (!res) return r;
    e = invariant_extension(res->c, res->m);
  }
  auto endo = endo_of(e, rep);
  if (!endo) return r;
  auto c = context_of(endo->ec.dda, rep);
  if (!c) return r;
  HModuleAlgebra m = endo_module_algebra(*c, e, endo->ec);
  check_module_algebra(*c, m, rep, "endo.module_algebra");
  r.output = module_algebra_document(c->d, m, in.name);
  return r;
}

PipelineResult check_duality(const Instance& in, std::size_t threads) {
  PipelineResult r;
  Report& rep = r.report;
  auto res = resolve(in, rep);
  if (!res) return r;
  const DdaContext& c = res->c;
  const HModuleAlgebra& m = res->m;
  GaloisMaps g = build_galois_maps(c, m);
  GaloisReport gr = decide_galois(c, m, g);
  std::vector<std::function<Report()>> tasks{
      [&] {
        Report t;
        gamma_rb(c, t, "duality.gamma_rb");
        return t;
      },
      [&] { return opmonoidal_constraints(c, m, g, gr).report; },
      [&] { return left_distributivity_check(c, m, g, gr).report; },
      [&] { return reflexivity_and_duality(c, m, standard_test_objects(c)).report; },
  };
  for (const auto& t : run_parallel(tasks, threads)) rep.merge(t);
  return r;
}

}  // namespace ddalab
