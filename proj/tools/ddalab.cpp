#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ddalab/acceptance.hpp"
#include "ddalab/pipelines.hpp"

using namespace ddalab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string field;
  std::uint64_t p = 0;
  std::string format = "text";
  bool parallel = false;
  std::string output;
  std::vector<std::string> inputs;
  bool scalars = false;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) {
    if (o.p) throw input_error("", "--p requires --field Fp");
    return std::nullopt;
  }
  if (o.field == "Q") {
    if (o.p) throw input_error("", "--p is only meaningful with --field Fp");
    return Field::rationals();
  }
  if (o.field == "Fp") {
    if (!o.p) throw input_error("", "--field Fp requires --p");
    try {
      return Field::prime(o.p);
    } catch (const std::invalid_argument& e) {
      throw input_error("", e.what());
    }
  }
  throw input_error("", "--field must be Q or Fp, got " + o.field);
}

std::size_t threads(const Options& o) { return o.parallel ? default_threads() : 1; }

void emit(const Report& r, const Options& o, const std::string& command, const std::string& instance) {
  if (o.format == "json")
    std::cout << report_to_json(r, command, instance).dump(2) << "\n";
  else
    std::cout << report_to_text(r);
}

int finish(const PipelineResult& res, const Options& o, const std::string& command, const std::string& instance) {
  emit(res.report, o, command, instance);
  // Build commands write their document; check commands write the JSON report.
  if (!o.output.empty()) save_json(o.output, res.output ? *res.output : report_to_json(res.report, command, instance));
  return res.report.ok() ? kExitPass : kExitCheckFailure;
}

int run_instance_command(const std::string& verb, const Options& o) {
  if (o.inputs.size() != 1) throw input_error("", verb + " takes exactly one input file");
  Instance in = load_instance(o.inputs[0], field_override(o));
  PipelineResult res;
  if (verb == "check-dda")
    res = check_dda(in);
  else if (verb == "derive-hopf")
    res = derive_hopf(in);
  else if (verb == "check-galois")
    res = check_galois(in, threads(o));
  else if (verb == "build-smash")
    res = build_smash(in, o.scalars);
  else if (verb == "build-endo")
    res = build_endo(in);
  else
    res = check_duality(in, threads(o));
  return finish(res, o, verb, in.name);
}

// The acceptance suite, followed by check-dda on any given instances.
int run_selftest(const Options& o) {
  AcceptanceOptions a;
  if (auto f = field_override(o)) a.field = *f;
  a.threads = threads(o);
  Report rep;
  for (const auto& c : run_acceptance(a)) {
    rep.merge(c.report, "criterion" + std::to_string(c.number) + ".");
    rep.record("selftest.criterion" + std::to_string(c.number), c.passed(), c.title, "see failing checks");
  }
  for (const auto& path : o.inputs) {
    Instance in = load_instance(path, field_override(o));
    rep.merge(check_dda(in).report, "instance." + in.name + ".");
  }
  emit(rep, o, "selftest", "bundled");
  if (!o.output.empty()) save_json(o.output, report_to_json(rep, "selftest", "bundled"));
  return rep.ok() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for distributive double algebras and their Galois theory"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "Coefficient field: Q or Fp")->check(CLI::IsMember({"Q", "Fp"}));
  app.add_option("--p", o.p, "Characteristic for --field Fp");
  app.add_option("--report-format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--parallel", o.parallel, "Run independent checks concurrently (DDA_LAB_THREADS caps the workers)");

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"check-dda", "Validate a double algebra: base algebras, comultiplications, distributivity"},
      {"derive-hopf", "Derive the Hopf algebroid structure and solve for the antipode"},
      {"check-galois", "Decide the Galois conditions of a module algebra"},
      {"build-smash", "Build the smash product H#M"},
      {"build-endo", "Build the endomorphism double algebra of a Frobenius extension"},
      {"check-duality", "Fiber functor, left distributivity and reflexivity checks"},
      {"selftest", "Run the acceptance suite on the bundled instances"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.inputs, "Instance file(s)");
    sub->add_option("-o,--output", o.output, "Output document path");
    if (name == "build-smash") sub->add_flag("--scalars", o.scalars, "Also build the centralizer scalars and A#C");
    if (name != "selftest") sub->get_option("input")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  try {
    return verb == "selftest" ? run_selftest(o) : run_instance_command(verb, o);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const invalid_structure& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    emit(e.report(), o, verb, o.inputs.empty() ? "" : o.inputs[0]);
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
