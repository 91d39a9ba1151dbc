#include "ddalab/io.hpp"

#include <fstream>
#include <sstream>

#include "ddalab/instances.hpp"

namespace ddalab {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw input_error(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(child(ptr, key), "missing");
  return *it;
}

const Json& array_of(const Json& j, std::size_t n, const std::string& ptr) {
  if (!j.is_array()) throw input_error(ptr, "expected an array");
  if (j.size() != n) throw input_error(ptr, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::string string_of(const Json& j, const std::string& ptr) {
  if (!j.is_string()) throw input_error(ptr, "expected a string");
  return j.get<std::string>();
}

std::size_t size_of(const Json& j, const std::string& ptr, std::size_t lo, std::size_t hi) {
  if (!j.is_number_integer()) throw input_error(ptr, "expected an integer");
  long long v = j.get<long long>();
  if (v < static_cast<long long>(lo) || v > static_cast<long long>(hi))
    throw input_error(ptr, "expected a value in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<std::size_t>(v);
}

Group group_from_json(const Json& j, const std::string& ptr) {
  if (j.is_string()) {
    try {
      return group_by_name(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw input_error(ptr, e.what());
    }
  }
  Group g;
  g.name = j.contains("name") ? string_of(j["name"], child(ptr, "name")) : "G";
  const Json& labels = member(j, "labels", ptr);
  if (!labels.is_array() || labels.empty()) throw input_error(child(ptr, "labels"), "expected a non-empty array");
  for (std::size_t i = 0; i < labels.size(); ++i) g.labels.push_back(string_of(labels[i], child(child(ptr, "labels"), i)));
  const std::size_t n = g.order();
  const Json& table = array_of(member(j, "table", ptr), n, child(ptr, "table"));
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rp = child(child(ptr, "table"), a);
    const Json& row = array_of(table[a], n, rp);
    for (std::size_t b = 0; b < n; ++b) g.table.push_back(size_of(row[b], child(rp, b), 0, n - 1));
  }
  // Identity first, associativity and inverses.
  for (std::size_t a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw input_error(child(ptr, "table"), "element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw input_error(child(ptr, "table"), "not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                                                     ", " + std::to_string(c) + ")");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = g.mul(a, b) == 0;
    if (!found) throw input_error(child(ptr, "table"), "element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

Field field_of(const Json& doc, std::optional<Field> override) { return override ? *override : field_from_json(doc); }

std::string name_of(const Json& doc, const std::string& fallback) {
  return doc.contains("name") ? string_of(doc["name"], "/name") : fallback;
}

void header(Json& doc, const std::string& kind, const std::string& name, const Field& f,
            const std::string& derived_from) {
  doc["schema"] = kSchema;
  doc["kind"] = kind;
  doc["name"] = name;
  field_to_json(f, doc);
  if (!derived_from.empty()) doc["derived_from"] = derived_from;
}

DoubleAlgebra dda_from_document(const Json& doc, const Field& f, const std::string& ptr) {
  StructAlgebra v = algebra_from_json(member(doc, "vertical", ptr), f, child(ptr, "vertical"));
  StructAlgebra h = algebra_from_json(member(doc, "horizontal", ptr), f, child(ptr, "horizontal"));
  if (v.dim() != h.dim()) throw input_error(child(ptr, "horizontal"), "dimension differs from the vertical algebra");
  if (v.space().labels != h.space().labels) throw input_error(child(child(ptr, "horizontal"), "labels"), "labels differ from the vertical algebra");
  return DoubleAlgebra{std::move(v), std::move(h)};
}

Instance group_instance(const Json& doc, const Field& f, const std::string& kind) {
  Instance in;
  in.kind = kind;
  in.field = f;
  Group g = group_from_json(member(doc, "group", ""), "/group");
  if (!f.is_rational() && g.order() % f.characteristic() == 0)
    throw input_error("/p", "characteristic divides the group order " + std::to_string(g.order()));
  in.name = name_of(doc, kind + ":" + g.name);
  in.hopf = group_hopf(g, f);
  in.dda = dda_from_hopf(*in.hopf);
  if (kind == "function-module") {
    in.module = [g](const DdaContext& c) { return function_module_algebra(c, g); };
  } else if (kind == "self-module") {
    in.module = [](const DdaContext& c) { return self_module_algebra(c); };
  } else if (kind == "trivial-action") {
    const Json& a = member(doc, "algebra", "");
    StructAlgebra alg;
    if (a.is_object() && a.contains("diagonal")) {
      alg = diagonal_algebra(f, size_of(a["diagonal"], "/algebra/diagonal", 1, 16));
    } else if (a.is_object() && a.contains("matrix")) {
      alg = matrix_algebra(f, size_of(a["matrix"], "/algebra/matrix", 1, 4));
    } else {
      alg = algebra_from_json(a, f, "/algebra");
    }
    std::string mname = in.name;
    in.module = [alg, mname](const DdaContext& c) { return trivial_action_module_algebra(c, alg, mname); };
  }
  return in;
}

}  // namespace

Field field_from_json(const Json& doc) {
  const Json& tag = member(doc, "field", "");
  if (!tag.is_string()) throw input_error("/field", "expected \"Q\" or \"Fp\"");
  std::string t = tag.get<std::string>();
  if (t == "Q") return Field::rationals();
  if (t != "Fp") throw input_error("/field", "expected \"Q\" or \"Fp\", found \"" + t + "\"");
  const Json& p = member(doc, "p", "");
  if (!p.is_number_integer() || p.get<long long>() < 2) throw input_error("/p", "expected a prime");
  try {
    return Field::prime(p.get<std::uint64_t>());
  } catch (const std::invalid_argument& e) {
    throw input_error("/p", e.what());
  }
}

void field_to_json(const Field& f, Json& doc) {
  if (f.is_rational()) {
    doc["field"] = "Q";
  } else {
    doc["field"] = "Fp";
    doc["p"] = f.characteristic();
  }
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const Field& f, const std::string& ptr) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw input_error(ptr, e.what());
  }
  throw input_error(ptr, "expected a number or a fraction string");
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Vec vec_from_json(const Json& j, const Field& f, std::size_t dim, const std::string& ptr) {
  array_of(j, dim, ptr);
  Vec v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(scalar_from_json(j[i], f, child(ptr, i)));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& ptr) {
  array_of(j, rows, ptr);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vec r = vec_from_json(j[i], f, cols, child(ptr, i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

Json algebra_to_json(const StructAlgebra& a) {
  Json out;
  out["labels"] = a.space().labels;
  Json prods = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) prods.push_back(vec_to_json(a.product(i, j)));
  out["products"] = std::move(prods);
  if (a.has_unit()) out["unit"] = vec_to_json(a.unit());
  return out;
}

StructAlgebra algebra_from_json(const Json& j, const Field& f, const std::string& ptr) {
  const Json& labels = member(j, "labels", ptr);
  if (!labels.is_array() || labels.empty()) throw input_error(child(ptr, "labels"), "expected a non-empty array");
  FinSpace space{f, {}};
  for (std::size_t i = 0; i < labels.size(); ++i) space.labels.push_back(string_of(labels[i], child(child(ptr, "labels"), i)));
  const std::size_t n = space.dim();
  const Json& prods = array_of(member(j, "products", ptr), n * n, child(ptr, "products"));
  std::vector<Vec> products;
  for (std::size_t k = 0; k < n * n; ++k) products.push_back(vec_from_json(prods[k], f, n, child(child(ptr, "products"), k)));
  std::optional<Vec> unit;
  if (j.contains("unit")) unit = vec_from_json(j["unit"], f, n, child(ptr, "unit"));
  return StructAlgebra(std::move(space), std::move(products), std::move(unit));
}

Json dda_document(const DoubleAlgebra& d, const std::string& name, const std::string& derived_from) {
  Json doc;
  header(doc, "double-algebra", name, d.field(), derived_from);
  doc["vertical"] = algebra_to_json(d.vertical);
  doc["horizontal"] = algebra_to_json(d.horizontal);
  return doc;
}

Json module_algebra_document(const DoubleAlgebra& d, const HModuleAlgebra& m, const std::string& derived_from) {
  Json doc;
  header(doc, "module-algebra", m.name, d.field(), derived_from);
  doc["dda"] = dda_document(d, m.name + "/H");
  doc["algebra"] = algebra_to_json(m.algebra);
  Json act = Json::array();
  for (const auto& a : m.module.act) act.push_back(matrix_to_json(a));
  doc["action"] = std::move(act);
  doc["eta"] = matrix_to_json(m.eta);
  return doc;
}

Json algebra_document(const StructAlgebra& a, const std::string& name, const std::string& derived_from) {
  Json doc;
  header(doc, "algebra", name, a.field(), derived_from);
  doc["algebra"] = algebra_to_json(a);
  return doc;
}

Instance build_instance(const Json& doc, std::optional<Field> field_override) {
  if (!doc.is_object()) throw input_error("", "expected a JSON object");
  const Json& schema = member(doc, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kSchema)
    throw input_error("/schema", std::string("expected \"") + kSchema + "\"");
  const std::string kind = string_of(member(doc, "kind", ""), "/kind");
  const Field f = field_of(doc, field_override);

  if (kind == "trivial") {
    Instance in;
    in.kind = kind;
    in.field = f;
    in.name = name_of(doc, "trivial");
    in.hopf = group_hopf(trivial_group(), f);
    in.dda = trivial_dda(f);
    return in;
  }
  if (kind == "group-dda" || kind == "function-module" || kind == "self-module" || kind == "trivial-action")
    return group_instance(doc, f, kind);
  if (kind == "double-algebra") {
    Instance in;
    in.kind = kind;
    in.field = f;
    in.name = name_of(doc, "dda");
    in.dda = dda_from_document(doc, f, "");
    return in;
  }
  if (kind == "module-algebra") {
    Instance in;
    in.kind = kind;
    in.field = f;
    in.name = name_of(doc, "M");
    const Json& inner = member(doc, "dda", "");
    in.dda = dda_from_document(inner, f, "/dda");
    const std::size_t n = in.dda->dim();
    StructAlgebra alg = algebra_from_json(member(doc, "algebra", ""), f, "/algebra");
    if (!alg.has_unit()) throw input_error("/algebra/unit", "a module algebra needs a unit");
    const std::size_t dm = alg.dim();
    const Json& act = array_of(member(doc, "action", ""), n, "/action");
    RightHModule mod{alg.space(), {}};
    for (std::size_t h = 0; h < n; ++h) mod.act.push_back(matrix_from_json(act[h], f, dm, dm, child("/action", h)));
    std::optional<Json> eta;
    if (doc.contains("eta")) eta = doc["eta"];
    std::string name = in.name;
    in.module = [alg, mod, eta, f, name](const DdaContext& c) {
      HModuleAlgebra m = make_module_algebra(c, name, mod, alg);
      if (eta) m.eta = matrix_from_json(*eta, f, m.dim(), c.get(Base::R).sub.dim(), "/eta");
      return m;
    };
    return in;
  }
  if (kind == "matrix-extension") {
    Instance in;
    in.kind = kind;
    in.field = f;
    std::size_t n = size_of(member(doc, "n", ""), "/n", 1, 4);
    in.extension = matrix_extension(f, n);
    in.name = name_of(doc, in.extension->name);
    return in;
  }
  if (kind == "extension") {
    Instance in;
    in.kind = kind;
    in.field = f;
    in.name = name_of(doc, "extension");
    StructAlgebra alg = algebra_from_json(member(doc, "algebra", ""), f, "/algebra");
    const Json& span = member(doc, "subalgebra", "");
    if (!span.is_array() || span.empty()) throw input_error("/subalgebra", "expected a non-empty array of vectors");
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < span.size(); ++i) vs.push_back(vec_from_json(span[i], f, alg.dim(), child("/subalgebra", i)));
    std::optional<Matrix> psi;
    if (doc.contains("psi")) psi = matrix_from_json(doc["psi"], f, alg.dim(), alg.dim(), "/psi");
    try {
      in.extension = extension_from_span(in.name, std::move(alg), vs, std::move(psi));
    } catch (const not_closed& e) {
      throw input_error("/subalgebra", e.what());
    }
    return in;
  }
  throw input_error("/kind", "unknown kind \"" + kind + "\"");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw input_error("", std::string("invalid JSON: ") + e.what());
  }
}

void save_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw input_error("", "cannot write " + path);
  out << doc.dump(2) << "\n";
}

Instance load_instance(const std::string& path, std::optional<Field> field_override) {
  return build_instance(load_json(path), field_override);
}

Json report_to_json(const Report& r, const std::string& command, const std::string& instance) {
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "report";
  doc["command"] = command;
  doc["instance"] = instance;
  doc["ok"] = r.ok();
  doc["total"] = r.checks().size();
  doc["failed"] = r.failures();
  Json checks = Json::array();
  for (const auto& c : r.sorted()) {
    Json e;
    e["id"] = c.id;
    e["holds"] = c.holds;
    e["detail"] = c.detail;
    if (!c.holds) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.sorted()) {
    out << (c.holds ? "PASS " : "FAIL ") << c.id << ": " << c.detail;
    if (!c.holds && !c.witness.empty()) out << " [witness: " << c.witness << "]";
    out << "\n";
  }
  out << (r.ok() ? "ok" : "FAILED") << ": " << r.checks().size() - r.failures() << " of " << r.checks().size()
      << " checks hold\n";
  return out.str();
}

}  // namespace ddalab
