#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "ddalab/galois.hpp"
#include "ddalab/hopf.hpp"

namespace ddalab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dda-lab/1";

// Malformed input; pointer is the JSON pointer of the offending value ("" for the document).
class input_error : public std::runtime_error {
 public:
  input_error(std::string pointer, const std::string& message)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// "field": "Q" | "Fp" with "p" for Fp.
Field field_from_json(const Json& doc);
void field_to_json(const Field& f, Json& doc);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& f, const std::string& ptr);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const Field& f, std::size_t dim, const std::string& ptr);
// Array of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& ptr);

// {"labels", "products": [b_i b_j for i, j row-major], "unit"}.
Json algebra_to_json(const StructAlgebra& a);
StructAlgebra algebra_from_json(const Json& j, const Field& f, const std::string& ptr);

// Complete documents.
Json dda_document(const DoubleAlgebra& d, const std::string& name, const std::string& derived_from = {});
Json module_algebra_document(const DoubleAlgebra& d, const HModuleAlgebra& m, const std::string& derived_from = {});
Json algebra_document(const StructAlgebra& a, const std::string& name, const std::string& derived_from = {});

// A loaded instance. Extension kinds carry no double algebra until the endomorphism
// construction has been run on them.
struct Instance {
  std::string kind;
  std::string name;
  Field field;
  std::optional<DoubleAlgebra> dda;
  std::optional<HopfData> hopf;                              // group instances
  std::function<HModuleAlgebra(const DdaContext&)> module;  // empty without a module algebra
  std::optional<Extension> extension;
};

// Kinds: trivial, group-dda, double-algebra, function-module, trivial-action, self-module,
// module-algebra, matrix-extension, extension. field_override replaces "field" for the
// parametric kinds and reinterprets the entries of explicit ones.
Instance build_instance(const Json& doc, std::optional<Field> field_override = std::nullopt);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& doc);
Instance load_instance(const std::string& path, std::optional<Field> field_override = std::nullopt);

// Checks sorted by id.
Json report_to_json(const Report& r, const std::string& command, const std::string& instance);
std::string report_to_text(const Report& r);

}  // namespace ddalab
