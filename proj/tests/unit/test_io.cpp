#include <gtest/gtest.h>

#include "ddalab/instances.hpp"
#include "ddalab/io.hpp"

using namespace ddalab;

namespace {

const Field Q = Field::rationals();

Json doc(const std::string& text) { return Json::parse(text); }

std::string pointer_of(const Json& j) {
  try {
    build_instance(j);
  } catch (const input_error& e) {
    return e.pointer();
  }
  return "<no error>";
}

}  // namespace

TEST(Io, TrivialDdaRoundTrip) {
  Json d = dda_document(trivial_dda(Q), "trivial");
  Instance in = build_instance(d);
  EXPECT_EQ(dda_document(*in.dda, "trivial").dump(), d.dump());
}

TEST(Io, GroupDdaRoundTripKeepsReducedFractions) {
  Instance g = build_instance(doc(R"({"schema": "dda-lab/1", "kind": "group-dda", "field": "Q", "group": "C2"})"));
  Json saved = dda_document(*g.dda, "C2");
  // Vertical structure constants of kC2 involve 1/2.
  EXPECT_NE(saved.dump().find("\"1/2\""), std::string::npos);
  Instance back = build_instance(saved);
  EXPECT_EQ(dda_document(*back.dda, "C2").dump(), saved.dump());
  EXPECT_EQ(back.dda->vertical.unit(), g.dda->vertical.unit());
}

TEST(Io, UnreducedFractionsAreNormalized) {
  Json d = dda_document(trivial_dda(Q), "t");
  d["vertical"]["products"][0][0] = "2/2";
  Json once = dda_document(*build_instance(d).dda, "t");
  EXPECT_EQ(once["vertical"]["products"][0][0], "1/1");
  EXPECT_EQ(dda_document(*build_instance(once).dda, "t").dump(), once.dump());
}

TEST(Io, ModuleAlgebraRoundTrip) {
  Instance in = build_instance(doc(R"({"schema": "dda-lab/1", "kind": "function-module", "field": "Q", "group": "C3"})"));
  DdaContext c = make_context(*in.dda);
  HModuleAlgebra m = in.module(c);
  Json saved = module_algebra_document(c.d, m);
  Instance back = build_instance(saved);
  DdaContext c2 = make_context(*back.dda);
  HModuleAlgebra m2 = back.module(c2);
  EXPECT_EQ(module_algebra_document(c2.d, m2).dump(), saved.dump());
}

TEST(Io, MalformedFieldTag) {
  EXPECT_EQ(pointer_of(doc(R"({"schema": "dda-lab/1", "kind": "trivial", "field": "R"})")), "/field");
  EXPECT_EQ(pointer_of(doc(R"({"schema": "dda-lab/1", "kind": "trivial", "field": "Fp", "p": 6})")), "/p");
}

TEST(Io, SchemaErrorsCarryPointers) {
  EXPECT_EQ(pointer_of(doc(R"({"kind": "trivial", "field": "Q"})")), "/schema");
  EXPECT_EQ(pointer_of(doc(R"({"schema": "dda-lab/1", "kind": "nope", "field": "Q"})")), "/kind");
  EXPECT_EQ(pointer_of(doc(R"({"schema": "dda-lab/1", "kind": "group-dda", "field": "Q", "group": "D9"})")), "/group");
  EXPECT_EQ(pointer_of(doc(R"({"schema": "dda-lab/1", "kind": "group-dda", "field": "Fp", "p": 3, "group": "C3"})")),
            "/p");
  Json d = dda_document(trivial_dda(Q), "t");
  d["horizontal"]["products"][0][0] = "x";
  EXPECT_EQ(pointer_of(d), "/horizontal/products/0/0");
  d = dda_document(trivial_dda(Q), "t");
  d["vertical"]["products"] = Json::array();
  EXPECT_EQ(pointer_of(d), "/vertical/products");
}

TEST(Io, FieldOverride) {
  Json d = doc(R"({"schema": "dda-lab/1", "kind": "group-dda", "field": "Q", "group": "S3"})");
  Instance in = build_instance(d, Field::prime(7));
  EXPECT_EQ(in.dda->field(), Field::prime(7));
}

TEST(Io, ReportIsSortedById) {
  Report r;
  r.pass("b.second");
  r.fail("a.first", "detail", "witness");
  Json j = report_to_json(r, "check", "x");
  EXPECT_EQ(j["checks"][0]["id"], "a.first");
  EXPECT_EQ(j["checks"][0]["witness"], "witness");
  EXPECT_FALSE(j["ok"].get<bool>());
}
