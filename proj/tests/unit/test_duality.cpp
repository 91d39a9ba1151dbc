#include <gtest/gtest.h>

#include "ddalab/duality.hpp"
#include "ddalab/instances.hpp"

using namespace ddalab;

namespace {

const Field Q = Field::rationals();

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks()) EXPECT_TRUE(c.holds) << c.id << ": " << c.detail << " | " << c.witness;
}

DdaContext group_context(const char* name, const Field& f = Q) {
  return make_context(dda_from_hopf(group_hopf(group_by_name(name), f)));
}

struct Instance {
  DdaContext c;
  HModuleAlgebra m;
  GaloisMaps g;
  GaloisReport gr;
};

Instance instance(DdaContext c, HModuleAlgebra m) {
  GaloisMaps g = build_galois_maps(c, m);
  GaloisReport gr = decide_galois(c, m, g);
  return {std::move(c), std::move(m), std::move(g), std::move(gr)};
}

Instance function_instance(const char* name) {
  DdaContext c = group_context(name);
  HModuleAlgebra m = function_module_algebra(c, group_by_name(name));
  return instance(std::move(c), std::move(m));
}

Instance trivial_action_instance() {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(Q, 2), "trivial");
  return instance(std::move(c), std::move(m));
}

Instance matrix_endo_instance() {
  Extension e = matrix_extension(Q, 2);
  Report r;
  auto fe = frobenius_from_psi(e, *e.psi, r, "m2");
  EndoConstruction ec = endo_double_algebra(e, *fe);
  DdaContext c = make_context(ec.dda);
  HModuleAlgebra m = endo_module_algebra(c, e, ec);
  return instance(std::move(c), std::move(m));
}

}  // namespace

TEST(GammaRB, BijectiveOnSmallInstances) {
  struct Case {
    DdaContext c;
    std::size_t dim;
  };
  std::vector<Case> cases;
  cases.push_back({make_context(trivial_dda(Q)), 1});
  cases.push_back({group_context("C2"), 4});
  cases.push_back({group_context("C3"), 9});
  for (const auto& k : cases) {
    Report r;
    GammaRB g = gamma_rb(k.c, r, "duality.gamma_rb");
    expect_all_pass(r);
    EXPECT_TRUE(g.bijective);
    EXPECT_EQ(g.map.cols(), k.dim);
  }
}

TEST(Opmonoidal, GaloisFunctionAlgebraIsStrong) {
  Instance in = function_instance("C2");
  OpmonoidalReport o = opmonoidal_constraints(in.c, in.m, in.g, in.gr);
  expect_all_pass(o.report);
  EXPECT_TRUE(o.f0_iso);
  EXPECT_TRUE(o.fhh_iso);
  EXPECT_TRUE(o.strong);
  EXPECT_TRUE(o.data.skipped.empty());
}

TEST(Opmonoidal, TrivialActionIsNotStrong) {
  Instance in = trivial_action_instance();
  OpmonoidalReport o = opmonoidal_constraints(in.c, in.m, in.g, in.gr);
  EXPECT_TRUE(o.f0_iso);
  EXPECT_FALSE(o.fhh_iso);
  EXPECT_TRUE(o.square_commutes);
  EXPECT_TRUE(o.report.holds("duality.f2_hh_matches_galois"));
  EXPECT_TRUE(o.report.holds("duality.strong_matches_galois"));
  // F^{H,H} is not onto.
  for (const auto& p : o.data.pairs)
    if (o.data.objects[p.y].name == "H" && o.data.objects[p.y2].name == "H") EXPECT_LT(rank(p.f2), p.f2.rows());
}

TEST(Opmonoidal, TrivialDoubleAlgebraConstraintsAreIdentities) {
  DdaContext c = make_context(trivial_dda(Q));
  HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(Q, 1), "R");
  Instance in = instance(std::move(c), std::move(m));
  OpmonoidalReport o = opmonoidal_constraints(in.c, in.m, in.g, in.gr);
  expect_all_pass(o.report);
  EXPECT_EQ(o.data.f0, Matrix::identity(Q, 1));
  for (const auto& p : o.data.pairs) EXPECT_EQ(p.f2, Matrix::identity(Q, 1));
}

TEST(LeftDistributivity, HoldsOnGaloisInstances) {
  for (const char* name : {"C2", "C3"}) {
    Instance in = function_instance(name);
    LeftDistributivity l = left_distributivity_check(in.c, in.m, in.g, in.gr);
    expect_all_pass(l.report);
    EXPECT_TRUE(l.holds());
  }
}

TEST(LeftDistributivity, FailsWithWitnessOnTrivialAction) {
  Instance in = trivial_action_instance();
  LeftDistributivity l = left_distributivity_check(in.c, in.m, in.g, in.gr);
  EXPECT_FALSE(l.holds());
  EXPECT_TRUE(l.report.holds("duality.left_distributivity.matches_galois"));
  if (l.psi_frobenius) EXPECT_FALSE(l.witness.empty());
}

TEST(Reflexivity, TrivialInstance) {
  DdaContext c = make_context(trivial_dda(Q));
  HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(Q, 1), "R");
  ReflexivityReport r = reflexivity_and_duality(c, m, standard_test_objects(c));
  expect_all_pass(r.report);
  EXPECT_TRUE(r.all_reflexive);
}

TEST(Reflexivity, FunctionAlgebraRegularObjectIsM) {
  Instance in = function_instance("C2");
  ReflexivityReport r = reflexivity_and_duality(in.c, in.m, standard_test_objects(in.c));
  EXPECT_TRUE(r.report.holds("duality.k_regular_is_m"));
  EXPECT_TRUE(r.report.holds("duality.mate_unit"));
  for (const auto& c : r.report.checks())
    if (c.id.rfind("duality.mate.", 0) == 0 || c.id.find(".h_linear") != std::string::npos) EXPECT_TRUE(c.holds) << c.id;
  // N = k, so the double dual of H is End_k(M), of dimension 4 > dim H.
  EXPECT_FALSE(r.all_reflexive);
  expect_all_pass(r.report);
  ASSERT_EQ(r.sigma.size(), 3u);
  EXPECT_EQ(r.sigma[1].first, "H");
  EXPECT_FALSE(r.sigma[1].second);
}

TEST(Reflexivity, EndomorphismAlgebroidOfMatrixExtension) {
  Instance in = matrix_endo_instance();
  ASSERT_TRUE(in.gr.galois());
  ReflexivityReport r = reflexivity_and_duality(in.c, in.m, standard_test_objects(in.c));
  expect_all_pass(r.report);
  EXPECT_TRUE(r.all_reflexive);
  OpmonoidalReport o = opmonoidal_constraints(in.c, in.m, in.g, in.gr);
  expect_all_pass(o.report);
  EXPECT_TRUE(o.strong);
}

TEST(DualityProperty, DecisionProceduresAgree) {
  std::vector<Instance> all;
  for (const char* name : {"C2", "C3", "S3"}) all.push_back(function_instance(name));
  all.push_back(trivial_action_instance());
  {
    DdaContext c = group_context("C3");
    HModuleAlgebra m = self_module_algebra(c);
    all.push_back(instance(std::move(c), std::move(m)));
  }
  for (const auto& in : all) {
    Report r;
    gamma_rb(in.c, r, "duality.gamma_rb");
    EXPECT_TRUE(r.ok()) << in.m.name;
    OpmonoidalReport o = opmonoidal_constraints(in.c, in.m, in.g, in.gr);
    EXPECT_TRUE(o.square_commutes) << in.m.name;
    EXPECT_EQ(o.fhh_iso, in.gr.galois()) << in.m.name;
    LeftDistributivity l = left_distributivity_check(in.c, in.m, in.g, in.gr);
    EXPECT_EQ(l.holds(), in.gr.galois()) << in.m.name;
  }
}
