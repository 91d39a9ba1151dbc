#include <gtest/gtest.h>

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

std::vector<HModuleAlgebra> sample_modules(const DdaContext& c, const Group& g) {
  std::vector<HModuleAlgebra> out;
  out.push_back(function_module_algebra(c, g));
  out.push_back(self_module_algebra(c));
  out.push_back(trivial_action_module_algebra(c, diagonal_algebra(c.d.field(), 2), "trivial-action"));
  return out;
}

}  // namespace

TEST(Representation, ModuleAlgebraLawsOnGroupInstances) {
  for (const char* name : {"C2", "C3", "S3"}) {
    DdaContext c = group_context(name);
    for (const auto& m : sample_modules(c, group_by_name(name))) {
      Report r;
      check_module_algebra(c, m, r, m.name);
      check_invariants_agree(c, m.module, r, m.name);
      RightVComodule v = coactions_from_action(c, m.module);
      check_comodule(c, v, r, m.name);
      check_comodule_algebra(c, m, v, r, m.name);
      expect_all_pass(r);
    }
  }
}

TEST(Representation, ActionCoactionRoundTrip) {
  DdaContext c = group_context("S3");
  for (const auto& m : sample_modules(c, symmetric_group3())) {
    RightHModule back = action_from_coactions(c, coactions_from_action(c, m.module));
    for (std::size_t h = 0; h < c.d.dim(); ++h) EXPECT_EQ(back.act[h], m.module.act[h]) << m.name;
  }
}

TEST(Representation, TrivialModuleCoactionIsUnitCoaction) {
  DdaContext c = group_context("C3");
  RightHModule r = trivial_module(c);
  RightVComodule v = coactions_from_action(c, r);
  // r(0) (x) r(1) = e (x) r, with the module element e = 1 in R-coordinates.
  Vec one = c.get(Base::R).sub.coords(c.d.e());
  EXPECT_EQ(v.delta_t.apply(one), v.over_t.project(kron(one, c.d.e())));
  // Trivial comodule gives back r < h = r * h.
  RightHModule back = action_from_coactions(c, v);
  for (std::size_t h = 0; h < c.d.dim(); ++h) EXPECT_EQ(back.act[h], r.act[h]);
}

TEST(Representation, MismatchedCoactionsAreRejected) {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
  RightVComodule v = coactions_from_action(c, m.module);
  RightVComodule other = coactions_from_action(c, trivial_action_module_algebra(c, diagonal_algebra(Q, 2), "t").module);
  v.delta_b = other.delta_b;
  EXPECT_THROW(action_from_coactions(c, v), coaction_mismatch);
}

TEST(Representation, InvariantsOfFunctionModuleAreConstants) {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
  auto inv = invariants(c, m.module);
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(to_string(inv[0]), "[1/1, 1/1]");
  Report r;
  InvariantAlgebra ia = invariants_subalgebra(c, m, r, "k^C2");
  expect_all_pass(r);
  EXPECT_EQ(ia.sub.dim(), 1u);
  EXPECT_EQ(ia.hom_r.dim(), 1u);
}

TEST(Representation, TrivialActionHasAllInvariants) {
  DdaContext c = group_context("C3");
  HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(Q, 2), "t");
  EXPECT_EQ(invariants(c, m.module).size(), 2u);
}

TEST(Representation, SmashProductOfFunctionModuleHasDimensionFour) {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
  SmashAlgebra s = smash_product(c, m);
  EXPECT_EQ(s.algebra.dim(), 4u);
  Report r;
  check_smash(c, m, s, r, "smash");
  expect_all_pass(r);
  // (h#1)(h'#1) = h*h' # 1
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      EXPECT_EQ(s.algebra.mul(s.iota_h.column(a), s.iota_h.column(b)), s.iota_h.apply(c.d.horizontal.product(a, b)));
  // Simple: the center is one-dimensional.
  SubAlgebra z = centralizer(s.algebra, {s.algebra.basis(0), s.algebra.basis(1), s.algebra.basis(2), s.algebra.basis(3)}, "z");
  EXPECT_EQ(z.dim(), 1u);
}

TEST(Representation, SmashWithTrivialModuleIsH) {
  DdaContext c = group_context("S3");
  FinSpace one{Q, {"1"}};
  HModuleAlgebra m = trivial_action_module_algebra(c, StructAlgebra(one, {Vec{Q.one()}}, Vec{Q.one()}), "k");
  SmashAlgebra s = smash_product(c, m);
  EXPECT_EQ(s.algebra.dim(), 6u);
  EXPECT_EQ(rank(s.iota_h), 6u);
}

TEST(Representation, PrimeFieldModuleAlgebras) {
  DdaContext c = group_context("S3", Field::prime(7));
  Report r;
  for (const auto& m : sample_modules(c, symmetric_group3())) check_module_algebra(c, m, r, m.name);
  expect_all_pass(r);
}

TEST(RepresentationProperty, TensorModulesAreModules) {
  DdaContext c = group_context("C3");
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(3));
  Report r;
  RightHModule t = tensor_module(c, m.module, regular_module(c), nullptr);
  EXPECT_EQ(t.dim(), 9u);
  check_module(c, t, r, "k^C3 (x) H");
  expect_all_pass(r);
}
