#include <gtest/gtest.h>

#include "ddalab/hopf.hpp"

using namespace ddalab;

namespace {

const Field Q = Field::rationals();

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks()) EXPECT_TRUE(c.holds) << c.id << ": " << c.detail << " | " << c.witness;
}

}  // namespace

TEST(Hopf, GroupAlgebrasPassHopfChecks) {
  for (const char* name : {"trivial", "C2", "C3", "S3"}) {
    Report r;
    check_hopf(group_hopf(group_by_name(name), Q), r);
    expect_all_pass(r);
  }
}

TEST(Hopf, SymmetricGroupTableIsNonAbelian) {
  Group s3 = symmetric_group3();
  EXPECT_EQ(s3.order(), 6u);
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  EXPECT_FALSE(abelian);
}

TEST(Hopf, CharacteristicDividingOrderIsRejected) {
  EXPECT_THROW(group_hopf(cyclic_group(2), Field::prime(2)), construction_error);
  EXPECT_THROW(group_hopf(symmetric_group3(), Field::prime(3)), construction_error);
}

TEST(Hopf, GroupDdaStructureConstants) {
  // g o g' = |G| delta g, e = average of the group, i = 1.
  DoubleAlgebra d = dda_from_hopf(group_hopf(cyclic_group(2), Q));
  EXPECT_EQ(to_string(d.e()), "[1/2, 1/2]");
  EXPECT_EQ(to_string(d.i()), "[1/1, 0/1]");
  EXPECT_EQ(to_string(d.vertical.product(1, 1)), "[0/1, 2/1]");
  EXPECT_TRUE(is_zero(d.vertical.product(0, 1)));
}

TEST(Hopf, TransportedAntipodeOfGroupIsInversion) {
  Group c3 = cyclic_group(3);
  Matrix s = transported_antipode(group_hopf(c3, Q));
  for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(s.column(g), unit_vec(Q, 3, c3.inv(g)));
}

TEST(DoubleAlgebra, TrivialDdaHasTrivialBases) {
  DdaAnalysis a = analyze_double_algebra(trivial_dda(Q));
  expect_all_pass(a.report);
  ASSERT_TRUE(a.valid());
  for (Base b : kBases) {
    EXPECT_EQ(a.base->get(b).sub.dim(), 1u);
    EXPECT_EQ(a.base->get(b).frob.tensor.dim(), 1u);
  }
  // Delta_X(1) = 1 (x) 1
  for (Base b : kBases) EXPECT_EQ(to_string(a.comul->get(b).column(0)), "[1/1]");
}

TEST(DoubleAlgebra, GroupDdasAreValidWithOneDimensionalBases) {
  for (const char* name : {"C2", "C3", "S3"}) {
    DdaAnalysis a = analyze_double_algebra(dda_from_hopf(group_hopf(group_by_name(name), Q)));
    expect_all_pass(a.report);
    ASSERT_TRUE(a.valid()) << name;
    for (Base b : kBases) EXPECT_EQ(a.base->get(b).sub.dim(), 1u) << name << " " << base_name(b);
  }
}

TEST(DoubleAlgebra, PrimeFieldVariants) {
  for (std::uint64_t p : {5u, 7u})
    for (const char* name : {"C2", "C3", "S3"}) {
      DdaAnalysis a = analyze_double_algebra(dda_from_hopf(group_hopf(group_by_name(name), Field::prime(p))));
      expect_all_pass(a.report);
      EXPECT_TRUE(a.valid()) << name << " over F_" << p;
    }
}

TEST(DoubleAlgebra, DeltaOfUnitsIsDualBasis) {
  DoubleAlgebra d = dda_from_hopf(group_hopf(cyclic_group(3), Q));
  DdaAnalysis a = analyze_double_algebra(d);
  ASSERT_TRUE(a.valid());
  EXPECT_EQ(a.comul->get(Base::B).apply(d.i()), a.base->get(Base::B).frob.element);
  EXPECT_EQ(a.comul->get(Base::R).apply(d.e()), a.base->get(Base::R).frob.element);
}

TEST(DoubleAlgebra, CorruptedProductBreaksDistributivity) {
  DoubleAlgebra d = dda_from_hopf(group_hopf(cyclic_group(2), Q));
  std::vector<Vec> prods;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) prods.push_back(d.horizontal.product(a, b));
  // g * g = g instead of 1: still associative with unit, but no longer a DDA.
  prods[3] = unit_vec(Q, 2, 1);
  d.horizontal = StructAlgebra(d.space(), prods, d.i());
  DdaAnalysis a = analyze_double_algebra(d);
  EXPECT_FALSE(a.valid());
  bool witnessed = false;
  for (const auto& c : a.report.checks()) witnessed = witnessed || (!c.holds && !c.witness.empty());
  EXPECT_TRUE(witnessed);
}
