#include <gtest/gtest.h>

#include "ddalab/galois.hpp"
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

struct EndoFixture {
  Extension ext;
  FrobeniusExtension frob;
  EndoConstruction endo;
};

EndoFixture matrix_endo(const Field& f, std::size_t n) {
  Extension e = matrix_extension(f, n);
  Report r;
  auto fe = frobenius_from_psi(e, *e.psi, r, "m");
  if (!fe) throw std::runtime_error("matrix extension is not Frobenius");
  EndoConstruction ec = endo_double_algebra(e, *fe);
  return {e, *fe, ec};
}

}  // namespace

TEST(Galois, FunctionAlgebrasAreGalois) {
  for (const char* name : {"C2", "C3", "S3"}) {
    DdaContext c = group_context(name);
    HModuleAlgebra m = function_module_algebra(c, group_by_name(name));
    GaloisReport gr = decide_galois(c, m);
    EXPECT_TRUE(gr.galois()) << name;
    EXPECT_TRUE(gr.all_equal()) << name;
    EXPECT_TRUE(gr.fgp_right && gr.fgp_left) << name;
    expect_all_pass(gr.report);
  }
}

TEST(Galois, SelfModuleIsGalois) {
  for (const char* name : {"C2", "S3"}) {
    DdaContext c = group_context(name);
    GaloisReport gr = decide_galois(c, self_module_algebra(c));
    EXPECT_TRUE(gr.galois()) << name;
    expect_all_pass(gr.report);
  }
}

TEST(Galois, TrivialActionFailsAllSixWithWitnesses) {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = trivial_action_module_algebra(c, diagonal_algebra(Q, 2), "trivial");
  GaloisReport gr = decide_galois(c, m);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_FALSE(gr.conditions[k].holds) << kGaloisConditionIds[k];
    EXPECT_FALSE(gr.conditions[k].witness.empty()) << kGaloisConditionIds[k];
  }
  EXPECT_TRUE(gr.report.holds("galois.six_conditions_agree"));
}

TEST(Galois, KreimerTakeuchiDualBasis) {
  DdaContext c = group_context("S3");
  HModuleAlgebra m = function_module_algebra(c, symmetric_group3());
  GaloisReport gr = decide_galois(c, m);
  ASSERT_FALSE(gr.kt_pairs.empty());
  EXPECT_TRUE(gr.report.holds("galois.kreimer_takeuchi.dual_basis"));
}

TEST(Galois, PhiIntertwinesGammasWithGroupAntipode) {
  for (const char* name : {"C3", "S3"}) {
    DdaContext c = group_context(name);
    HopfData h = group_hopf(group_by_name(name), Q);
    Matrix s = transported_antipode(h);
    for (const auto& m : {function_module_algebra(c, group_by_name(name)), self_module_algebra(c)}) {
      Report r;
      check_phi(c, build_galois_maps(c, m), s, r, "phi");
      expect_all_pass(r);
    }
  }
}

TEST(Galois, StructureConditionsAgree) {
  DdaContext c = group_context("C2");
  for (const auto& m : {function_module_algebra(c, cyclic_group(2)),
                        trivial_action_module_algebra(c, diagonal_algebra(Q, 2), "trivial")}) {
    GaloisMaps g = build_galois_maps(c, m);
    GaloisReport gr = decide_galois(c, m, g);
    StructureReport s = structure_theorem_conditions(c, m, g, gr);
    EXPECT_TRUE(s.report.holds("structure.first_group_agree")) << m.name;
    if (gr.galois()) {
      EXPECT_TRUE(s.report.holds("structure.second_group_agree")) << m.name;
      EXPECT_TRUE(s.c2f && s.splitting);
    }
  }
}

TEST(Galois, InvariantFrobeniusData) {
  DdaContext c = group_context("S3");
  HModuleAlgebra m = function_module_algebra(c, symmetric_group3());
  GaloisMaps g = build_galois_maps(c, m);
  Report r;
  auto fe = frobenius_extension_data(c, m, g, r, "frob");
  ASSERT_TRUE(fe);
  check_frobenius_extension(g.ext, *fe, r, "frob");
  expect_all_pass(r);
}

TEST(Extension, MatrixOverDiagonalIsFrobeniusBalancedD2) {
  Extension e = matrix_extension(Q, 2);
  Report r;
  auto fe = frobenius_from_psi(e, *e.psi, r, "m2");
  ASSERT_TRUE(fe);
  check_frobenius_extension(e, *fe, r, "m2");
  expect_all_pass(r);
  BalancedD2 b = check_balanced_and_d2(e);
  expect_all_pass(b.report);
}

TEST(Extension, NonBimodulePsiIsRejected) {
  Extension e = matrix_extension(Q, 2);
  Matrix psi = Matrix::identity(Q, 4);
  Report r;
  EXPECT_FALSE(frobenius_from_psi(e, psi, r, "bad"));
  EXPECT_FALSE(r.holds("bad.psi_bimodule_map"));
}

TEST(Endo, MatrixEndoIsValidDoubleAlgebra) {
  EndoFixture f = matrix_endo(Q, 2);
  EXPECT_EQ(f.endo.end.source_dim(), 4u);
  DdaAnalysis a = analyze_double_algebra(f.endo.dda);
  for (const auto& c : a.report.checks()) EXPECT_TRUE(c.holds) << c.id << " | " << c.witness;
  ASSERT_TRUE(a.valid());
  DdaContext c = make_context(f.endo.dda);
  EXPECT_EQ(c.get(Base::B).sub.dim(), 2u);
  EXPECT_EQ(c.get(Base::T).sub.dim(), 2u);
}

TEST(Endo, MatrixEndoModuleAlgebraIsGalois) {
  EndoFixture f = matrix_endo(Q, 2);
  DdaContext c = make_context(f.endo.dda);
  HModuleAlgebra m = endo_module_algebra(c, f.ext, f.endo);
  Report r;
  check_module_algebra(c, m, r, "endo");
  expect_all_pass(r);
  GaloisReport gr = decide_galois(c, m);
  EXPECT_TRUE(gr.galois());
  expect_all_pass(gr.report);
  // Invariants recover the diagonal.
  EXPECT_EQ(build_galois_maps(c, m).ext.n.dim(), 2u);
}

TEST(Galois, PrimeFieldFunctionAlgebra) {
  DdaContext c = group_context("C3", Field::prime(7));
  GaloisReport gr = decide_galois(c, function_module_algebra(c, cyclic_group(3)));
  EXPECT_TRUE(gr.galois());
  expect_all_pass(gr.report);
}
