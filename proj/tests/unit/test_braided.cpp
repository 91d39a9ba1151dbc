#include <gtest/gtest.h>

#include "ddalab/braided.hpp"
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

// M_2 over the diagonal through the endomorphism construction.
struct MatrixEndo {
  Extension ext;
  DdaContext c;
  HModuleAlgebra m;
};

MatrixEndo matrix_endo(const Field& f) {
  Extension e = matrix_extension(f, 2);
  Report r;
  auto fe = frobenius_from_psi(e, *e.psi, r, "m2");
  EndoConstruction ec = endo_double_algebra(e, *fe);
  DdaContext c = make_context(ec.dda);
  HModuleAlgebra m = endo_module_algebra(c, e, ec);
  return {e, c, m};
}

}  // namespace

TEST(Braided, UnitIsBraidedCommutative) {
  for (const char* name : {"C2", "S3"}) {
    DdaContext c = group_context(name);
    BCA u = unit_bca(c);
    Report r;
    check_bca(c, u, r, "unit");
    expect_all_pass(r);
    Braiding b = braiding(c, u.yd, u.yd.z);
    // beta_{R,R} is the identity on R (x)_R R.
    EXPECT_EQ(b.beta, Matrix::identity(Q, b.zw.dim()));
  }
}

TEST(Braided, CentralizerOfFunctionAlgebra) {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
  GaloisMaps g = build_galois_maps(c, m);
  CentralizerBCA cb = centralizer_bca(c, m, g);
  EXPECT_EQ(cb.bca.q.dim(), 2u);
  Report r;
  check_bca(c, cb.bca, r, "c");
  check_centralizer(c, m, cb, r, "c");
  check_braiding(braiding(c, cb.bca.yd, cb.bca.yd.z), r, "c.braiding");
  expect_all_pass(r);
}

TEST(Braided, CentralizerOfMatrixExtension) {
  MatrixEndo me = matrix_endo(Q);
  GaloisMaps g = build_galois_maps(me.c, me.m);
  CentralizerBCA cb = centralizer_bca(me.c, me.m, g);
  EXPECT_EQ(cb.bca.q.dim(), 2u);
  Report r;
  check_bca(me.c, cb.bca, r, "c");
  check_centralizer(me.c, me.m, cb, r, "c");
  check_braiding(braiding(me.c, cb.bca.yd, cb.bca.yd.z), r, "c.braiding");
  expect_all_pass(r);
}

TEST(Braided, EndoHopfAlgebroidMatchesSmash) {
  {
    DdaContext c = group_context("C2");
    HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
    GaloisMaps g = build_galois_maps(c, m);
    CentralizerBCA cb = centralizer_bca(c, m, g);
    Report r;
    EndoHopfAlgebroid eh = endo_hopf_algebroid(c, m, g, cb, r, "endo");
    EXPECT_EQ(eh.fork.end.dim(), 4u);
    expect_all_pass(r);
  }
  MatrixEndo me = matrix_endo(Q);
  GaloisMaps g = build_galois_maps(me.c, me.m);
  CentralizerBCA cb = centralizer_bca(me.c, me.m, g);
  Report r;
  EndoHopfAlgebroid eh = endo_hopf_algebroid(me.c, me.m, g, cb, r, "endo");
  EXPECT_EQ(eh.fork.end.dim(), 4u);
  expect_all_pass(r);
}

TEST(Braided, ScalarExtensionOfCentralizers) {
  {
    DdaContext c = group_context("C2");
    HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
    CentralizerBCA cb = centralizer_bca(c, m, build_galois_maps(c, m));
    ScalarExtension s = scalar_extension(c, cb.bca);
    Report r;
    check_scalar_extension(c, cb.bca, s, r, "c2");
    check_tensor_with_q_strong_monoidal(c, cb.bca, r, "c2");
    expect_all_pass(r);
    EXPECT_EQ(s.smash.algebra.dim(), 4u);
  }
  {
    MatrixEndo me = matrix_endo(Q);
    CentralizerBCA cb = centralizer_bca(me.c, me.m, build_galois_maps(me.c, me.m));
    ScalarExtension s = scalar_extension(me.c, cb.bca);
    Report r;
    check_scalar_extension(me.c, cb.bca, s, r, "m2");
    check_tensor_with_q_strong_monoidal(me.c, cb.bca, r, "m2");
    expect_all_pass(r);
  }
}

TEST(Braided, TransitivityWithUnitOverExtension) {
  DdaContext c = group_context("C2");
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
  CentralizerBCA cb = centralizer_bca(c, m, build_galois_maps(c, m));
  ScalarExtension s = scalar_extension(c, cb.bca);
  DdaContext cg = make_context(s.dda);
  BCA p = unit_bca(cg);
  Report r;
  TransitivityResult t = bca_transitivity(c, cb.bca, s, cg, p, r, "trans");
  expect_all_pass(r);
  EXPECT_EQ(t.iso.rows(), t.iso.cols());
}

TEST(Braided, TransitivityOverUnitBase) {
  DdaContext c = group_context("C2");
  BCA q = unit_bca(c);
  ScalarExtension s = scalar_extension(c, q);
  DdaContext cg = make_context(s.dda);
  HModuleAlgebra m = function_module_algebra(c, cyclic_group(2));
  Report r;
  check_scalar_extension(c, q, s, r, "unit");
  BCA p = unit_bca(cg);
  bca_transitivity(c, q, s, cg, p, r, "trans");
  expect_all_pass(r);
}
