#include <gtest/gtest.h>

#include "ddalab/antipode.hpp"
#include "ddalab/instances.hpp"

using namespace ddalab;

namespace {

const Field Q = Field::rationals();

}  // namespace

TEST(Antipode, TrivialDoubleAlgebraHasIdentity) {
  DdaContext c = make_context(trivial_dda(Q));
  AntipodeResult r = solve_antipode(c);
  ASSERT_EQ(r.status, AntipodeStatus::unique) << r.witness;
  EXPECT_EQ(r.antipode->s, Matrix::identity(Q, 1));
}

TEST(Antipode, GroupAntipodeIsRecovered) {
  for (const char* name : {"C2", "C3", "S3"}) {
    HopfData h = group_hopf(group_by_name(name), Q);
    DdaContext c = make_context(dda_from_hopf(h));
    AntipodeResult r = solve_antipode(c);
    ASSERT_EQ(r.status, AntipodeStatus::unique) << name << ": " << r.witness;
    EXPECT_EQ(r.antipode->s, transported_antipode(h)) << name;
    for (const auto& ch : r.report.checks()) EXPECT_TRUE(ch.holds) << ch.id;
  }
}

TEST(Antipode, IdentityIsRejectedOnC3) {
  DdaContext c = make_context(dda_from_hopf(group_hopf(cyclic_group(3), Q)));
  Report r;
  check_antipode(c, Matrix::identity(Q, 3), r, "s");
  EXPECT_FALSE(r.ok());
}

TEST(Antipode, PrimeFieldGroup) {
  Field f5 = Field::prime(5);
  HopfData h = group_hopf(cyclic_group(3), f5);
  AntipodeResult r = solve_antipode(make_context(dda_from_hopf(h)));
  ASSERT_EQ(r.status, AntipodeStatus::unique) << r.witness;
  EXPECT_EQ(r.antipode->s, transported_antipode(h));
}

TEST(Antipode, MatrixEndoDoubleAlgebra) {
  Extension e = matrix_extension(Q, 2);
  Report rep;
  auto fe = frobenius_from_psi(e, *e.psi, rep, "m2");
  ASSERT_TRUE(fe);
  DdaContext c = make_context(endo_double_algebra(e, *fe).dda);
  AntipodeResult r = solve_antipode(c);
  EXPECT_EQ(r.status, AntipodeStatus::unique) << r.witness;
  for (const auto& ch : r.report.checks()) EXPECT_TRUE(ch.holds) << ch.id << " | " << ch.witness;
  // The second form of the exchange law does not hold here; it stays a diagnostic.
  const Check* d = r.diagnostics.find("antipode.diagnostic.star_t_equals_circ_phi_r");
  ASSERT_NE(d, nullptr);
  EXPECT_FALSE(d->holds);
}
