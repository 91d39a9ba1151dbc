#pragma once

#include <string>
#include <vector>

#include "ddalab/galois.hpp"

namespace ddalab {

// Finite list of right H-modules on which monoidal properties are tested.
struct TestObject {
  std::string name;
  RightHModule module;
};
// R, H and H (x)_R H.
std::vector<TestObject> standard_test_objects(const DdaContext& c);

// H (x)_R H -> A (x)_B H, a (x) a' -> a_(1) (x)_B a_(2) o a'.
struct GammaRB {
  TensorProduct h_r_h;
  TensorProduct a_b_h;
  Matrix map;
  bool bijective = false;
};
GammaRB gamma_rb(const DdaContext& c, Report& report, const std::string& prefix);

// Hom_H(-, M) on the test objects with its opmonoidal constraints
// F^0: N -> Hom_H(R, M) and F^{Y,Y'}(x (x)_N x') = mu o (x (x)_R x').
struct HomFunctorData {
  struct Pair {
    std::size_t y = 0, y2 = 0;
    TensorProduct yy;       // Y (x)_R Y'
    RightHModule yy_module;
    TensorProduct kk;       // Hom_H(Y, M) (x)_N Hom_H(Y', M)
    HomSpace k_yy;          // Hom_H(Y (x)_R Y', M)
    Matrix f2;
    bool bijective = false;
  };
  Extension ext;  // N = M^H in M
  std::vector<TestObject> objects;
  std::vector<HomSpace> k;  // Hom_H(Y, M)
  Matrix f0;
  std::vector<Pair> pairs;
  std::vector<std::string> skipped;  // pairs over the size limit
};

// Pairs whose Y (x)_R Y' exceeds max_pair_dim are listed as skipped.
HomFunctorData hom_functor(const DdaContext& c, const HModuleAlgebra& m, std::vector<TestObject> objects,
                           std::size_t max_pair_dim);

struct OpmonoidalReport {
  bool f0_iso = false;
  bool fhh_iso = false;
  bool square_commutes = false;
  bool strong = false;  // F^0 and every tested F^{Y,Y'} bijective
  HomFunctorData data;
  Report report;
};
// Includes the square F^{H,H} o (iota (x) iota) followed by Hom_H(H (x)_R H, M) -> M (x)_T A against gamma^M.
OpmonoidalReport opmonoidal_constraints(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                        const GaloisReport& gr, std::size_t max_pair_dim = 64);

// m < (a o a') = (m e_i < a)(f_i < a') over the dual basis of psi = (.) < e.
struct LeftDistributivity {
  bool psi_frobenius = false;
  bool rule_holds = false;
  bool holds() const { return psi_frobenius && rule_holds; }
  std::string witness;
  Report report;
};
LeftDistributivity left_distributivity_check(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                             const GaloisReport& gr);

// sigma_Y: Y -> Hom_{N^e}(Hom_H(Y, M), M) on the test objects and the mate equations
// J_{KY,KY'} o (sigma_Y (x) sigma_Y') = JK^{Y,Y'} o sigma_{Y (x) Y'} and J_0 = JK^0 o sigma_R.
struct ReflexivityReport {
  std::vector<std::pair<std::string, bool>> sigma;
  bool all_reflexive = false;
  Report report;
};
ReflexivityReport reflexivity_and_duality(const DdaContext& c, const HModuleAlgebra& m,
                                          std::vector<TestObject> objects, std::size_t max_pair_dim = 64);

}  // namespace ddalab
