#pragma once

#include <string>
#include <vector>

#include "ddalab/double_algebra.hpp"

namespace ddalab {

// Right H-module: act[h] is the matrix of m -> m < b_h.
struct RightHModule {
  FinSpace space;
  std::vector<Matrix> act;

  std::size_t dim() const { return space.dim(); }
  const Field& field() const { return space.field; }
  Matrix action(const Vec& h) const;
  Vec apply(const Vec& m, const Vec& h) const { return action(h).apply(m); }
};

// Associativity (m < h) < h' = m < (h * h') and unitality m < i = m.
void check_module(const DdaContext& c, const RightHModule& m, Report& report, const std::string& prefix);

// Regular module H (a < h = a * h) and the trivial module R (r < h = r * h, R a right ideal of H).
RightHModule regular_module(const DdaContext& c);
RightHModule trivial_module(const DdaContext& c);

// Tensor products over R: M (x)_R H, H (x)_R M and M (x)_R M'.
TensorProduct module_tensor_h(const DdaContext& c, const RightHModule& m);
TensorProduct h_tensor_module(const DdaContext& c, const RightHModule& m);
TensorProduct module_tensor(const DdaContext& c, const RightHModule& m, const RightHModule& m2);
// M (x)_R M' with the diagonal action (m (x) m') < h = m < h[1] (x) m' < h[2].
RightHModule tensor_module(const DdaContext& c, const RightHModule& m, const RightHModule& m2, TensorProduct* out);

// Right V-comodule with both coactions: M (x)_T A and M (x)_B A.
struct RightVComodule {
  FinSpace space;
  std::vector<Matrix> t_act;  // m <- t for the basis of T
  std::vector<Matrix> b_act;  // m <= b for the basis of B
  TensorProduct over_t, over_b;
  Matrix delta_t;  // m -> m(0) (x)_T m(1)
  Matrix delta_b;  // m -> m_(0) (x)_B m_(1)

  std::size_t dim() const { return space.dim(); }
};

// Tensor product M (x)_X A for X = T or B with the given base actions on M.
TensorProduct comodule_tensor(const DdaContext& c, Base x, const std::vector<Matrix>& base_act, std::size_t dim);

RightVComodule coactions_from_action(const DdaContext& c, const RightHModule& m);

class coaction_mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// m < h = m_(0) <= Phi_B(m_(1) * h) = m(0) <- Phi_T(m(1) * h); throws coaction_mismatch
// when the two formulas differ.
RightHModule action_from_coactions(const DdaContext& c, const RightVComodule& v);
// Coassociativity and counit of each coaction, and the two mixed coassociativity laws.
void check_comodule(const DdaContext& c, const RightVComodule& v, Report& report, const std::string& prefix);

// M^H = {n : n < h = n < Phi_T Phi_R(h)}, as a basis of M-vectors (canonical echelon basis).
std::vector<Vec> invariants(const DdaContext& c, const RightHModule& m);
// Same subspace from n < h = n < Phi_B Phi_R(h) and from the coinvariants of either coaction.
void check_invariants_agree(const DdaContext& c, const RightHModule& m, Report& report, const std::string& prefix);

// Right H-module algebra: module, algebra on the same space and eta: R -> M (dim M x dim R).
struct HModuleAlgebra {
  std::string name;
  RightHModule module;
  StructAlgebra algebra;
  Matrix eta;

  std::size_t dim() const { return module.dim(); }
  const Field& field() const { return module.field(); }
  Vec one() const { return algebra.unit(); }
  Vec mul(const Vec& x, const Vec& y) const { return algebra.mul(x, y); }
};

// eta(r) = 1 < Phi_T(r).
Matrix default_eta(const DdaContext& c, const RightHModule& m, const StructAlgebra& a);
HModuleAlgebra make_module_algebra(const DdaContext& c, std::string name, RightHModule m, StructAlgebra a);

// (mm') < h = (m < h[1])(m' < h[2]), 1 < h = eta(Phi_R(h)), eta an algebra map inducing
// the R-bimodule structure, and the multiplication balanced over R.
void check_module_algebra(const DdaContext& c, const HModuleAlgebra& m, Report& report, const std::string& prefix);
// Comodule algebra laws for both coactions, including 1(0) (x) 1(1) = 1 (x) e.
void check_comodule_algebra(const DdaContext& c, const HModuleAlgebra& m, const RightVComodule& v,
                            Report& report, const std::string& prefix);

// Invariants as a subalgebra, and the isomorphism Hom_H(R, M) -> M^H, f -> f(e).
struct InvariantAlgebra {
  SubAlgebra sub;
  HomSpace hom_r;  // Hom_H(R, M)
  Matrix to_invariants;  // hom_r coords -> sub coords
};
InvariantAlgebra invariants_subalgebra(const DdaContext& c, const HModuleAlgebra& m, Report& report,
                                       const std::string& prefix);

// Quotient algebra on a tensor product whose product is given on ambient basis tuples.
// Checks that the product descends (relations form a two-sided ideal under it).
StructAlgebra tensor_algebra(const TensorProduct& t,
                             const std::function<Vec(std::size_t, std::size_t)>& ambient_product,
                             const Vec& ambient_unit, const std::string& label, bool check_descends);

// H #M on H (x)_R M with (h#m)(h'#m') = h * h'[1] # (m < h'[2]) m'.
struct SmashAlgebra {
  TensorProduct tensor;
  StructAlgebra algebra;
  Matrix iota_h;  // H -> H#M, h -> h#1
  Matrix iota_m;  // M -> H#M, m -> i#m
};
SmashAlgebra smash_product(const DdaContext& c, const HModuleAlgebra& m);
void check_smash(const DdaContext& c, const HModuleAlgebra& m, const SmashAlgebra& s, Report& report,
                 const std::string& prefix);

// Matrix of the linear map R -> M restricted to generators; helper for base actions on M.
Matrix r_generator_action(const DdaContext& c, const RightHModule& m, Base via, const Vec& r);

}  // namespace ddalab
