#pragma once

#include <optional>
#include <string>

#include "ddalab/galois.hpp"

namespace ddalab {

// Yetter-Drinfeld module over the horizontal Hopf algebroid: right H-module Z with left coaction
// tau: Z -> H (x)_R Z, z -> z<-1> (x) z<0>, and optionally the right coaction z -> z<0> (x) z<1>.
struct YDModule {
  RightHModule z;
  TensorProduct hz;  // H (x)_R Z
  Matrix tau;        // Z -> hz
  TensorProduct zh;  // Z (x)_R H
  std::optional<Matrix> tau_bar;  // Z -> zh

  std::size_t dim() const { return z.dim(); }
};

YDModule make_yd(const DdaContext& c, RightHModule z, Matrix tau);

// Bimodule property of tau, coassociativity, counit, Takeuchi centrality, the YD condition and,
// with tau_bar, both inverse laws between tau and tau_bar.
void check_yd(const DdaContext& c, const YDModule& y, Report& report, const std::string& prefix);

// z<0> (x) z<1> = Phi_B Phi_R Phi_T(x^j * z<-1>) . z<0> (x) y^j with (x^j, y^j) the dual basis of R.
// Throws not_well_defined when the formula does not descend to H (x)_R Z.
Matrix inverse_coaction(const DdaContext& c, const YDModule& y);

// beta(z (x) w) = w < z<-1> (x) z<0> on Z (x)_R W and its candidate inverse built from tau_bar,
// w (x) z -> z<0> (x) w < z<1>.
struct Braiding {
  TensorProduct zw, wz;
  Matrix beta;          // zw -> wz
  Matrix beta_inverse;  // wz -> zw
};
Braiding braiding(const DdaContext& c, const YDModule& y, const RightHModule& w);
void check_braiding(const Braiding& b, Report& report, const std::string& prefix);

// The monoidal unit R with r < h = r * h and r<-1> (x) r<0> = Phi_B(r) (x) e.
YDModule unit_yd(const DdaContext& c);

// Braided commutative algebra: module algebra plus a YD structure on the same module.
struct BCA {
  HModuleAlgebra q;
  YDModule yd;
};

BCA unit_bca(const DdaContext& c);
// Module algebra laws, YD laws, comodule algebra laws and braided commutativity
// (q' < q<-1>) q<0> = q q'.
void check_bca(const DdaContext& c, const BCA& b, Report& report, const std::string& prefix);

// Centralizer C = M^N of a Galois extension with the inherited action and tau(c) = Gamma_M^-1(left mult by c).
struct CentralizerBCA {
  BCA bca;
  SubAlgebra c_in_m;   // C inside M
  Matrix tau_bar_galois;  // (Gamma^M)^-1(right mult by c), in C (x)_R H coordinates
};
// Throws std::invalid_argument when Gamma_M is not bijective.
CentralizerBCA centralizer_bca(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g);
// Element-level relations (m < c<-1>) c<0> = c m and c<0> (m < c<1>) = m c, and agreement of tau_bar
// from the dual-basis formula with the one from Gamma^M.
void check_centralizer(const DdaContext& c, const HModuleAlgebra& m, const CentralizerBCA& cb, Report& report,
                       const std::string& prefix);

// Fork maps E (x)_C E -> Hom_{N-N}(M (x)_N M, M) and H (x)_R H (x)_R C -> Hom_{N-N}(M (x)_N M, M).
struct ForkMaps {
  HomSpace end;           // E = End(_N M_N)
  TensorProduct e_c_e;    // E (x)_C E
  TensorProduct h_h_c;    // H (x)_R H (x)_R C
  HomSpace hom;           // Hom_{N-N}(M (x)_N M, M)
  TensorProduct mnm;
  Matrix fork;            // e_c_e -> hom
  Matrix fine_fork;       // h_h_c -> hom
};
ForkMaps fork_maps(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g, const CentralizerBCA& cb);

// Scalar extension G = H #Q over Q with s_G(q) = i#q, t_G(q) = q<-1>#q<0>,
// Delta_G(h#q) = (h[1]#1) (x)_Q (h[2]#q), eps_G(h#q) = eta(Phi_R(h)) q.
struct ScalarExtension {
  SmashAlgebra smash;
  Bialgebroid bialgebroid;
  Matrix iota;  // H -> G
  DoubleAlgebra dda;  // A#Q: horizontal smash product, (a#q) o (a'#q') = a o (a' * q<-1>) # q<0> q'
  Vec e_g;
};
ScalarExtension scalar_extension(const DdaContext& c, const BCA& q);
// Right bialgebroid axioms, iota as a bialgebroid map, and the A#Q double algebra suite.
void check_scalar_extension(const DdaContext& c, const BCA& q, const ScalarExtension& s, Report& report,
                            const std::string& prefix);

// Tensoring with Q: (Y (x)_R Q) (x)_Q (Y' (x)_R Q) -> (Y (x)_R Y') (x)_R Q and the stated inverse,
// for Y, Y' in {R, H, H (x)_R H}.
void check_tensor_with_q_strong_monoidal(const DdaContext& c, const BCA& q, Report& report,
                                         const std::string& prefix);

// Endomorphism Hopf algebroid E = End(_N M_N) over C with s_E(c) = right mult, t_E(c) = left mult,
// eps_E(a) = a(1) and Delta_E solved from a[1](m) a[2](m') = a(mm').
struct EndoHopfAlgebroid {
  ForkMaps fork;
  Matrix s_e, t_e;      // C -> E
  Matrix delta_e;       // E -> E (x)_C E
  Matrix eps_e;         // E -> C
  SmashAlgebra h_smash_c;
  Matrix gamma;         // H#C -> E, restriction of Gamma_M
};
EndoHopfAlgebroid endo_hopf_algebroid(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                      const CentralizerBCA& cb, Report& report, const std::string& prefix);

// Transitivity of scalar extensions: P a BCA over G = H#Q (context cg of A#Q) is a BCA over H, and
// (H#Q)#P is isomorphic to H#P. P must be built over cg.
struct TransitivityResult {
  BCA p_over_h;
  Matrix iso;  // H#P -> (H#Q)#P
};
TransitivityResult bca_transitivity(const DdaContext& c, const BCA& q, const ScalarExtension& s,
                                    const DdaContext& cg, const BCA& p, Report& report, const std::string& prefix);

}  // namespace ddalab
