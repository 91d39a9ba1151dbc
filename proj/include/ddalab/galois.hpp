#pragma once

#include <optional>
#include <string>

#include "ddalab/representation.hpp"

namespace ddalab {

// Algebra extension N in M; psi (optional) is a candidate Frobenius map M -> M with image in N.
struct Extension {
  std::string name;
  StructAlgebra m;
  SubAlgebra n;
  std::optional<Matrix> psi;

  std::vector<Vec> n_gens() const;  // generators of N as M-vectors
};

Extension extension_from_span(std::string name, StructAlgebra m, const std::vector<Vec>& n_span,
                              std::optional<Matrix> psi = std::nullopt);
// N = M^H for a module algebra.
Extension invariant_extension(const DdaContext& c, const HModuleAlgebra& m);

// M (x)_N M.
TensorProduct tensor_over_n(const Extension& e);
// End(M_N) and End(_N M).
HomSpace end_right_n(const Extension& e);
HomSpace end_left_n(const Extension& e);

struct GaloisMaps {
  Extension ext;
  RightHModule module;
  RightVComodule comodule;
  TensorProduct mnm;        // M (x)_N M
  Matrix gamma_upper;       // -> M (x)_T V
  Matrix gamma_lower;       // -> M (x)_B V
  TensorProduct m_r_h;      // M (x)_R H
  TensorProduct h_r_m;      // H (x)_R M
  HomSpace end_right;       // End(M_N)
  HomSpace end_left;        // End(_N M)
  Matrix cap_gamma_upper;   // M (x)_R H -> End(M_N) coordinates
  Matrix cap_gamma_lower;   // H (x)_R M -> End(_N M) coordinates
};

GaloisMaps build_galois_maps(const DdaContext& c, const HModuleAlgebra& m);
// Matrix of the endomorphism m' -> m (m' < h) and m' -> (m' < h) m.
Matrix cap_gamma_upper_of(const HModuleAlgebra& m, const Vec& mv, const Vec& h);
Matrix cap_gamma_lower_of(const HModuleAlgebra& m, const Vec& h, const Vec& mv);

// phi(m (x)_T v) = m_(0) (x)_B m_(1) o S(v) and its candidate inverse
// m (x)_B v -> m(0) (x)_T S^-1(v) o m(1).
struct PhiMaps {
  Matrix phi;
  Matrix phi_inverse;
};
// phi on the ambient M (x) A, landing in M (x)_B A; linear in S.
Matrix phi_on_ambient(const DdaContext& c, const GaloisMaps& g, const Matrix& s);
// Throws not_well_defined when the formula does not descend for the given S.
PhiMaps build_phi(const DdaContext& c, const GaloisMaps& g, const Matrix& s, const Matrix& s_inverse);
void check_phi(const DdaContext& c, const GaloisMaps& g, const Matrix& s, Report& report, const std::string& prefix);

struct Condition {
  bool holds = false;
  std::string witness;
};

struct GaloisReport {
  std::array<Condition, 6> conditions;  // gamma^M epi, gamma_M epi, gamma^M iso, gamma_M iso, Gamma^M iso + M_N fgp, Gamma_M iso + _N M fgp
  bool fgp_right = false, fgp_left = false;
  bool all_equal() const;
  bool galois() const { return conditions[2].holds; }
  // Dual basis (m_j, (m'_j .) < e) for M_N, present when gamma^M is onto.
  std::vector<std::pair<Vec, Vec>> kt_pairs;
  Report report;
};

extern const std::array<const char*, 6> kGaloisConditionIds;

GaloisReport decide_galois(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g);
GaloisReport decide_galois(const DdaContext& c, const HModuleAlgebra& m);

// Frobenius data of N in M with psi = (.) < e and the dual basis read off from the
// inverse of m (x)_N m' -> { m'' -> m psi(m' m'') }.
struct FrobeniusExtension {
  Matrix psi;                              // M -> M, image in N
  Vec element;                             // dual basis in M (x)_N M coordinates
  std::vector<std::pair<Vec, Vec>> pairs;  // e_i, f_i
  TensorProduct mnm;
};

// m (x)_N m' -> { m'' -> m psi(m' m'') } as a matrix into End(M_N) coordinates.
Matrix map_three(const Extension& e, const Matrix& psi, const TensorProduct& mnm, const HomSpace& end_right);
std::optional<FrobeniusExtension> frobenius_extension_data(const DdaContext& c, const HModuleAlgebra& m,
                                                           const GaloisMaps& g, Report& report,
                                                           const std::string& prefix);
// Frobenius data of an extension with a given psi; nullopt when no dual basis exists.
std::optional<FrobeniusExtension> frobenius_from_psi(const Extension& e, const Matrix& psi, Report& report,
                                                     const std::string& prefix);
// Frobenius equations and N-bimodule property.
void check_frobenius_extension(const Extension& e, const FrobeniusExtension& f, Report& report,
                               const std::string& prefix);

struct BalancedD2 {
  bool balanced_right = false, balanced_left = false;
  bool d2_right = false, d2_left = false;
  std::size_t d2_right_copies = 0, d2_left_copies = 0;
  Report report;
};
BalancedD2 check_balanced_and_d2(const Extension& e);

// Module-level conditions of the structure theorem and their predicted equivalences.
struct StructureReport {
  bool c1b = false, c1c = false, c1d = false;
  bool c2c = false, c2d = false, c2e = false, c2f = false;
  std::optional<Matrix> splitting;  // left N-linear projection M -> N fixing N, when one exists
  Report report;
};
StructureReport structure_theorem_conditions(const DdaContext& c, const HModuleAlgebra& m, const GaloisMaps& g,
                                             const GaloisReport& gr);

// Double algebra on End(_N M_N) of a Frobenius extension: star = reversed composition with
// unit id, (a o b)(m) = sum a(m e_i) b(f_i) with unit psi. Also returns M as a module algebra.
struct EndoConstruction {
  HomSpace end;  // End(_N M_N)
  DoubleAlgebra dda;
};
EndoConstruction endo_double_algebra(const Extension& e, const FrobeniusExtension& f);
// M with alpha acting by evaluation: m < alpha = alpha(m).
HModuleAlgebra endo_module_algebra(const DdaContext& c, const Extension& e, const EndoConstruction& ec);

// Matrix extension M_n over the diagonal, with psi = diagonal part.
Extension matrix_extension(const Field& f, std::size_t n);

}  // namespace ddalab
