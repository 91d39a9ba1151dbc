#pragma once

#include <optional>
#include <string>

#include "ddalab/galois.hpp"

namespace ddalab {

// Antipode of the double algebra: an anti-automorphism of both V and H.
// S is the antipode of V; the antipode of H is S^-1.
struct Antipode {
  Matrix s;
  Matrix s_inverse;
};

enum class AntipodeStatus { unique, ambiguous, none };
const char* antipode_status_name(AntipodeStatus s);

struct AntipodeResult {
  AntipodeStatus status = AntipodeStatus::none;
  std::optional<Antipode> antipode;
  std::size_t linear_solution_dim = 0;  // dimension of the stage-one solution space
  std::string witness;
  Report report;       // validation of the returned candidate
  Report diagnostics;  // identities recorded but not imposed
};

// Stage one solves S(e) = e, S(i) = i, S(t * a) = S(a) * Phi_B Phi_R(t) and phi o gamma^M = gamma_M
// on M = V. Stage two imposes both anti-multiplicativity laws, linearized over the stage-one family.
AntipodeResult solve_antipode(const DdaContext& c);

// Anti-automorphism laws, units, the exchange law and the phi comparison on M = V.
void check_antipode(const DdaContext& c, const Matrix& s, Report& report, const std::string& prefix);
// S(t * a) = Phi_R(t) o a, recorded for information only.
void antipode_diagnostics(const DdaContext& c, const Matrix& s, Report& report, const std::string& prefix);

}  // namespace ddalab
