#pragma once

#include <array>
#include <optional>
#include <string>

#include "ddalab/algebra.hpp"

namespace ddalab {

// One vector space carrying a vertical algebra V = (A, circ, e) and a
// horizontal algebra H = (A, star, i) on the same basis.
struct DoubleAlgebra {
  StructAlgebra vertical;
  StructAlgebra horizontal;

  const Field& field() const { return vertical.field(); }
  std::size_t dim() const { return vertical.dim(); }
  const FinSpace& space() const { return vertical.space(); }
  const Vec& e() const { return vertical.unit(); }
  const Vec& i() const { return horizontal.unit(); }
  Vec circ(const Vec& a, const Vec& b) const { return vertical.mul(a, b); }
  Vec star(const Vec& a, const Vec& b) const { return horizontal.mul(a, b); }
};

enum class Base { L, R, B, T };
const char* base_name(Base b);
constexpr std::array<Base, 4> kBases{Base::L, Base::R, Base::B, Base::T};

// L, R live in V (acting through circ); B, T live in H (acting through star).
struct BaseAlgebra {
  Base which = Base::L;
  SubAlgebra sub;
  Matrix phi;              // A -> A with image in sub: a*e, e*a, a o i, i o a
  std::vector<Vec> gens;   // generators of sub, as elements of A
  FrobeniusData frob;      // A (x)_X A and the dual basis of phi
  bool in_vertical() const { return which == Base::L || which == Base::R; }
};

struct BaseData {
  std::array<BaseAlgebra, 4> bases;
  const BaseAlgebra& get(Base b) const { return bases[static_cast<std::size_t>(b)]; }
  BaseAlgebra& get(Base b) { return bases[static_cast<std::size_t>(b)]; }
};

// Frobenius map of each base, written as a matrix on A.
Matrix frobenius_map(const DoubleAlgebra& d, Base b);

// Derives the four base algebras and their Frobenius dual bases. Failures are
// recorded in the report; nullopt when any base could not be built.
std::optional<BaseData> derive_base_data(const DoubleAlgebra& d, Report& report);

// Delta_X(a) = sum (a u_k) (x)_X v_k, product taken in the algebra containing X.
struct Comultiplications {
  std::array<Matrix, 4> delta;  // A -> A (x)_X A, tensor coordinates of base X
  const Matrix& get(Base b) const { return delta[static_cast<std::size_t>(b)]; }
};

Comultiplications comultiplications(const DoubleAlgebra& d, const BaseData& base);
// Coassociativity, counit laws and base-bimodule property of each Delta_X.
void check_comultiplications(const DoubleAlgebra& d, const BaseData& base, const Comultiplications& c,
                             Report& report);
// The four mixed distributive laws on all basis triples.
void check_distributivity(const DoubleAlgebra& d, const BaseData& base, Report& report);

// Sum over the dual-basis pairs of X: (mul(a, u_k), v_k).
std::vector<std::pair<Vec, Vec>> coproduct_pairs(const DoubleAlgebra& d, const BaseData& base, Base b,
                                                 const Vec& a);

// Bialgebroid structure (A, X, s, t, Delta, eps): left when the base acts by left
// multiplications, right when it acts by right multiplications.
struct Bialgebroid {
  std::string name;
  bool left = false;
  StructAlgebra total;
  StructAlgebra base;
  Matrix s, t;         // base -> total
  TensorProduct tensor;  // total (x)_base total for the bialgebroid bimodule structure
  Matrix delta;        // total -> tensor
  Matrix eps;          // total -> base
};

// Native tensor product for a bialgebroid with given source and target maps.
TensorProduct bialgebroid_tensor(const StructAlgebra& total, const StructAlgebra& base, const Matrix& s,
                                 const Matrix& t, bool left);
void check_bialgebroid(const Bialgebroid& b, Report& report, const std::string& prefix);

// The four views: V over B, H over L (left) and V over T, H over R (right).
// Also records whether the bialgebroid tensor agrees with the base tensor of the double algebra.
std::vector<Bialgebroid> bialgebroid_views(const DoubleAlgebra& d, const BaseData& base, const Comultiplications& c,
                                           Report& report);

// Properties used throughout: Phi_T|R and Phi_B|R are (anti-)isomorphisms onto T, B,
// and the base actions agree with circ/star as expected.
void check_base_identities(const DoubleAlgebra& d, const BaseData& base, Report& report);

struct DdaAnalysis {
  std::optional<BaseData> base;
  std::optional<Comultiplications> comul;
  Report report;
  bool valid() const { return base && comul && report.ok(); }
};

// Full validity suite: both algebras, base data, comultiplications, distributivity, views.
DdaAnalysis analyze_double_algebra(const DoubleAlgebra& d);

class invalid_structure : public std::runtime_error {
 public:
  invalid_structure(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

// A double algebra that passed the validity suite, with its derived data.
struct DdaContext {
  DoubleAlgebra d;
  BaseData base;
  Comultiplications comul;

  const BaseAlgebra& get(Base b) const { return base.get(b); }
  // Phi maps applied to vectors of A.
  Vec phi(Base b, const Vec& a) const { return base.get(b).phi.apply(a); }
  // Dual-basis pairs (a u_k, v_k) of Delta_X(a).
  std::vector<std::pair<Vec, Vec>> delta(Base b, const Vec& a) const { return coproduct_pairs(d, base, b, a); }
};

// Throws invalid_structure naming the first failing check.
DdaContext make_context(const DoubleAlgebra& d);

}  // namespace ddalab
