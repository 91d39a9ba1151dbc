#pragma once

#include <string>
#include <vector>

#include "ddalab/double_algebra.hpp"

namespace ddalab {

// Finite group by multiplication table; element 0 is the identity.
struct Group {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::size_t> table;  // table[g * n + h] = gh
  std::size_t order() const { return labels.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table[g * order() + h]; }
  std::size_t inv(std::size_t g) const;
};

Group trivial_group();
Group cyclic_group(std::size_t n);
// Permutations of {0,1,2}, identity first, composition (gh)(x) = g(h(x)).
Group symmetric_group3();
// "trivial", "C<n>", "S3"; throws std::invalid_argument otherwise.
Group group_by_name(const std::string& name);

// Finite-dimensional Hopf algebra with a left integral and a dual integral.
struct HopfData {
  StructAlgebra algebra;
  Matrix comult;      // n^2 x n, ambient coordinates of A (x) A
  Vec counit;         // eps(b_j)
  Matrix antipode;
  Vec integral;       // Lambda
  Vec dual_integral;  // lambda(b_j)
};

HopfData group_hopf(const Group& g, const Field& f);
// Hopf axioms, integral properties and the normalization eps(Lambda) = 1 = lambda(Lambda).
void check_hopf(const HopfData& h, Report& report);

class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rescales Lambda and lambda so that eps(Lambda) = 1 and lambda(Lambda) = 1;
// throws construction_error when either value vanishes.
HopfData normalize_integrals(HopfData h);

// star = Hopf product (i = 1); circ = convolution product of the dual transported
// along theta(h) = lambda(h * -), so e = Lambda. Throws construction_error for a
// singular pairing or an integral that cannot be normalized.
DoubleAlgebra dda_from_hopf(const HopfData& h);
// Hopf antipode transported to the double algebra: lambda(S(h) * x) = lambda(h * S_H(x)).
Matrix transported_antipode(const HopfData& h);

DoubleAlgebra trivial_dda(const Field& f);

}  // namespace ddalab
