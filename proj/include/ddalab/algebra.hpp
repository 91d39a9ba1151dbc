#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddalab/linalg.hpp"
#include "ddalab/report.hpp"

namespace ddalab {

// Finite-dimensional algebra given by structure constants b_i b_j = sum_k c_ij^k b_k.
class StructAlgebra {
 public:
  StructAlgebra() = default;
  // products[i * dim + j] = b_i b_j
  StructAlgebra(FinSpace space, std::vector<Vec> products, std::optional<Vec> unit);
  static StructAlgebra from_bilinear(FinSpace space, const std::function<Vec(std::size_t, std::size_t)>& f,
                                     std::optional<Vec> unit);

  const Field& field() const { return space_.field; }
  std::size_t dim() const { return space_.dim(); }
  const FinSpace& space() const { return space_; }

  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis(std::size_t i) const { return unit_vec(field(), dim(), i); }
  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t j) const { return right_[j]; }
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& y) const;

  bool has_unit() const { return unit_.has_value(); }
  const Vec& unit() const;
  StructAlgebra opposite() const;

 private:
  FinSpace space_;
  std::vector<Vec> products_;
  std::vector<Matrix> left_, right_;
  std::optional<Vec> unit_;
};

// Associativity on basis triples and two-sided unit; ids are prefix + ".associative" / ".unit".
void check_algebra(const StructAlgebra& a, Report& report, const std::string& prefix);
std::optional<Vec> find_unit(const StructAlgebra& a);
// f(xy) = f(x)f(y) (or f(y)f(x) when anti) on basis pairs and f(1) = 1.
void check_algebra_map(const StructAlgebra& src, const StructAlgebra& dst, const Matrix& f, bool anti,
                       Report& report, const std::string& id);

// Generators of a unital algebra, chosen greedily (a generic element first, then basis vectors).
std::vector<Vec> algebra_generators(const StructAlgebra& a);
// Smallest unital subalgebra containing the given elements.
SpanBuilder generated_subalgebra(const StructAlgebra& a, const std::vector<Vec>& gens);

// Subalgebra spanned by elements of an ambient algebra, on a canonical (reduced echelon) basis.
struct SubAlgebra {
  StructAlgebra algebra;
  Matrix embed;                     // ambient x dim
  std::vector<std::size_t> pivots;  // coords(v)[r] = v[pivots[r]]
  std::size_t dim() const { return algebra.dim(); }
  Vec to_ambient(const Vec& c) const { return embed.apply(c); }
  bool contains(const Vec& v) const;
  Vec coords(const Vec& v) const;  // throws std::domain_error outside the span
  std::vector<Vec> ambient_basis() const { return embed.columns(); }
};

class not_closed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws not_closed when the span is not closed under the product or has no unit.
SubAlgebra subalgebra_from_span(const StructAlgebra& ambient, const std::vector<Vec>& spanning,
                                const std::string& label_prefix);
// Elements commuting with every element of `with`.
SubAlgebra centralizer(const StructAlgebra& a, const std::vector<Vec>& with, const std::string& label_prefix);

// Linear operators on one space, indexed by a list of acting elements shared with
// other ActionSets (left and right actions can be mixed freely).
struct ActionSet {
  std::size_t dim = 0;
  std::vector<Matrix> ops;
};

ActionSet right_regular(const StructAlgebra& a, const std::vector<Vec>& acting);
ActionSet left_regular(const StructAlgebra& a, const std::vector<Vec>& acting);

// Maps f: X -> Y (dim Y x dim X) with f X_k = Y_k f for all k.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(const Field& f, std::size_t src, std::size_t dst, std::vector<Matrix> basis,
           std::vector<std::size_t> free_entries);
  std::size_t dim() const { return basis_.size(); }
  std::size_t source_dim() const { return src_; }
  std::size_t target_dim() const { return dst_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  bool contains(const Matrix& f) const;
  Vec coords(const Matrix& f) const;  // throws std::domain_error outside the space
  Matrix element(const Vec& c) const;

 private:
  Field field_;
  std::size_t src_ = 0, dst_ = 0;
  std::vector<Matrix> basis_;
  std::vector<std::size_t> free_;  // flattened entries that are coordinates
};

HomSpace hom_space(const Field& f, const ActionSet& x, const ActionSet& y);
// Kernel of the matrix whose rows are given, using early rank saturation.
std::vector<Vec> kernel_of_rows(const Field& f, std::size_t n, const std::vector<Vec>& rows,
                                std::vector<std::size_t>* free_columns = nullptr);

// Tensor product X_1 (x)_{R_1} X_2 (x)_{R_2} ... as a quotient of the ambient
// Kronecker product. Junction k pairs the right action on X_k with the left
// action on X_{k+1} for each acting element (generators suffice).
struct TensorJunction {
  std::vector<Matrix> right_ops;
  std::vector<Matrix> left_ops;
};

class TensorProduct {
 public:
  TensorProduct() = default;
  TensorProduct(const Field& f, std::vector<std::size_t> dims, std::vector<TensorJunction> junctions);

  const Field& field() const { return space_.field(); }
  std::size_t dim() const { return space_.dim(); }
  std::size_t ambient_dim() const { return space_.ambient_dim(); }
  const std::vector<std::size_t>& factor_dims() const { return dims_; }
  const QuotientSpace& space() const { return space_; }

  std::size_t ambient_index(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> ambient_tuple(std::size_t index) const;
  Vec pure(const std::vector<Vec>& factors) const;
  Vec project(const Vec& ambient) const { return space_.project(ambient); }
  Vec lift(const Vec& q) const { return space_.lift(q); }
  // Matrix of a map given on ambient basis tuples; values already in the target space.
  // checked: evaluate on all tuples and verify the relations are killed.
  Matrix matrix_of(const std::function<Vec(const std::vector<std::size_t>&)>& f, std::size_t out_dim,
                   bool checked) const;

 private:
  std::vector<std::size_t> dims_;
  QuotientSpace space_;
};

// Projective basis / dual-basis data of a Frobenius extension X in A with Frobenius map phi.
struct FrobeniusData {
  TensorProduct tensor;                    // A (x)_X A
  Vec element;                             // sum u_k (x) v_k in tensor coordinates
  std::vector<std::pair<Vec, Vec>> pairs;  // ambient representative
};

struct FrobeniusResult {
  std::optional<FrobeniusData> data;
  std::string failure;
};

// Solves sum u_k phi(v_k a) = a = sum phi(a u_k) v_k for the dual basis element of
// A (x)_X A, where X is generated by base_gens and phi: A -> A has image in X.
FrobeniusResult frobenius_dual_basis(const StructAlgebra& a, const std::vector<Vec>& base_gens,
                                     const Matrix& phi);
// Pairs u_k, v_k read off an ambient vector of A (x) A.
std::vector<std::pair<Vec, Vec>> split_pairs(const Field& f, std::size_t n1, std::size_t n2, const Vec& ambient);

// X is a direct summand of a finite power of Y (same acting elements): the identity of X
// lies in the span of composites f g, f in Hom(Y, X), g in a generating set of Hom(X, Y)
// over End(Y). copies is the size of that generating set.
struct SummandTest {
  bool holds = false;
  std::size_t copies = 0;
  std::string witness;
};

SummandTest summand_of_power(const Field& f, const ActionSet& x, const ActionSet& y);

}  // namespace ddalab
