#pragma once

#include "ddalab/hopf.hpp"
#include "ddalab/representation.hpp"

namespace ddalab {

// k^G with pointwise product and delta_y < g = delta_{g^-1 y}, over the DDA of kG.
HModuleAlgebra function_module_algebra(const DdaContext& c, const Group& g);
// m < h = eps(h) m with eps(h) the coefficient of Phi_R(h) on e; needs R = k.
HModuleAlgebra trivial_action_module_algebra(const DdaContext& c, StructAlgebra algebra, std::string name);
// M = V with a < h = a * h and the vertical product: the canonical self-test.
HModuleAlgebra self_module_algebra(const DdaContext& c);
// k^n with pointwise product.
StructAlgebra diagonal_algebra(const Field& f, std::size_t n);
// Full matrix algebra M_n with basis E_ij (row-major).
StructAlgebra matrix_algebra(const Field& f, std::size_t n);

}  // namespace ddalab
