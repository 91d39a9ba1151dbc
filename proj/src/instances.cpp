#include "ddalab/instances.hpp"

namespace ddalab {

StructAlgebra diagonal_algebra(const Field& f, std::size_t n) {
  FinSpace s = FinSpace::numbered(f, n, "d");
  return StructAlgebra::from_bilinear(
      s, [&](std::size_t a, std::size_t b) { return a == b ? unit_vec(f, n, a) : zero_vec(f, n); },
      Vec(n, f.one()));
}

StructAlgebra matrix_algebra(const Field& f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  Vec one = zero_vec(f, n * n);
  for (std::size_t i = 0; i < n; ++i) one[i * n + i] = f.one();
  return StructAlgebra::from_bilinear(
      FinSpace{f, labels},
      [&](std::size_t a, std::size_t b) {
        return a % n == b / n ? unit_vec(f, n * n, (a / n) * n + b % n) : zero_vec(f, n * n);
      },
      one);
}

HModuleAlgebra function_module_algebra(const DdaContext& c, const Group& g) {
  const Field& f = c.d.field();
  const std::size_t n = g.order();
  if (c.d.dim() != n) throw std::invalid_argument("group order does not match the double algebra");
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("d_" + l);
  RightHModule m{FinSpace{f, labels}, {}};
  for (std::size_t h = 0; h < n; ++h) {
    Matrix a(f, n, n);
    for (std::size_t y = 0; y < n; ++y) a(g.mul(g.inv(h), y), y) = f.one();
    m.act.push_back(std::move(a));
  }
  StructAlgebra alg = diagonal_algebra(f, n);
  alg = StructAlgebra(m.space, [&] {
    std::vector<Vec> ps;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) ps.push_back(alg.product(a, b));
    return ps;
  }(), alg.unit());
  return make_module_algebra(c, "k^" + g.name, std::move(m), std::move(alg));
}

HModuleAlgebra trivial_action_module_algebra(const DdaContext& c, StructAlgebra algebra, std::string name) {
  const SubAlgebra& R = c.get(Base::R).sub;
  if (R.dim() != 1) throw std::invalid_argument("trivial action needs a one-dimensional base R");
  Vec e_coord = R.coords(c.d.e());
  RightHModule m{algebra.space(), {}};
  for (std::size_t h = 0; h < c.d.dim(); ++h) {
    Scalar eps = R.coords(c.phi(Base::R, c.d.horizontal.basis(h)))[0] / e_coord[0];
    m.act.push_back(Matrix::identity(algebra.field(), algebra.dim()).scaled(eps));
  }
  return make_module_algebra(c, std::move(name), std::move(m), std::move(algebra));
}

HModuleAlgebra self_module_algebra(const DdaContext& c) {
  return make_module_algebra(c, "V", regular_module(c), c.d.vertical);
}

}  // namespace ddalab
