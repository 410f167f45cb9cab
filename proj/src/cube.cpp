#include "filippov/cube.hpp"

namespace filippov {

ThreeLieAlgebra cube_bracket(const ThreeLieAlgebra& base) {
  const std::size_t n = base.dim(), total = 3 * n;
  StructureTable table;
  auto place = [&](std::size_t block, const Vector& v) {
    Vector out(total);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(block * n));
    return out;
  };
  for (const auto& t : detail::combinations(total, 3)) {
    const std::size_t bi = t[0] / n, bj = t[1] / n, bk = t[2] / n;
    const std::size_t a = t[0] % n, b = t[1] % n, c = t[2] % n;
    // blocks come sorted; only XYY, YYY and ZZZ brackets survive
    std::size_t out_block;
    if (bi == 0 && bj == 1 && bk == 1)
      out_block = 0;
    else if (bi == 1 && bk == 1)
      out_block = 1;
    else if (bi == 2)
      out_block = 2;
    else
      continue;
    Vector v = base.basis_bracket(a, b, c);
    if (!is_zero(v)) table.emplace(std::array{t[0], t[1], t[2]}, place(out_block, v));
  }
  std::vector<std::string> labels;
  for (const char* prefix : {"x:", "y:", "z:"})
    for (const auto& l : base.labels()) labels.push_back(prefix + l);
  return ThreeLieAlgebra(total, std::move(labels), table);
}

CubeAlgebra::CubeAlgebra(ThreeLieAlgebra base) : base_(std::move(base)) {
  if (!check_fundamental_identity(base_).passed) throw InputError("cube: base algebra fails the fundamental identity");
  carrier_ = cube_bracket(base_);
}

Subspace CubeAlgebra::blocks(std::initializer_list<Block> which) const {
  const std::size_t n = base_.dim();
  std::vector<Vector> vectors;
  for (Block b : which)
    for (std::size_t i = 0; i < n; ++i) vectors.push_back(unit_vector(3 * n, static_cast<std::size_t>(b) * n + i));
  return Subspace::span(3 * n, vectors);
}

CubeAlgebra cube(const ThreeLieAlgebra& base) { return CubeAlgebra(base); }

std::vector<CheckReport> check_cube_blocks(const CubeAlgebra& c) {
  using B = CubeAlgebra::Block;
  const auto& a = c.carrier();
  return {
      boolean_report("z_block_abelian_ideal", is_abelian_ideal(a, c.blocks({B::z}))),
      boolean_report("y_block_subalgebra", is_subalgebra(a, c.blocks({B::y}))),
      boolean_report("x_block_subalgebra", is_subalgebra(a, c.blocks({B::x}))),
      boolean_report("xy_block_subalgebra", is_subalgebra(a, c.blocks({B::x, B::y}))),
      boolean_report("yz_block_subalgebra", is_subalgebra(a, c.blocks({B::y, B::z}))),
  };
}

LinearMap f_delta(const ThreeLieAlgebra& base, const LinearMap& d) {
  const std::size_t n = base.dim();
  if (d.source_dim() != n || d.target_dim() != n)
    throw InputError("f_delta: map must be " + std::to_string(n) + "x" + std::to_string(n));
  return LinearMap(vstack(vstack(d.matrix(), Matrix::identity(n)), Matrix::identity(n)));
}

FDeltaCriterion check_f_delta(const CubeAlgebra& c, const LinearMap& d, const CheckOptions& options) {
  FDeltaCriterion out;
  out.is_derivation = is_derivation(c.base(), d, options).passed;
  out.is_homomorphism = is_homomorphism(f_delta(c.base(), d), c.base(), c.carrier(), options).passed;
  return out;
}

LinearMap cube_map(const LinearMap& u) {
  return LinearMap(block_diagonal({u.matrix(), u.matrix(), u.matrix()}));
}

CheckReport check_cube_sequence(const ExtensionSpec& spec, const CheckOptions& options) {
  ThreeLieAlgebra a = assemble(spec);
  CubeAlgebra ca(a), ch(spec.h()), cm(spec.m());
  LinearMap i3 = cube_map(inclusion_map(spec)), p3 = cube_map(projection_map(spec));
  CheckReport total;
  total.name = "cube_sequence";
  auto fold = [&](CheckReport part, const char* identity) {
    for (auto& w : part.witnesses) w.identity = identity;
    merge_into(total, part, options.witness_cap);
  };
  fold(is_homomorphism(i3, ch.carrier(), ca.carrier(), options), "inclusion_homomorphism");
  fold(is_homomorphism(p3, ca.carrier(), cm.carrier(), options), "projection_homomorphism");
  fold(boolean_report("image_equals_kernel", column_space(i3.matrix()) == nullspace(p3.matrix())),
       "image_equals_kernel");
  fold(boolean_report("inclusion_injective", rank(i3.matrix()) == i3.source_dim()), "inclusion_injective");
  fold(boolean_report("projection_surjective", rank(p3.matrix()) == p3.target_dim()), "projection_surjective");
  return total;
}

}  // namespace filippov
