#pragma once

// The exterior direct sum A^3: three copies of A with
//   [(x1,y1,z1),(x2,y2,z2),(x3,y3,z3)]
//     = ([x1,y2,y3] + [x2,y3,y1] + [x3,y1,y2], [y1,y2,y3], [z1,z2,z3]).
// Carrier basis is X-block, Y-block, Z-block, each a copy of A's basis.

#include "filippov/extension.hpp"
#include "filippov/trilie.hpp"

namespace filippov {

class CubeAlgebra {
 public:
  /// Throws InputError if the base fails the fundamental identity.
  explicit CubeAlgebra(ThreeLieAlgebra base);

  const ThreeLieAlgebra& base() const { return base_; }
  const ThreeLieAlgebra& carrier() const { return carrier_; }
  std::size_t base_dim() const { return base_.dim(); }

  enum Block { x = 0, y = 1, z = 2 };
  /// Sum of the selected blocks as a subspace of the carrier.
  Subspace blocks(std::initializer_list<Block> which) const;

 private:
  ThreeLieAlgebra base_;
  ThreeLieAlgebra carrier_;
};

/// Structure constants of A^3 without validating A.
ThreeLieAlgebra cube_bracket(const ThreeLieAlgebra& base);

CubeAlgebra cube(const ThreeLieAlgebra& base);

/// Block structure: (0,0,A) an abelian ideal, and (0,A,0), (A,0,0),
/// (A,A,0), (0,A,A) subalgebras. One report per claim.
std::vector<CheckReport> check_cube_blocks(const CubeAlgebra& c);

/// x -> (d x, x, x), a 3n x n map.
LinearMap f_delta(const ThreeLieAlgebra& base, const LinearMap& d);

struct FDeltaCriterion {
  bool is_derivation = false;
  bool is_homomorphism = false;
};

/// d is a derivation exactly when f_delta(d) is a homomorphism A -> A^3.
FDeltaCriterion check_f_delta(const CubeAlgebra& c, const LinearMap& d, const CheckOptions& options = {});

/// u x u x u for a map u, as a block-diagonal map between cube carriers.
LinearMap cube_map(const LinearMap& u);

/// 0 -> H^3 -> A^3 -> M^3 -> 0 via i x i x i and p x p x p.
CheckReport check_cube_sequence(const ExtensionSpec& spec, const CheckOptions& options = {});

}  // namespace filippov
