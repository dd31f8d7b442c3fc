// Type tests from tame congruence theory: variety-level omission of the unary
// type, and the abelianness test that labels a prime quotient as affine.
#pragma once

#include <optional>

#include "diffterm/algebra.hpp"
#include "diffterm/congruence.hpp"
#include "diffterm/partition.hpp"

namespace diffterm {

// A 2-element quotient of a 2-generated subalgebra on which every basic
// operation is a coordinate projection.
struct TypeOneWitness {
  int a, b;                      // generators in the ambient algebra
  std::vector<int> subuniverse;  // carrier of Sg(a,b)
  Partition theta;               // the 2-block congruence on the subalgebra
  FiniteAlgebra quotient;        // the projections-only 2-element algebra
};

struct TypeOneResult {
  bool omits;
  std::optional<TypeOneWitness> witness;  // present exactly when !omits
};

// False exactly when some 2-element algebra term equivalent to a set lies in
// HS(A): any such quotient already appears over a 2-generated subalgebra,
// since the preimages of its two elements generate a subalgebra still mapping
// onto it. Requires an idempotent input.
TypeOneResult omits_type_one(const FiniteAlgebra& A);

// For a join-irreducible beta with unique lower cover alpha, in an algebra
// whose variety omits the unary type, the quotient has the affine type
// exactly when [beta,beta] <= alpha. Rejects alpha == beta.
bool prime_quotient_is_type2(const FiniteAlgebra& A, const Partition& alpha,
                             const Partition& beta, bool allow_fast = false);

}  // namespace diffterm
