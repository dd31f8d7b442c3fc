// The two commutator procedures: the matrix-closure iteration (the oracle of
// record) and the transitive-closure fast path for symmetric calls, plus the
// abelian-over test built on them.
#pragma once

#include <vector>

#include "diffterm/algebra.hpp"
#include "diffterm/partition.hpp"

namespace diffterm {

// A 2x2 matrix over A with rows (x,y) and (u,v).
struct MatrixQuad {
  int x, y, u, v;
  friend bool operator==(const MatrixQuad&, const MatrixQuad&) = default;
};

struct CommutatorStats {
  int rounds = 0;  // congruence-generation passes of the delta iteration
};

// Closure under coordinatewise operations of the generator matrices with
// equal rows (alpha-pairs) and equal columns (beta-pairs). Returned sorted by
// packed code.
std::vector<MatrixQuad> m_closure(const FiniteAlgebra& A,
                                  const Partition& alpha,
                                  const Partition& beta);

// [alpha,beta] by iterating: delta' = Cg of the second rows of matrices whose
// first rows are delta-related, until the fixpoint. Inputs must be
// congruences.
Partition commutator_matrices(const FiniteAlgebra& A, const Partition& alpha,
                              const Partition& beta,
                              CommutatorStats* stats = nullptr);

// [beta,beta] via the congruence Delta on the pair algebra A(beta) generated
// by the diagonal-column pairs, with the same delta iteration run against
// Delta membership. Only the symmetric call is offered; the caller must have
// established that A generates a variety omitting the unary type (so a Taylor
// term exists), which is what makes the shortcut agree with the matrix
// procedure.
Partition commutator_fast(const FiniteAlgebra& A, const Partition& beta,
                          CommutatorStats* stats = nullptr);

namespace detail {
// General (alpha,beta) engine behind commutator_fast. Valid when A has a
// Taylor term and [alpha,beta] = [beta,alpha]; kept out of the public surface
// and used by the symmetric-agreement checks.
Partition commutator_fast_general(const FiniteAlgebra& A,
                                  const Partition& alpha,
                                  const Partition& beta,
                                  CommutatorStats* stats = nullptr);
}  // namespace detail

// [beta,beta] <= alpha. Requires alpha <= beta; allow_fast selects the fast
// path and is only legitimate once type-1 omission is established.
bool is_abelian_over(const FiniteAlgebra& A, const Partition& beta,
                     const Partition& alpha, bool allow_fast = false);

}  // namespace diffterm
