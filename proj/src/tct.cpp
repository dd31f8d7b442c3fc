#include "diffterm/tct.hpp"

#include <stdexcept>

#include "diffterm/commutator.hpp"

namespace diffterm {

namespace {

// Is f the i-th coordinate projection on a 2-element universe?
bool is_projection_onto(const OperationTable& f, int pos) {
  const int k = f.arity;
  for (std::size_t idx = 0; idx < f.entries.size(); ++idx)
    if (f.entries[idx] != static_cast<int>((idx >> (k - 1 - pos)) & 1))
      return false;
  return true;
}

bool all_operations_projections(const FiniteAlgebra& Q) {
  for (const OperationTable& f : Q.ops()) {
    bool projection = false;
    for (int pos = 0; pos < f.arity && !projection; ++pos)
      projection = is_projection_onto(f, pos);
    if (!projection) return false;
  }
  return true;
}

}  // namespace

TypeOneResult omits_type_one(const FiniteAlgebra& A) {
  if (!A.is_idempotent())
    throw std::invalid_argument("algebra is not idempotent");
  const int n = A.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      GeneratedSet gs = generate_subalgebra(A, std::vector<int>{a, b});
      InducedSubalgebra sub = induce_subalgebra(A, gs.elements);
      for (const Partition& theta : all_congruences(sub.algebra)) {
        if (theta.block_count() != 2) continue;
        Quotient q = quotient(sub.algebra, theta);
        if (all_operations_projections(q.algebra))
          return {false,
                  TypeOneWitness{a, b, gs.elements, theta, q.algebra}};
      }
    }
  }
  return {true, std::nullopt};
}

bool prime_quotient_is_type2(const FiniteAlgebra& A, const Partition& alpha,
                             const Partition& beta, bool allow_fast) {
  if (alpha == beta)
    throw std::invalid_argument("not a prime quotient: alpha equals beta");
  return is_abelian_over(A, beta, alpha, allow_fast);
}

}  // namespace diffterm
