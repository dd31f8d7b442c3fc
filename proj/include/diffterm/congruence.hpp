// Partitions as congruences: generation by pair propagation, the
// join-irreducibility test with its lower cover, and kernels and lifts on
// subproducts.
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diffterm/algebra.hpp"
#include "diffterm/partition.hpp"

namespace diffterm {

// Single-coordinate substitution test: for every operation, tuple, position,
// and y related to the occupant of that position, the two images must be
// related.
bool is_congruence(const FiniteAlgebra& A, const Partition& p);

// The least congruence identifying a and b.
Partition principal_congruence(const FiniteAlgebra& A, int a, int b);

// The least congruence containing all the given pairs; the empty list gives
// the bottom partition.
Partition congruence_generated(const FiniteAlgebra& A,
                               std::span<const std::pair<int, int>> pairs);

// For beta = Cg(a,b): joins every principal congruence below beta that avoids
// (a,b). When the result still avoids (a,b) it is the unique lower cover of
// the join-irreducible beta; otherwise beta is a join of strictly smaller
// congruences and the result is absent. a == b yields absent.
std::optional<Partition> ji_lower_cover(const FiniteAlgebra& A, int a, int b);

// Partition of the carrier grouping elements with equal chosen coordinate.
Partition kernel_of_projection(const SubProduct& S, int coord);

// Relates two carrier pairs exactly when their chosen coordinates are
// theta-related in the parent.
Partition lift_congruence(const SubProduct& S, const Partition& theta,
                          int coord);

// Every congruence: the join closure of the principal congruences plus
// bottom, sorted by block count descending (ties by representative array).
std::vector<Partition> all_congruences(const FiniteAlgebra& A);

}  // namespace diffterm
