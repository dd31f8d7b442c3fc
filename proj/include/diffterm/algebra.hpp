// Finite algebras as dense operation tables, together with the generation
// machinery everything else runs on: direct squares, induced subalgebras,
// quotients, and subuniverse closure with term witnesses.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffterm/partition.hpp"
#include "diffterm/term_dag.hpp"
#include "diffterm/ternary_table.hpp"

namespace diffterm {

struct OperationTable {
  std::string name;
  int arity = 0;
  std::vector<int> entries;  // n^arity values, index(x1,..,xk) = sum xi*n^(k-i)

  friend bool operator==(const OperationTable&, const OperationTable&) = default;
};

class FiniteAlgebra {
 public:
  // Validates sizes and entry ranges; throws std::invalid_argument.
  FiniteAlgebra(std::string name, int size, std::vector<OperationTable> ops);

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  int op_count() const { return static_cast<int>(ops_.size()); }
  const OperationTable& op(int i) const { return ops_[i]; }
  const std::vector<OperationTable>& ops() const { return ops_; }

  // Checked table lookup; index/arity violations throw std::invalid_argument.
  int apply(int op_index, std::span<const int> args) const;
  // f(x,...,x) = x for every operation and every x. A constant is idempotent
  // only when the universe is a single element.
  bool is_idempotent() const;
  // Algebra on n^2 elements, pair (p,q) encoded as p*n + q, operations acting
  // coordinatewise.
  FiniteAlgebra direct_square() const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::string name_;
  int n_;
  std::vector<OperationTable> ops_;
};

// Result of subuniverse generation: elements ascending, witnesses aligned.
struct GeneratedSet {
  std::vector<int> elements;
  std::shared_ptr<const TermDag> dag;
  std::vector<int> witness_nodes;

  TermWitness witness(int i) const { return {dag, witness_nodes[i]}; }
};

// Least subset containing the generators and closed under all operations.
// Closure is breadth-first: per round, operations in declaration order and
// argument tuples in row-major order over the elements known at round start
// (ascending), restricted to tuples that involve an element discovered in the
// previous round. Generators must be nonempty and in range.
GeneratedSet generate_subalgebra(const FiniteAlgebra& A,
                                 std::span<const int> generators);

// The algebra induced on a sorted subuniverse, with the element list mapping
// new indices back to parent elements. Throws when the set is not closed.
struct InducedSubalgebra {
  FiniteAlgebra algebra;
  std::vector<int> elements;
};
InducedSubalgebra induce_subalgebra(const FiniteAlgebra& A,
                                    std::span<const int> subuniverse);

// A subalgebra of the direct square with its carrier kept as coordinate
// pairs, the induced algebra on the re-indexed carrier, and one witness per
// carrier element.
class SubProduct {
 public:
  SubProduct(std::shared_ptr<const FiniteAlgebra> parent,
             FiniteAlgebra induced, std::vector<std::pair<int, int>> carrier,
             std::shared_ptr<const TermDag> dag, std::vector<int> nodes);

  const FiniteAlgebra& parent() const { return *parent_; }
  const FiniteAlgebra& algebra() const { return algebra_; }
  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::pair<int, int>>& carrier() const { return carrier_; }
  std::pair<int, int> pair_at(int i) const { return carrier_[i]; }
  int index_of(int first, int second) const;  // -1 when absent
  TermWitness witness(int i) const { return {dag_, witness_nodes_[i]}; }

 private:
  std::shared_ptr<const FiniteAlgebra> parent_;
  FiniteAlgebra algebra_;
  std::vector<std::pair<int, int>> carrier_;
  std::vector<int> pair_index_;  // parent n^2 codes -> carrier index
  std::shared_ptr<const TermDag> dag_;
  std::vector<int> witness_nodes_;
};

// Full closure of pair generators inside the square of an idempotent algebra.
SubProduct generate_subproduct(const FiniteAlgebra& A,
                               std::span<const std::pair<int, int>> generators);

// Early-exit variant: generation halts at the first pair satisfying `stop`
// (generators are tested first, in order, then each pair as it is generated).
// Returns nothing when the closure exhausts without a hit.
struct SubProductHit {
  std::pair<int, int> element;
  TermWitness witness;
};
std::optional<SubProductHit> generate_subproduct_search(
    const FiniteAlgebra& A, std::span<const std::pair<int, int>> generators,
    const std::function<bool(int, int)>& stop);

// Quotient by a congruence; classes are indexed by ascending least elements
// and class_map sends each element to its class index. Throws when theta is
// not compatible with some operation.
struct Quotient {
  FiniteAlgebra algebra;
  std::vector<int> class_map;
};
Quotient quotient(const FiniteAlgebra& A, const Partition& theta);

// Cayley table of a witness over generators bound to the three variable
// positions; evaluation memoizes shared DAG nodes. Generator indices must lie
// in {0,1,2}.
TernaryTable witness_to_ternary_table(const FiniteAlgebra& A,
                                      const TermWitness& w);

}  // namespace diffterm
