// Term DAGs record how generated elements arise: a node is either a generator
// leaf or the application of a basic operation to earlier nodes. Witnesses
// share one DAG per closure run, so they stay linear in the closure work even
// when the expanded terms would be exponentially large.
#pragma once

#include <memory>
#include <span>
#include <vector>

namespace diffterm {

class FiniteAlgebra;

class TermDag {
 public:
  int add_generator(int generator_index);
  int add_apply(int op_index, std::span<const int> children);

  int size() const { return static_cast<int>(nodes_.size()); }
  bool is_generator(int node) const { return nodes_[node].op < 0; }
  int generator_index(int node) const { return nodes_[node].first; }
  int op_index(int node) const { return nodes_[node].op; }
  std::span<const int> children(int node) const;

 private:
  struct Node {
    int op;     // -1 for a generator leaf, otherwise the operation index
    int first;  // generator index, or offset into the child arena
    int count;  // child count
  };
  std::vector<Node> nodes_;
  std::vector<int> arena_;
};

struct TermWitness {
  std::shared_ptr<const TermDag> dag;
  int root = -1;
};

// Evaluates node `root` in A, binding generator i to values[i]. Shared nodes
// are evaluated once. Throws std::invalid_argument on generator indices not
// covered by `values` or on arity mismatches against A's operations.
int evaluate_term(const FiniteAlgebra& A, const TermDag& dag, int root,
                  std::span<const int> values);

}  // namespace diffterm
