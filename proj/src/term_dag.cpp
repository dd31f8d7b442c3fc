#include "diffterm/term_dag.hpp"

#include <stdexcept>

#include "diffterm/algebra.hpp"

namespace diffterm {

int TermDag::add_generator(int generator_index) {
  if (generator_index < 0)
    throw std::invalid_argument("negative generator index");
  nodes_.push_back({-1, generator_index, 0});
  return static_cast<int>(nodes_.size()) - 1;
}

int TermDag::add_apply(int op_index, std::span<const int> children) {
  if (op_index < 0) throw std::invalid_argument("negative operation index");
  const int first = static_cast<int>(arena_.size());
  for (int child : children) {
    if (child < 0 || child >= size())
      throw std::invalid_argument("term node child out of range");
    arena_.push_back(child);
  }
  nodes_.push_back({op_index, first, static_cast<int>(children.size())});
  return static_cast<int>(nodes_.size()) - 1;
}

std::span<const int> TermDag::children(int node) const {
  const Node& nd = nodes_[node];
  return {arena_.data() + nd.first, static_cast<std::size_t>(nd.count)};
}

int evaluate_term(const FiniteAlgebra& A, const TermDag& dag, int root,
                  std::span<const int> values) {
  if (root < 0 || root >= dag.size())
    throw std::invalid_argument("term root out of range");
  std::vector<char> reachable(root + 1, 0);
  std::vector<int> stack{root};
  reachable[root] = 1;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    if (!dag.is_generator(node))
      for (int child : dag.children(node))
        if (!reachable[child]) {
          reachable[child] = 1;
          stack.push_back(child);
        }
  }
  // children precede parents, so one ascending pass evaluates everything
  std::vector<int> value(root + 1);
  std::vector<int> args;
  for (int node = 0; node <= root; ++node) {
    if (!reachable[node]) continue;
    if (dag.is_generator(node)) {
      int g = dag.generator_index(node);
      if (g >= static_cast<int>(values.size()))
        throw std::invalid_argument("generator index not bound to a value");
      value[node] = values[g];
    } else {
      args.clear();
      for (int child : dag.children(node)) args.push_back(value[child]);
      value[node] = A.apply(dag.op_index(node), args);
    }
  }
  return value[root];
}

}  // namespace diffterm
