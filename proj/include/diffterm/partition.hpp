// Partitions of {0,...,n-1} in canonical form: every element stores the least
// element of its block, so equality is a plain array comparison and printed
// output is stable across runs.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace diffterm {

class Partition {
 public:
  static Partition bottom(int n);
  static Partition top(int n);
  // Accepts any map sending each element to some member of its block
  // (chains and arbitrary roots allowed) and canonicalizes it.
  static Partition from_map(const std::vector<int>& map);
  // Parses the block form `|0,1|2|3|`; whitespace is ignored and the element
  // count determines n. The blocks must partition {0,...,n-1} exactly.
  static Partition parse(std::string_view text);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int x) const { return rep_[x]; }
  bool related(int x, int y) const { return rep_[x] == rep_[y]; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_of(int x) const;
  // Refinement order: true when every block of *this lies inside a block of q.
  bool leq(const Partition& q) const;
  const std::vector<int>& representatives() const { return rep_; }
  std::string to_text() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend class UnionFind;
  explicit Partition(std::vector<int> rep) : rep_(std::move(rep)) {}
  std::vector<int> rep_;
};

// Lattice operations on partitions of the same set. Join is the transitive
// closure of the union of the block relations, meet is blockwise
// intersection; both throw std::invalid_argument on a size mismatch.
Partition join(const Partition& p, const Partition& q);
Partition meet(const Partition& p, const Partition& q);

// Standard union-find with path halving; converts to a canonical Partition.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int x, int y);  // true when two distinct blocks merged
  Partition to_partition();
 private:
  std::vector<int> parent_;
};

}  // namespace diffterm
