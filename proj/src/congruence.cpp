#include "diffterm/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace diffterm {

namespace {

// Propagation core shared by principal_congruence and congruence_generated:
// every union event substitutes its pair through one coordinate of every
// operation, which reaches the full congruence closure by transitivity.
Partition propagate(const FiniteAlgebra& A,
                    std::span<const std::pair<int, int>> seeds) {
  const int n = A.size();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> queue(seeds.begin(), seeds.end());
  std::vector<int> args;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (!uf.unite(x, y)) continue;
    for (const OperationTable& f : A.ops()) {
      if (f.arity == 0) continue;
      const int k = f.arity;
      std::size_t rest_count = 1;
      for (int i = 1; i < k; ++i) rest_count *= static_cast<std::size_t>(n);
      args.assign(k, 0);
      for (int pos = 0; pos < k; ++pos) {
        for (std::size_t rest = 0; rest < rest_count; ++rest) {
          std::size_t r = rest;
          for (int i = k - 1; i >= 0; --i) {
            if (i == pos) continue;
            args[i] = static_cast<int>(r % n);
            r /= n;
          }
          std::size_t ix = 0, iy = 0;
          for (int i = 0; i < k; ++i) {
            ix = ix * n + static_cast<std::size_t>(i == pos ? x : args[i]);
            iy = iy * n + static_cast<std::size_t>(i == pos ? y : args[i]);
          }
          int u = f.entries[ix], v = f.entries[iy];
          if (u != v && uf.find(u) != uf.find(v)) queue.emplace_back(u, v);
        }
      }
    }
  }
  return uf.to_partition();
}

void check_element(const FiniteAlgebra& A, int x) {
  if (x < 0 || x >= A.size())
    throw std::invalid_argument("element out of range");
}

}  // namespace

bool is_congruence(const FiniteAlgebra& A, const Partition& p) {
  const int n = A.size();
  if (p.size() != n) throw std::invalid_argument("partition size mismatch");
  const auto blocks = p.blocks();
  std::vector<const std::vector<int>*> block_of(n);
  for (const auto& block : blocks)
    for (int x : block) block_of[x] = &block;

  std::vector<int> args;
  for (const OperationTable& f : A.ops()) {
    const int k = f.arity;
    if (k == 0) continue;
    std::size_t count = f.entries.size();
    args.assign(k, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      const int image = f.entries[idx];
      for (int pos = 0; pos < k; ++pos) {
        for (int y : *block_of[args[pos]]) {
          if (y == args[pos]) continue;
          std::size_t other = 0;
          for (int i = 0; i < k; ++i)
            other = other * n + static_cast<std::size_t>(i == pos ? y : args[i]);
          if (!p.related(image, f.entries[other])) return false;
        }
      }
    }
  }
  return true;
}

Partition principal_congruence(const FiniteAlgebra& A, int a, int b) {
  check_element(A, a);
  check_element(A, b);
  std::pair<int, int> seed{a, b};
  return propagate(A, {&seed, 1});
}

Partition congruence_generated(const FiniteAlgebra& A,
                               std::span<const std::pair<int, int>> pairs) {
  for (auto [a, b] : pairs) {
    check_element(A, a);
    check_element(A, b);
  }
  return propagate(A, pairs);
}

std::optional<Partition> ji_lower_cover(const FiniteAlgebra& A, int a, int b) {
  check_element(A, a);
  check_element(A, b);
  if (a == b) return std::nullopt;
  const int n = A.size();
  Partition beta = principal_congruence(A, a, b);
  Partition alpha = Partition::bottom(n);
  for (int c = 0; c < n; ++c) {
    for (int d = c + 1; d < n; ++d) {
      if (!beta.related(c, d)) continue;
      Partition p = principal_congruence(A, c, d);
      if (!p.related(a, b)) alpha = join(alpha, p);
    }
  }
  if (alpha.related(a, b)) return std::nullopt;
  return alpha;
}

Partition kernel_of_projection(const SubProduct& S, int coord) {
  if (coord != 0 && coord != 1)
    throw std::invalid_argument("coordinate must be 0 or 1");
  const int m = S.size();
  std::vector<int> first_with(S.parent().size(), -1);
  std::vector<int> map(m);
  for (int i = 0; i < m; ++i) {
    int value = coord == 0 ? S.pair_at(i).first : S.pair_at(i).second;
    if (first_with[value] < 0) first_with[value] = i;
    map[i] = first_with[value];
  }
  return Partition::from_map(map);
}

Partition lift_congruence(const SubProduct& S, const Partition& theta,
                          int coord) {
  if (coord != 0 && coord != 1)
    throw std::invalid_argument("coordinate must be 0 or 1");
  if (theta.size() != S.parent().size())
    throw std::invalid_argument("partition size mismatch");
  const int m = S.size();
  std::vector<int> first_with(theta.size(), -1);
  std::vector<int> map(m);
  for (int i = 0; i < m; ++i) {
    int value = coord == 0 ? S.pair_at(i).first : S.pair_at(i).second;
    int cls = theta.rep(value);
    if (first_with[cls] < 0) first_with[cls] = i;
    map[i] = first_with[cls];
  }
  return Partition::from_map(map);
}

std::vector<Partition> all_congruences(const FiniteAlgebra& A) {
  const int n = A.size();
  std::set<std::vector<int>> seen;
  std::vector<Partition> out;
  auto push = [&](const Partition& p) {
    if (seen.insert(p.representatives()).second) out.push_back(p);
  };
  push(Partition::bottom(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) push(principal_congruence(A, a, b));
  // join closure; the list only ever grows
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(join(out[i], out[j]));
  std::sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
    if (p.block_count() != q.block_count())
      return p.block_count() > q.block_count();
    return p.representatives() < q.representatives();
  });
  return out;
}

}  // namespace diffterm
