#include "diffterm/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "diffterm/congruence.hpp"
#include "power_closure.hpp"

namespace diffterm {

namespace {

// n^k with a guard against absurd table sizes.
std::size_t table_size(int n, int arity) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= static_cast<std::size_t>(n);
    if (size > (std::size_t{1} << 31))
      throw std::invalid_argument("operation table too large");
  }
  return size;
}

std::vector<std::int64_t> pair_codes(
    int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<std::int64_t> codes;
  codes.reserve(pairs.size());
  for (auto [p, q] : pairs) {
    if (p < 0 || p >= n || q < 0 || q >= n)
      throw std::invalid_argument("pair generator out of range");
    codes.push_back(static_cast<std::int64_t>(p) * n + q);
  }
  return codes;
}

void require_idempotent(const FiniteAlgebra& A) {
  if (!A.is_idempotent())
    throw std::invalid_argument("algebra is not idempotent");
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int size,
                             std::vector<OperationTable> ops)
    : name_(std::move(name)), n_(size), ops_(std::move(ops)) {
  if (n_ < 1) throw std::invalid_argument("universe must be nonempty");
  for (const OperationTable& f : ops_) {
    if (f.arity < 0) throw std::invalid_argument("negative arity");
    if (f.entries.size() != table_size(n_, f.arity))
      throw std::invalid_argument("operation '" + f.name +
                                  "' has the wrong number of entries");
    for (int v : f.entries)
      if (v < 0 || v >= n_)
        throw std::invalid_argument("operation '" + f.name +
                                    "' has an out-of-range entry");
  }
}

int FiniteAlgebra::apply(int op_index, std::span<const int> args) const {
  if (op_index < 0 || op_index >= op_count())
    throw std::invalid_argument("operation index out of range");
  const OperationTable& f = ops_[op_index];
  if (static_cast<int>(args.size()) != f.arity)
    throw std::invalid_argument("argument count does not match arity");
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= n_) throw std::invalid_argument("argument out of range");
    idx = idx * n_ + static_cast<std::size_t>(a);
  }
  return f.entries[idx];
}

bool FiniteAlgebra::is_idempotent() const {
  for (const OperationTable& f : ops_) {
    if (f.arity == 0) {
      if (n_ != 1) return false;
      continue;
    }
    // index of the constant tuple (x,...,x) is x * (n^(k-1) + ... + 1)
    std::size_t step = 0;
    std::size_t power = 1;
    for (int i = 0; i < f.arity; ++i) {
      step += power;
      power *= n_;
    }
    for (int x = 0; x < n_; ++x)
      if (f.entries[step * x] != x) return false;
  }
  return true;
}

FiniteAlgebra FiniteAlgebra::direct_square() const {
  const int n = n_;
  const int nn = n * n;
  std::vector<OperationTable> ops;
  ops.reserve(ops_.size());
  for (const OperationTable& f : ops_) {
    OperationTable g{f.name, f.arity, {}};
    g.entries.resize(table_size(nn, f.arity));
    std::vector<int> args(f.arity);
    for (std::size_t idx = 0; idx < g.entries.size(); ++idx) {
      std::size_t rest = idx;
      for (int i = f.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % nn);
        rest /= nn;
      }
      std::size_t left = 0, right = 0;
      for (int i = 0; i < f.arity; ++i) {
        left = left * n + static_cast<std::size_t>(args[i] / n);
        right = right * n + static_cast<std::size_t>(args[i] % n);
      }
      g.entries[idx] = f.entries[left] * n + f.entries[right];
    }
    ops.push_back(std::move(g));
  }
  return FiniteAlgebra(name_ + "^2", nn, std::move(ops));
}

GeneratedSet generate_subalgebra(const FiniteAlgebra& A,
                                 std::span<const int> generators) {
  std::vector<std::int64_t> codes;
  codes.reserve(generators.size());
  for (int g : generators) {
    if (g < 0 || g >= A.size())
      throw std::invalid_argument("generator out of range");
    codes.push_back(g);
  }
  detail::ClosureResult closed =
      detail::power_closure(A, 1, codes, nullptr, true);

  std::vector<std::size_t> perm(closed.order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return closed.order[a] < closed.order[b];
  });
  GeneratedSet out;
  out.dag = closed.dag;
  out.elements.reserve(perm.size());
  out.witness_nodes.reserve(perm.size());
  for (std::size_t i : perm) {
    out.elements.push_back(static_cast<int>(closed.order[i]));
    out.witness_nodes.push_back(closed.node_of[i]);
  }
  return out;
}

InducedSubalgebra induce_subalgebra(const FiniteAlgebra& A,
                                    std::span<const int> subuniverse) {
  const int n = A.size();
  const int m = static_cast<int>(subuniverse.size());
  if (m == 0) throw std::invalid_argument("empty subuniverse");
  std::vector<int> index(n, -1);
  for (int i = 0; i < m; ++i) {
    int x = subuniverse[i];
    if (x < 0 || x >= n)
      throw std::invalid_argument("subuniverse element out of range");
    if (i > 0 && subuniverse[i - 1] >= x)
      throw std::invalid_argument("subuniverse must be sorted and distinct");
    index[x] = i;
  }
  std::vector<OperationTable> ops;
  ops.reserve(A.ops().size());
  std::vector<int> args(8);
  for (const OperationTable& f : A.ops()) {
    OperationTable g{f.name, f.arity, {}};
    g.entries.resize(table_size(m, f.arity));
    args.assign(f.arity, 0);
    for (std::size_t idx = 0; idx < g.entries.size(); ++idx) {
      std::size_t rest = idx;
      std::size_t parent_idx = 0;
      for (int i = f.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      for (int i = 0; i < f.arity; ++i)
        parent_idx = parent_idx * n +
                     static_cast<std::size_t>(subuniverse[args[i]]);
      int image = f.entries[parent_idx];
      if (index[image] < 0)
        throw std::invalid_argument("set is not closed under operation '" +
                                    f.name + "'");
      g.entries[idx] = index[image];
    }
    ops.push_back(std::move(g));
  }
  InducedSubalgebra out{FiniteAlgebra(A.name() + "(sub)", m, std::move(ops)),
                        {subuniverse.begin(), subuniverse.end()}};
  return out;
}

SubProduct::SubProduct(std::shared_ptr<const FiniteAlgebra> parent,
                       FiniteAlgebra induced,
                       std::vector<std::pair<int, int>> carrier,
                       std::shared_ptr<const TermDag> dag,
                       std::vector<int> nodes)
    : parent_(std::move(parent)),
      algebra_(std::move(induced)),
      carrier_(std::move(carrier)),
      pair_index_(static_cast<std::size_t>(parent_->size()) * parent_->size(),
                  -1),
      dag_(std::move(dag)),
      witness_nodes_(std::move(nodes)) {
  for (int i = 0; i < size(); ++i)
    pair_index_[static_cast<std::size_t>(carrier_[i].first) * parent_->size() +
                carrier_[i].second] = i;
}

int SubProduct::index_of(int first, int second) const {
  const int n = parent_->size();
  if (first < 0 || first >= n || second < 0 || second >= n) return -1;
  return pair_index_[static_cast<std::size_t>(first) * n + second];
}

SubProduct generate_subproduct(
    const FiniteAlgebra& A, std::span<const std::pair<int, int>> generators) {
  require_idempotent(A);
  const int n = A.size();
  auto codes = pair_codes(n, generators);
  detail::ClosureResult closed =
      detail::power_closure(A, 2, codes, nullptr, true);

  std::vector<std::size_t> perm(closed.order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return closed.order[a] < closed.order[b];
  });
  std::vector<std::pair<int, int>> carrier;
  std::vector<int> nodes;
  std::vector<int> sorted_codes;
  carrier.reserve(perm.size());
  nodes.reserve(perm.size());
  for (std::size_t i : perm) {
    auto code = closed.order[i];
    carrier.emplace_back(static_cast<int>(code / n),
                         static_cast<int>(code % n));
    nodes.push_back(closed.node_of[i]);
    sorted_codes.push_back(static_cast<int>(code));
  }

  // induced tables: coordinatewise application re-indexed through the carrier
  const int m = static_cast<int>(carrier.size());
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < m; ++i) index[sorted_codes[i]] = i;
  std::vector<OperationTable> ops;
  ops.reserve(A.ops().size());
  std::vector<int> args;
  for (int op_index = 0; op_index < A.op_count(); ++op_index) {
    const OperationTable& f = A.op(op_index);
    OperationTable g{f.name, f.arity, {}};
    g.entries.resize(table_size(m, f.arity));
    args.assign(f.arity, 0);
    for (std::size_t idx = 0; idx < g.entries.size(); ++idx) {
      std::size_t rest = idx;
      for (int i = f.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      std::size_t left = 0, right = 0;
      for (int i = 0; i < f.arity; ++i) {
        left = left * n + static_cast<std::size_t>(carrier[args[i]].first);
        right = right * n + static_cast<std::size_t>(carrier[args[i]].second);
      }
      g.entries[idx] = index[f.entries[left] * n + f.entries[right]];
    }
    ops.push_back(std::move(g));
  }
  auto parent = std::make_shared<const FiniteAlgebra>(A);
  FiniteAlgebra induced(A.name() + "(subsq)", m, std::move(ops));
  return SubProduct(std::move(parent), std::move(induced), std::move(carrier),
                    closed.dag, std::move(nodes));
}

std::optional<SubProductHit> generate_subproduct_search(
    const FiniteAlgebra& A, std::span<const std::pair<int, int>> generators,
    const std::function<bool(int, int)>& stop) {
  require_idempotent(A);
  const int n = A.size();
  auto codes = pair_codes(n, generators);
  std::function<bool(std::int64_t)> wrapped = [&](std::int64_t code) {
    return stop(static_cast<int>(code / n), static_cast<int>(code % n));
  };
  detail::ClosureResult closed =
      detail::power_closure(A, 2, codes, &wrapped, true);
  if (!closed.hit) return std::nullopt;
  std::int64_t code = closed.order[*closed.hit];
  return SubProductHit{
      {static_cast<int>(code / n), static_cast<int>(code % n)},
      TermWitness{closed.dag, closed.node_of[*closed.hit]}};
}

Quotient quotient(const FiniteAlgebra& A, const Partition& theta) {
  const int n = A.size();
  if (theta.size() != n) throw std::invalid_argument("partition size mismatch");
  if (!is_congruence(A, theta))
    throw std::invalid_argument(
        "partition is not compatible with the operations");

  std::vector<int> reps;
  std::vector<int> class_index(n, -1);
  for (int x = 0; x < n; ++x)
    if (theta.rep(x) == x) {
      class_index[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  std::vector<int> class_map(n);
  for (int x = 0; x < n; ++x) class_map[x] = class_index[theta.rep(x)];

  const int m = static_cast<int>(reps.size());
  std::vector<OperationTable> ops;
  ops.reserve(A.ops().size());
  std::vector<int> args;
  for (const OperationTable& f : A.ops()) {
    OperationTable g{f.name, f.arity, {}};
    g.entries.resize(table_size(m, f.arity));
    args.assign(f.arity, 0);
    for (std::size_t idx = 0; idx < g.entries.size(); ++idx) {
      std::size_t rest = idx;
      std::size_t parent_idx = 0;
      for (int i = f.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      for (int i = 0; i < f.arity; ++i)
        parent_idx = parent_idx * n + static_cast<std::size_t>(reps[args[i]]);
      g.entries[idx] = class_map[f.entries[parent_idx]];
    }
    ops.push_back(std::move(g));
  }
  return Quotient{FiniteAlgebra(A.name() + "(quo)", m, std::move(ops)),
                  std::move(class_map)};
}

TernaryTable witness_to_ternary_table(const FiniteAlgebra& A,
                                      const TermWitness& w) {
  if (!w.dag || w.root < 0 || w.root >= w.dag->size())
    throw std::invalid_argument("invalid witness");
  const TermDag& dag = *w.dag;
  const int n = A.size();
  const std::size_t cube = static_cast<std::size_t>(n) * n * n;

  // per-node tables for the nodes reachable from the root, children first
  std::vector<char> reachable(dag.size(), 0);
  std::vector<int> stack{w.root};
  reachable[w.root] = 1;
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

  std::vector<std::vector<int>> table(dag.size());
  for (int node = 0; node <= w.root; ++node) {
    if (!reachable[node]) continue;
    std::vector<int>& out = table[node];
    out.resize(cube);
    if (dag.is_generator(node)) {
      int g = dag.generator_index(node);
      if (g < 0 || g > 2)
        throw std::invalid_argument("witness generator index out of range");
      std::size_t t = 0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z, ++t)
            out[t] = g == 0 ? x : (g == 1 ? y : z);
    } else {
      const OperationTable& f = A.op(dag.op_index(node));
      if (static_cast<int>(dag.children(node).size()) != f.arity)
        throw std::invalid_argument("witness arity mismatch");
      for (std::size_t t = 0; t < cube; ++t) {
        std::size_t idx = 0;
        for (int child : dag.children(node))
          idx = idx * n + static_cast<std::size_t>(table[child][t]);
        out[t] = f.entries[idx];
      }
    }
  }
  return TernaryTable{n, std::move(table[w.root])};
}

TernaryTable TernaryTable::projection(int n, int coord) {
  if (n < 1 || coord < 0 || coord > 2)
    throw std::invalid_argument("bad projection request");
  TernaryTable t{n, std::vector<int>(static_cast<std::size_t>(n) * n * n)};
  std::size_t i = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z, ++i)
        t.entries[i] = coord == 0 ? x : (coord == 1 ? y : z);
  return t;
}

bool TernaryTable::has_idempotent_diagonal() const {
  for (int x = 0; x < size; ++x)
    if (at(x, x, x) != x) return false;
  return true;
}

}  // namespace diffterm
