#include "diffterm/commutator.hpp"

#include <algorithm>
#include <stdexcept>

#include "diffterm/congruence.hpp"
#include "power_closure.hpp"

namespace diffterm {

namespace {

void require_congruence(const FiniteAlgebra& A, const Partition& p,
                        const char* which) {
  if (p.size() != A.size())
    throw std::invalid_argument(std::string(which) + ": size mismatch");
  if (!is_congruence(A, p))
    throw std::invalid_argument(std::string(which) + " is not a congruence");
}

std::vector<std::int64_t> generator_quads(int n, const Partition& alpha,
                                          const Partition& beta) {
  std::vector<std::int64_t> gens;
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      if (alpha.related(a, a2))
        gens.push_back(((static_cast<std::int64_t>(a) * n + a) * n + a2) * n +
                       a2);
  for (int b = 0; b < n; ++b)
    for (int b2 = 0; b2 < n; ++b2)
      if (beta.related(b, b2))
        gens.push_back(((static_cast<std::int64_t>(b) * n + b2) * n + b) * n +
                       b2);
  return gens;
}

// The subalgebra of the square carried by {(x,y) : x alpha y}; alpha being a
// congruence makes the carrier closed, no generation needed.
struct PairAlgebra {
  FiniteAlgebra algebra;
  std::vector<int> carrier;  // pair codes x*n + y, ascending
  std::vector<int> index;    // code -> carrier position
};

PairAlgebra pair_algebra(const FiniteAlgebra& A, const Partition& alpha) {
  const int n = A.size();
  PairAlgebra out{FiniteAlgebra("", 1, {}), {}, {}};
  out.index.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (alpha.related(x, y)) {
        out.index[static_cast<std::size_t>(x) * n + y] =
            static_cast<int>(out.carrier.size());
        out.carrier.push_back(x * n + y);
      }
  const int m = static_cast<int>(out.carrier.size());
  std::vector<OperationTable> ops;
  ops.reserve(A.ops().size());
  std::vector<int> args;
  for (const OperationTable& f : A.ops()) {
    OperationTable g{f.name, f.arity, {}};
    std::size_t count = 1;
    for (int i = 0; i < f.arity; ++i) count *= static_cast<std::size_t>(m);
    g.entries.resize(count);
    args.assign(f.arity, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rest = idx;
      for (int i = f.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      std::size_t left = 0, right = 0;
      for (int i = 0; i < f.arity; ++i) {
        int code = out.carrier[args[i]];
        left = left * n + static_cast<std::size_t>(code / n);
        right = right * n + static_cast<std::size_t>(code % n);
      }
      g.entries[idx] = out.index[f.entries[left] * n + f.entries[right]];
    }
    ops.push_back(std::move(g));
  }
  out.algebra = FiniteAlgebra(A.name() + "(pairs)", m, std::move(ops));
  return out;
}

}  // namespace

std::vector<MatrixQuad> m_closure(const FiniteAlgebra& A,
                                  const Partition& alpha,
                                  const Partition& beta) {
  require_congruence(A, alpha, "alpha");
  require_congruence(A, beta, "beta");
  const int n = A.size();
  auto gens = generator_quads(n, alpha, beta);
  detail::ClosureResult closed =
      detail::power_closure(A, 4, gens, nullptr, false);
  std::sort(closed.order.begin(), closed.order.end());
  std::vector<MatrixQuad> out;
  out.reserve(closed.order.size());
  for (std::int64_t code : closed.order) {
    int v = static_cast<int>(code % n);
    code /= n;
    int u = static_cast<int>(code % n);
    code /= n;
    int y = static_cast<int>(code % n);
    code /= n;
    out.push_back({static_cast<int>(code), y, u, v});
  }
  return out;
}

Partition commutator_matrices(const FiniteAlgebra& A, const Partition& alpha,
                              const Partition& beta, CommutatorStats* stats) {
  const int n = A.size();
  auto quads = m_closure(A, alpha, beta);
  Partition delta = Partition::bottom(n);
  int rounds = 0;
  for (;;) {
    std::vector<std::pair<int, int>> pairs;
    for (const MatrixQuad& q : quads)
      if (delta.related(q.x, q.y) && q.u != q.v) pairs.emplace_back(q.u, q.v);
    Partition next = congruence_generated(A, pairs);
    ++rounds;
    if (next == delta) break;
    delta = std::move(next);
  }
  if (stats) stats->rounds = rounds;
  return delta;
}

namespace detail {

Partition commutator_fast_general(const FiniteAlgebra& A,
                                  const Partition& alpha,
                                  const Partition& beta,
                                  CommutatorStats* stats) {
  require_congruence(A, alpha, "alpha");
  require_congruence(A, beta, "beta");
  const int n = A.size();
  PairAlgebra pa = pair_algebra(A, alpha);

  // Delta: the congruence on the pair algebra generated by the
  // diagonal-column generators; the equal-row generators are diagonal pairs
  // and generate nothing.
  std::vector<std::pair<int, int>> gens;
  for (int b = 0; b < n; ++b)
    for (int b2 = b + 1; b2 < n; ++b2)
      if (beta.related(b, b2))
        gens.emplace_back(pa.index[static_cast<std::size_t>(b) * n + b],
                          pa.index[static_cast<std::size_t>(b2) * n + b2]);
  Partition big_delta = congruence_generated(pa.algebra, gens);
  const auto blocks = big_delta.blocks();

  Partition delta = Partition::bottom(n);
  int rounds = 0;
  for (;;) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& block : blocks) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        const int pi = pa.carrier[block[i]];
        const int x = pi / n, u = pi % n;
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          const int pj = pa.carrier[block[j]];
          const int y = pj / n, v = pj % n;
          if (u != v && delta.related(x, y)) pairs.emplace_back(u, v);
        }
      }
    }
    Partition next = congruence_generated(A, pairs);
    ++rounds;
    if (next == delta) break;
    delta = std::move(next);
  }
  if (stats) stats->rounds = rounds;
  return delta;
}

}  // namespace detail

Partition commutator_fast(const FiniteAlgebra& A, const Partition& beta,
                          CommutatorStats* stats) {
  return detail::commutator_fast_general(A, beta, beta, stats);
}

bool is_abelian_over(const FiniteAlgebra& A, const Partition& beta,
                     const Partition& alpha, bool allow_fast) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("partition size mismatch");
  if (!alpha.leq(beta))
    throw std::invalid_argument("alpha must lie below beta");
  Partition comm = allow_fast ? commutator_fast(A, beta)
                              : commutator_matrices(A, beta, beta);
  return comm.leq(alpha);
}

}  // namespace diffterm
