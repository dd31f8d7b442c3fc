#include "diffterm/decision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "diffterm/commutator.hpp"
#include "diffterm/congruence.hpp"

namespace diffterm {

namespace {

void require_idempotent(const FiniteAlgebra& A) {
  if (!A.is_idempotent())
    throw std::invalid_argument("algebra is not idempotent");
}

void check_triple(const FiniteAlgebra& A, const LabeledTriple& t) {
  if (t.a < 0 || t.a >= A.size() || t.b < 0 || t.b >= A.size())
    throw std::invalid_argument("triple element out of range");
  if (t.flag != 0 && t.flag != 1)
    throw std::invalid_argument("triple flag must be 0 or 1");
}

TermWitness projection_witness(int generator) {
  auto dag = std::make_shared<TermDag>();
  dag->add_generator(0);
  dag->add_generator(1);
  dag->add_generator(2);
  return {dag, generator};
}

// Search core for a mixed pair (a,b,0),(a',b',1) with delta = [Cg(a,b)]^2
// already computed: close {(a,a'),(b,a'),(b,b')} against (a/delta) x {b'}.
std::optional<TermWitness> mixed_pair_search(const FiniteAlgebra& A, int a,
                                             int b, int a2, int b2,
                                             const Partition& delta) {
  std::vector<std::pair<int, int>> gens{{a, a2}, {b, a2}, {b, b2}};
  auto stop = [&](int u, int v) { return v == b2 && delta.related(u, a); };
  auto hit = generate_subproduct_search(A, gens, stop);
  if (!hit) return std::nullopt;
  return hit->witness;
}

// Caches [theta,theta] per distinct theta within one decision run.
class DeltaCache {
 public:
  DeltaCache(const FiniteAlgebra& A, bool allow_fast)
      : A_(A), allow_fast_(allow_fast) {}

  const Partition& commutator_of(const Partition& theta) {
    auto it = cache_.find(theta.representatives());
    if (it != cache_.end()) return it->second;
    Partition delta = allow_fast_ ? commutator_fast(A_, theta)
                                  : commutator_matrices(A_, theta, theta);
    return cache_.emplace(theta.representatives(), std::move(delta))
        .first->second;
  }

 private:
  const FiniteAlgebra& A_;
  bool allow_fast_;
  std::map<std::vector<int>, Partition> cache_;
};

Verdict has_dto_impl(const FiniteAlgebra& A, bool allow_fast) {
  require_idempotent(A);
  const int n = A.size();
  DeltaCache deltas(A, allow_fast);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Partition theta = principal_congruence(A, a, b);
      const Partition& delta = deltas.commutator_of(theta);
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          if (!mixed_pair_search(A, a, b, a2, b2, delta))
            return Verdict::no(
                FailingPair{{a, b, 0}, {a2, b2, 1}});
    }
  }
  return Verdict::yes();
}

}  // namespace

std::optional<TermWitness> pair_has_ldto(const FiniteAlgebra& A,
                                         LabeledTriple t0, LabeledTriple t1) {
  require_idempotent(A);
  check_triple(A, t0);
  check_triple(A, t1);
  if (t0.flag == t1.flag)
    return projection_witness(t0.flag == 0 ? 0 : 2);
  if (t0.flag == 1) std::swap(t0, t1);
  Partition theta = principal_congruence(A, t0.a, t0.b);
  Partition delta = commutator_matrices(A, theta, theta);
  return mixed_pair_search(A, t0.a, t0.b, t1.a, t1.b, delta);
}

Verdict has_dto(const FiniteAlgebra& A) { return has_dto_impl(A, false); }

bool condition2_violation(const FiniteAlgebra& A, int a, int b, int c,
                          bool allow_fast) {
  if (a == b) return false;  // Cg(a,a) is never join irreducible
  GeneratedSet gs = generate_subalgebra(A, std::vector<int>{a, b, c});
  InducedSubalgebra sub = induce_subalgebra(A, gs.elements);
  const FiniteAlgebra& B = sub.algebra;
  auto index_in = [&](int x) {
    return static_cast<int>(std::lower_bound(sub.elements.begin(),
                                             sub.elements.end(), x) -
                            sub.elements.begin());
  };
  const int ia = index_in(a), ib = index_in(b), ic = index_in(c);

  Partition beta = principal_congruence(B, ia, ib);
  auto alpha = ji_lower_cover(B, ia, ib);
  if (!alpha) return false;                             // (2a)
  if (!is_abelian_over(B, beta, *alpha, allow_fast)) return false;  // (2c)

  // (2b): C is generated by the three labeled pairs plus the full diagonal
  std::vector<std::pair<int, int>> gens{{ia, ib}, {ia, ic}, {ib, ic}};
  for (int x = 0; x < B.size(); ++x) gens.emplace_back(x, x);
  SubProduct C = generate_subproduct(B, gens);
  Partition alpha0 = lift_congruence(C, *alpha, 0);
  Partition alpha1 = lift_congruence(C, *alpha, 1);
  Partition gamma =
      principal_congruence(C.algebra(), C.index_of(ia, ic), C.index_of(ib, ic));
  Partition bound = join(meet(alpha0, alpha1), gamma);
  return !bound.related(C.index_of(ia, ib), C.index_of(ib, ib));
}

bool condition3_violation(const FiniteAlgebra& A, int x0, int x1, int y0,
                          int y1, bool allow_fast) {
  if (x0 == y0) return false;  // the two labeled generators coincide
  std::vector<std::pair<int, int>> gens{{x0, x1}, {y0, x1}, {x0, y1}};
  SubProduct B = generate_subproduct(A, gens);
  const int i0 = B.index_of(x0, x1), i1 = B.index_of(y0, x1);

  Partition beta = principal_congruence(B.algebra(), i0, i1);
  auto alpha = ji_lower_cover(B.algebra(), i0, i1);
  if (!alpha) return false;  // (3a)
  Partition rho0 = kernel_of_projection(B, 0);
  if (join(rho0, *alpha) != Partition::top(B.size())) return false;  // (3b)
  return is_abelian_over(B.algebra(), beta, *alpha, allow_fast);     // (3c)
}

Verdict variety_has_dt_pentagon(const FiniteAlgebra& A) {
  require_idempotent(A);
  TypeOneResult t1 = omits_type_one(A);
  if (!t1.omits) return Verdict::no(*t1.witness);

  const int n = A.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (condition2_violation(A, a, b, c, true))
          return Verdict::no(Condition2Witness{a, b, c});

  for (int x0 = 0; x0 < n; ++x0)
    for (int x1 = 0; x1 < n; ++x1)
      for (int y0 = 0; y0 < n; ++y0)
        for (int y1 = 0; y1 < n; ++y1)
          if (condition3_violation(A, x0, x1, y0, y1, true))
            return Verdict::no(Condition3Witness{x0, x1, y0, y1});

  return Verdict::yes();
}

Verdict variety_has_dt_local(const FiniteAlgebra& A) {
  require_idempotent(A);
  // The gate both settles the unary-type obstruction and licenses the fast
  // commutator inside the per-subalgebra runs.
  TypeOneResult t1 = omits_type_one(A);
  if (!t1.omits) return Verdict::no(*t1.witness);

  const int n = A.size();
  const int nn = n * n;
  std::set<std::vector<std::pair<int, int>>> seen;
  for (int g1 = 0; g1 < nn; ++g1) {
    for (int g2 = g1; g2 < nn; ++g2) {
      for (int g3 = g2; g3 < nn; ++g3) {
        std::vector<std::pair<int, int>> gens{
            {g1 / n, g1 % n}, {g2 / n, g2 % n}, {g3 / n, g3 % n}};
        SubProduct sub = generate_subproduct(A, gens);
        if (!seen.insert(sub.carrier()).second) continue;
        Verdict inner = has_dto_impl(sub.algebra(), true);
        if (!inner.answer)
          return Verdict::no(SubalgebraWitness{
              {g1, g2, g3}, sub.carrier(),
              std::get<FailingPair>(*inner.certificate)});
      }
    }
  }
  return Verdict::yes();
}

CloneCapExceeded::CloneCapExceeded(std::size_t cap)
    : std::runtime_error("ternary clone exceeds cap of " +
                         std::to_string(cap)) {}

std::vector<TernaryTable> enumerate_ternary_clone(const FiniteAlgebra& A,
                                                  std::size_t cap) {
  const int n = A.size();
  std::vector<TernaryTable> tables;
  std::set<std::vector<int>> seen;
  auto push = [&](TernaryTable t) {
    if (!seen.insert(t.entries).second) return;
    tables.push_back(std::move(t));
    if (tables.size() > cap) throw CloneCapExceeded(cap);
  };
  for (int coord = 0; coord < 3; ++coord)
    push(TernaryTable::projection(n, coord));

  // breadth-first over rounds, tuples row-major over discovery indices
  std::size_t round_start = 0;
  while (round_start < tables.size()) {
    const std::size_t known = tables.size();
    for (int op_index = 0; op_index < A.op_count(); ++op_index) {
      const OperationTable& f = A.op(op_index);
      const int k = f.arity;
      if (k == 0) continue;
      std::vector<std::size_t> tuple(k, 0);
      for (;;) {
        bool involves_new = false;
        for (std::size_t t : tuple) involves_new |= t >= round_start;
        if (involves_new) {
          TernaryTable composed{n, {}};
          composed.entries.resize(static_cast<std::size_t>(n) * n * n);
          for (std::size_t cell = 0; cell < composed.entries.size(); ++cell) {
            std::size_t idx = 0;
            for (std::size_t t : tuple)
              idx = idx * n +
                    static_cast<std::size_t>(tables[t].entries[cell]);
            composed.entries[cell] = f.entries[idx];
          }
          push(std::move(composed));
        }
        int pos = k - 1;
        while (pos >= 0 && ++tuple[pos] == known) tuple[pos--] = 0;
        if (pos < 0) break;
      }
    }
    round_start = known;
  }
  return tables;
}

}  // namespace diffterm
