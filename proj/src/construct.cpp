#include "diffterm/construct.hpp"

#include <map>
#include <stdexcept>

#include "diffterm/commutator.hpp"
#include "diffterm/congruence.hpp"

namespace diffterm {

namespace {

std::string describe(const LabeledTriple& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
         std::to_string(t.flag) + ")";
}

// The fixed enumeration of A^2: pair i is (i / n, i % n).
inline std::pair<int, int> enumerated_pair(int n, int i) {
  return {i / n, i % n};
}

}  // namespace

NoLocalDifferenceTermError::NoLocalDifferenceTermError(LabeledTriple t0,
                                                       LabeledTriple t1)
    : std::runtime_error("no local difference term operation for " +
                         describe(t0) + "," + describe(t1)),
      zero(t0),
      one(t1) {}

TernaryTable ldto_table_for_pair(const FiniteAlgebra& A, LabeledTriple t0,
                                 LabeledTriple t1, BuildStats* stats) {
  if (t0.flag != 0 || t1.flag != 1)
    throw std::invalid_argument("expected one flag-0 and one flag-1 triple");
  if (stats) ++stats->ldto_calls;
  auto witness = pair_has_ldto(A, t0, t1);
  if (!witness) throw NoLocalDifferenceTermError(t0, t1);
  return witness_to_ternary_table(A, *witness);
}

TernaryTable stage_table(const FiniteAlgebra& A, int a, int b,
                         BuildStats* stats) {
  if (stats) ++stats->stage_calls;
  const int n = A.size();
  const int nn = n * n;
  auto [a0, b0] = enumerated_pair(n, 0);
  TernaryTable t = ldto_table_for_pair(A, {a, b, 0}, {a0, b0, 1}, stats);
  for (int i = 1; i < nn; ++i) {
    auto [ai, bi] = enumerated_pair(n, i);
    TernaryTable s =
        ldto_table_for_pair(A, {a, b, 0}, {t.at(ai, ai, bi), bi, 1}, stats);
    TernaryTable next{n, std::vector<int>(t.entries.size())};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          next.at(x, y, z) = s.at(t.at(x, y, z), t.at(y, y, z), z);
    t = std::move(next);
  }
  return t;
}

TernaryTable build_dt_table(const FiniteAlgebra& A, BuildStats* stats) {
  if (!A.is_idempotent())
    throw std::invalid_argument("algebra is not idempotent");
  const int n = A.size();
  const int nn = n * n;
  auto [a0, b0] = enumerated_pair(n, 0);
  TernaryTable d = stage_table(A, a0, b0, stats);
  for (int k = 1; k < nn; ++k) {
    auto [ak, bk] = enumerated_pair(n, k);
    TernaryTable dprime = stage_table(A, ak, d.at(ak, bk, bk), stats);
    TernaryTable next{n, std::vector<int>(d.entries.size())};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          next.at(x, y, z) = dprime.at(x, d.at(x, y, y), d.at(x, y, z));
    d = std::move(next);
  }
  return d;
}

VerifyResult verify_dt_table(const FiniteAlgebra& A, const TernaryTable& d) {
  const int n = A.size();
  if (d.size != n || d.entries.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("table size does not match the algebra");
  for (int v : d.entries)
    if (v < 0 || v >= n)
      throw std::invalid_argument("table entry out of range");

  std::map<std::vector<int>, Partition> delta_cache;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (d.at(a, a, b) != b) return {false, DtViolation{a, b, true}};
      Partition theta = principal_congruence(A, a, b);
      auto it = delta_cache.find(theta.representatives());
      if (it == delta_cache.end())
        it = delta_cache
                 .emplace(theta.representatives(),
                          commutator_matrices(A, theta, theta))
                 .first;
      if (!it->second.related(a, d.at(a, b, b)))
        return {false, DtViolation{a, b, false}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace diffterm
