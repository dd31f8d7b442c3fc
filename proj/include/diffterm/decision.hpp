// The decision procedures: difference-term-operation existence for a single
// algebra via local terms, and the two variety-level tests (pentagon
// conditions and the local method over 3-generated subalgebras of the
// square).
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "diffterm/algebra.hpp"
#include "diffterm/partition.hpp"
#include "diffterm/tct.hpp"
#include "diffterm/ternary_table.hpp"

namespace diffterm {

// An element of A^2 x {0,1}: the point (a,b) with the clause selector.
struct LabeledTriple {
  int a = 0;
  int b = 0;
  int flag = 0;  // 0: difference clause at (a,b); 1: identity clause
  friend bool operator==(const LabeledTriple&, const LabeledTriple&) = default;
};

struct FailingPair {
  LabeledTriple zero;  // flag 0
  LabeledTriple one;   // flag 1
};

struct Condition2Witness {
  int a, b, c;
};
struct Condition3Witness {
  int x0, x1, y0, y1;
};

// A 3-generated subalgebra of the square without a difference term
// operation, reported by the local variety method.
struct SubalgebraWitness {
  std::array<int, 3> generator_codes;  // pair codes p*n + q, ascending
  std::vector<std::pair<int, int>> carrier;
  FailingPair inner;  // failing pair inside the induced algebra
};

using Certificate = std::variant<TypeOneWitness, Condition2Witness,
                                 Condition3Witness, FailingPair,
                                 SubalgebraWitness>;

// A no answer always carries a certificate; a yes answer never does.
struct Verdict {
  bool answer;
  std::optional<Certificate> certificate;

  static Verdict yes() { return {true, std::nullopt}; }
  static Verdict no(Certificate c) { return {false, std::move(c)}; }
};

// Local difference term operation for the pair {t0, t1}. Same-flag pairs are
// answered without search (flag 0/0: first projection, 1/1: third
// projection). For mixed flags (a,b,0),(a',b',1) the search runs the closure
// of {(a,a'),(b,a'),(b,b')} in the square against the target
// (a/[theta,theta]-class) x {b'} and returns the witness of the first hit, or
// absent when the closure exhausts. Requires an idempotent input.
std::optional<TermWitness> pair_has_ldto(const FiniteAlgebra& A,
                                         LabeledTriple t0, LabeledTriple t1);

// A has a difference term operation iff every mixed-flag pair has a local
// one. theta and its commutator are computed once per (a,b) and reused; on
// failure the lexicographically least failing (a,b,a',b') is certified.
Verdict has_dto(const FiniteAlgebra& A);

// Variety-level test through the pentagon conditions (1)-(3), checked in
// order with fixed lexicographic searches; the first violation is certified.
Verdict variety_has_dt_pentagon(const FiniteAlgebra& A);

// Variety-level test by running has_dto on every 3-generated subalgebra of
// the square (multisets of pair codes, deduplicated by carrier).
Verdict variety_has_dt_local(const FiniteAlgebra& A);

// Violation tests for single candidate tuples of the pentagon conditions;
// variety_has_dt_pentagon scans exactly these, and certificates can be
// replayed through them.
bool condition2_violation(const FiniteAlgebra& A, int a, int b, int c,
                          bool allow_fast = false);
bool condition3_violation(const FiniteAlgebra& A, int x0, int x1, int y0,
                          int y1, bool allow_fast = false);

class CloneCapExceeded : public std::runtime_error {
 public:
  explicit CloneCapExceeded(std::size_t cap);
};

// Brute-force enumeration of the ternary term tables: closes the three
// projections under pointwise application of the basic operations. Throws
// CloneCapExceeded when the closure grows past `cap`. Test oracle at desk
// scale, independent of the local search.
std::vector<TernaryTable> enumerate_ternary_clone(const FiniteAlgebra& A,
                                                  std::size_t cap);

}  // namespace diffterm
