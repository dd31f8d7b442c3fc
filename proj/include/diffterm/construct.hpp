// Construction of difference term operation tables: the per-pair local table,
// the stage composition that extends one difference-clause point across all
// identity-clause points, the full pipeline, and the verifier.
#pragma once

#include <stdexcept>

#include "diffterm/algebra.hpp"
#include "diffterm/decision.hpp"
#include "diffterm/ternary_table.hpp"

namespace diffterm {

// Raised when some pair admits no local difference term operation, i.e. the
// algebra has no difference term operation at all.
class NoLocalDifferenceTermError : public std::runtime_error {
 public:
  NoLocalDifferenceTermError(LabeledTriple t0, LabeledTriple t1);
  LabeledTriple zero, one;
};

struct BuildStats {
  long long ldto_calls = 0;   // per-pair table constructions
  long long stage_calls = 0;  // stage compositions
};

// Cayley table of a local difference term operation for {(a,b,0),(a',b',1)}:
// the witness of the pair search rendered as a table t with
// t[a,b,b] related to a modulo [theta_ab,theta_ab] and t[a',a',b'] = b'.
TernaryTable ldto_table_for_pair(const FiniteAlgebra& A, LabeledTriple t0,
                                 LabeledTriple t1, BuildStats* stats = nullptr);

// Table of a local difference term operation for {(a,b,0)} plus every
// identity-clause triple: starts from the pair table against the first
// enumerated pair and folds in the remaining n^2 - 1 pairs with the
// composition t'[x,y,z] = s[t[x,y,z], t[y,y,z], z].
TernaryTable stage_table(const FiniteAlgebra& A, int a, int b,
                         BuildStats* stats = nullptr);

// Full pipeline: n^2 stages, stage k folding the difference clause at the
// k-th enumerated pair into the running table via
// d'[x,y,z] composed as d'[x, d[x,y,y], d[x,y,z]]. The result is a difference
// term operation table; throws NoLocalDifferenceTermError when none exists.
TernaryTable build_dt_table(const FiniteAlgebra& A,
                            BuildStats* stats = nullptr);

// First violation of the difference term conditions, if any.
struct DtViolation {
  int a, b;
  bool identity_clause;  // true: d[a,a,b] != b; false: (a,d[a,b,b]) escapes
                         // [theta_ab,theta_ab]
};
struct VerifyResult {
  bool ok;
  std::optional<DtViolation> violation;
};

// d[a,a,b] = b and (a, d[a,b,b]) in [theta_ab,theta_ab] for all a, b.
// Checking at the principal congruence suffices: commutators grow with the
// congruence, so any larger congruence containing (a,b) imposes a weaker
// constraint.
VerifyResult verify_dt_table(const FiniteAlgebra& A, const TernaryTable& d);

}  // namespace diffterm
