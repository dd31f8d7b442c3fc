// Internal worklist closure over a coordinatewise power of an algebra.
// One implementation backs generate_subalgebra, the subproduct builders and
// the matrix closure, so the documented round discipline is shared: per
// round, operations in declaration order and argument tuples in row-major
// order over the elements known at round start (ascending codes), keeping
// exactly the tuples that involve an element discovered the previous round.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "diffterm/algebra.hpp"
#include "diffterm/term_dag.hpp"

namespace diffterm::detail {

struct ClosureResult {
  std::vector<std::int64_t> order;  // discovery order, generators first
  std::shared_ptr<TermDag> dag;     // null unless witnesses were tracked
  std::vector<int> node_of;         // witness node per order entry
  std::optional<std::size_t> hit;   // order index where `stop` fired
};

// `stop` (nullable) is tested on generators in the given order and then on
// each element as it is generated; a hit ends the run immediately.
ClosureResult power_closure(const FiniteAlgebra& A, int power,
                            std::span<const std::int64_t> generators,
                            const std::function<bool(std::int64_t)>* stop,
                            bool track_witnesses);

}  // namespace diffterm::detail
