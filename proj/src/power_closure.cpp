#include "power_closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffterm::detail {

namespace {

struct Closure {
  const FiniteAlgebra& A;
  const int n;
  const int power;
  const std::function<bool(std::int64_t)>* stop;

  ClosureResult res;
  std::vector<std::int32_t> slot;  // code -> order index, -1 unseen
  std::vector<int> coords;         // `power` digits per order entry
  std::vector<int> round_of;       // per order entry
  std::vector<std::int32_t> known;     // order indices, ascending by code
  std::vector<std::int32_t> prev_new;  // previous round, ascending by code
  int round = 0;
  bool stopped = false;

  Closure(const FiniteAlgebra& a, int p,
          const std::function<bool(std::int64_t)>* s)
      : A(a), n(a.size()), power(p), stop(s) {
    std::int64_t universe = 1;
    for (int i = 0; i < power; ++i) universe *= n;
    slot.assign(static_cast<std::size_t>(universe), -1);
  }

  // Returns true when `stop` fires on the new element.
  bool add(std::int64_t code, int node) {
    slot[static_cast<std::size_t>(code)] =
        static_cast<std::int32_t>(res.order.size());
    res.order.push_back(code);
    res.node_of.push_back(node);
    round_of.push_back(round);
    std::int64_t c = code;
    const std::size_t base = coords.size();
    coords.resize(base + power);
    for (int j = power - 1; j >= 0; --j) {
      coords[base + j] = static_cast<int>(c % n);
      c /= n;
    }
    if (stop && (*stop)(code)) {
      res.hit = res.order.size() - 1;
      stopped = true;
      return true;
    }
    return false;
  }

  void apply_tuple(int op_index, std::span<const std::int32_t> tuple) {
    const OperationTable& f = A.op(op_index);
    std::int64_t code = 0;
    for (int j = 0; j < power; ++j) {
      int idx = 0;
      for (std::int32_t entry : tuple)
        idx = idx * n + coords[static_cast<std::size_t>(entry) * power + j];
      code = code * n + f.entries[idx];
    }
    if (slot[static_cast<std::size_t>(code)] >= 0) return;
    int node = -1;
    if (res.dag) {
      std::vector<int> children;
      children.reserve(tuple.size());
      for (std::int32_t entry : tuple) children.push_back(res.node_of[entry]);
      node = res.dag->add_apply(op_index, children);
    }
    add(code, node);
  }

  // Row-major scan over `known`, keeping tuples with a previous-round entry.
  void scan(int op_index, int arity, std::vector<std::int32_t>& tuple,
            int pos, bool any_new) {
    if (stopped) return;
    if (pos == arity) {
      apply_tuple(op_index, tuple);
      return;
    }
    const bool last_needs_new = (pos == arity - 1) && !any_new;
    const auto& candidates = last_needs_new ? prev_new : known;
    for (std::int32_t entry : candidates) {
      tuple[pos] = entry;
      scan(op_index, arity, tuple, pos + 1,
           any_new || round_of[entry] == round - 1);
      if (stopped) return;
    }
  }

  void run(std::span<const std::int64_t> generators, bool track_witnesses) {
    if (track_witnesses) res.dag = std::make_shared<TermDag>();
    std::int64_t universe = static_cast<std::int64_t>(slot.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      std::int64_t g = generators[i];
      if (g < 0 || g >= universe)
        throw std::invalid_argument("generator out of range");
      if (slot[static_cast<std::size_t>(g)] >= 0) continue;  // duplicate
      int node = res.dag ? res.dag->add_generator(static_cast<int>(i)) : -1;
      if (add(g, node)) return;
    }

    prev_new.resize(res.order.size());
    for (std::size_t i = 0; i < prev_new.size(); ++i)
      prev_new[i] = static_cast<std::int32_t>(i);
    auto by_code = [this](std::int32_t a, std::int32_t b) {
      return res.order[a] < res.order[b];
    };
    std::sort(prev_new.begin(), prev_new.end(), by_code);
    known = prev_new;

    std::vector<std::int32_t> tuple;
    while (!prev_new.empty() && !stopped) {
      ++round;
      const std::size_t before = res.order.size();
      for (int op_index = 0; op_index < A.op_count(); ++op_index) {
        const int arity = A.op(op_index).arity;
        if (arity == 0) {
          // constants join on the first round only
          if (round == 1) apply_tuple(op_index, {});
          if (stopped) return;
          continue;
        }
        tuple.assign(arity, 0);
        scan(op_index, arity, tuple, 0, false);
        if (stopped) return;
      }
      prev_new.clear();
      for (std::size_t i = before; i < res.order.size(); ++i)
        prev_new.push_back(static_cast<std::int32_t>(i));
      std::sort(prev_new.begin(), prev_new.end(), by_code);
      std::vector<std::int32_t> merged;
      merged.reserve(known.size() + prev_new.size());
      std::merge(known.begin(), known.end(), prev_new.begin(), prev_new.end(),
                 std::back_inserter(merged), by_code);
      known = std::move(merged);
    }
  }
};

}  // namespace

ClosureResult power_closure(const FiniteAlgebra& A, int power,
                            std::span<const std::int64_t> generators,
                            const std::function<bool(std::int64_t)>* stop,
                            bool track_witnesses) {
  if (generators.empty())
    throw std::invalid_argument("generators must be nonempty");
  Closure closure(A, power, stop);
  closure.run(generators, track_witnesses);
  return std::move(closure.res);
}

}  // namespace diffterm::detail
