#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lazyarith/checkpoint.hpp"
#include "lazyarith/engine.hpp"
#include "lazyarith/integer.hpp"

// Reverse-search generation of the bounded Collatz tree: every path to the
// root 1 whose values all stay <= maxc. The traversal stores no nodes; it
// backtracks by recomputing the parent, so its memory use is constant.
namespace lazyarith::collatz {

template <PrecisionLevel L>
struct Constants {
  Int<L> one = make_int<L>(1);
  Int<L> two = make_int<L>(2);
  Int<L> three = make_int<L>(3);
  Int<L> four = make_int<L>(4);
  Int<L> six = make_int<L>(6);
};

/// The Collatz successor of k >= 2: k/2 when k is even, 3k+1 when k is odd.
/// The odd branch runs through guarded additions and may signal.
template <PrecisionLevel L>
void parent(const Int<L>& k, Int<L>& out, const Constants<L>& c = {}) {
  if (is_odd(k)) {
    Int<L> twice;
    addint(k, k, twice);
    addint(twice, k, twice);
    addint(twice, c.one, out);
  } else {
    Int<L> rem = k;
    divint(rem, c.two, out);
  }
}

/// Child `index` of k in the tree bounded by maxc, written to `out`.
///   index 0: 2k, when 2k <= maxc
///   index 1: (k-1)/3, when k = 4 (mod 6) and k != 4 (which would close 1-4-2-1)
/// Returns false when that child does not exist.
template <PrecisionLevel L>
bool child(const Int<L>& k, int index, const Int<L>& maxc, Int<L>& out, const Constants<L>& c = {}) {
  if (index == 0) {
    Int<L> doubled;
    addint(k, k, doubled);
    if (comp(doubled, maxc) > 0) return false;
    out = std::move(doubled);
    return true;
  }
  Int<L> rem = k;
  Int<L> quot;
  divint(rem, c.six, quot);
  if (comp(rem, c.four) != 0 || comp(k, c.four) == 0) return false;
  subint(k, c.one, rem);
  divint(rem, c.three, out);
  return true;
}

template <PrecisionLevel L>
std::vector<Int<L>> children(const Int<L>& k, const Int<L>& maxc) {
  std::vector<Int<L>> out;
  Int<L> next;
  for (int index = 0; index < 2; ++index) {
    if (child(k, index, maxc, next)) out.push_back(next);
  }
  return out;
}

/// Where a depth-first walk stands. `next_child` is the index of the next
/// child of `current` to try; 2 means all children are done.
template <PrecisionLevel L>
struct TraversalState {
  Int<L> current = make_int<L>(1);
  std::uint64_t depth = 0;
  int next_child = 0;
  std::uint64_t nodes = 0;  // visited so far, root included

  Checkpoint to_checkpoint(const Int<L>& maxc) const {
    Checkpoint cp;
    cp.put("maxc", maxc);
    cp.put("current", current);
    cp.put_count("depth", depth);
    cp.put_scalar("next_child", next_child);
    cp.put_count("nodes", nodes);
    return cp;
  }

  /// Throws range_error when `current` does not fit L, checkpoint_error when
  /// the checkpoint belongs to a different maxc or is inconsistent.
  static TraversalState from_checkpoint(const Checkpoint& cp, const Int<L>& maxc) {
    if (cp.decimal("maxc") != to_decimal(maxc)) {
      throw checkpoint_error("checkpoint is for maxc=" + cp.decimal("maxc") + ", not " + to_decimal(maxc));
    }
    TraversalState s;
    s.current = cp.get<L>("current");
    s.depth = cp.get_count("depth");
    const auto next = cp.get_scalar("next_child");
    s.nodes = cp.get_count("nodes");
    if (next < 0 || next > 2 || sign(s.current) <= 0 || comp(s.current, maxc) > 0) {
      throw checkpoint_error("checkpoint holds an impossible traversal state");
    }
    s.next_child = static_cast<int>(next);
    return s;
  }
};

struct TraversalResult {
  std::uint64_t nodes = 0;
  bool exhausted = false;  // false when the budget stopped the walk
};

/// Depth-first reverse search from the root 1, child 0 before child 1.
///
/// `visit(node, depth)` is called once per node in visiting order, root
/// first. Every `checkpoint_every` nodes (0 = never) `on_checkpoint(state)`
/// receives a state from which the walk can resume exactly. The walk stops
/// when the tree is exhausted or `budget` nodes have been counted. `state`
/// holds the final position on return.
template <PrecisionLevel L, class Visitor, class CheckpointHook>
TraversalResult traverse(const Int<L>& maxc, std::optional<std::uint64_t> budget, TraversalState<L>& state,
                         Visitor&& visit, std::uint64_t checkpoint_every, CheckpointHook&& on_checkpoint) {
  if (sign(maxc) <= 0) throw std::invalid_argument("collatz: maxc must be >= 1");
  if (budget && *budget == 0) throw std::invalid_argument("collatz: budget must be >= 1");

  const Constants<L> c;
  Int<L> cur = state.current;
  std::uint64_t depth = state.depth;
  int next = state.next_child;
  std::uint64_t nodes = state.nodes;
  Int<L> tmp;
  Int<L> quot;

  auto sync = [&] {
    state.current = cur;
    state.depth = depth;
    state.next_child = next;
    state.nodes = nodes;
  };
  auto arrive = [&] {
    ++nodes;
    visit(static_cast<const Int<L>&>(cur), depth);
    if (checkpoint_every != 0 && nodes % checkpoint_every == 0) {
      sync();
      on_checkpoint(static_cast<const TraversalState<L>&>(state));
    }
  };

  if (nodes == 0) arrive();

  for (;;) {
    if (budget && nodes >= *budget) {
      sync();
      return {nodes, false};
    }
    if (next == 0) {
      next = 1;
      addint(cur, cur, tmp);
      if (comp(tmp, maxc) <= 0) {
        cur = tmp;
        ++depth;
        next = 0;
        arrive();
        continue;
      }
    }
    if (next == 1) {
      next = 2;
      copy(tmp, cur);
      divint(tmp, c.six, quot);
      if (comp(tmp, c.four) == 0 && comp(cur, c.four) != 0) {
        subint(cur, c.one, tmp);
        divint(tmp, c.three, cur);
        ++depth;
        next = 0;
        arrive();
        continue;
      }
    }
    if (depth == 0) {
      sync();
      return {nodes, true};
    }
    // Back to the parent; an odd node was its parent's child 1.
    if (is_odd(cur)) {
      addint(cur, cur, tmp);
      addint(tmp, cur, tmp);
      addint(tmp, c.one, cur);
      next = 2;
    } else {
      copy(tmp, cur);
      divint(tmp, c.two, cur);
      next = 1;
    }
    --depth;
  }
}

struct CollatzParams {
  BigInt maxc;
  std::optional<std::uint64_t> budget;
  std::uint64_t checkpoint_every = 0;
  bool emit_nodes = false;  // write each visited node as a line of output
};

/// The traversal as a RestartableComputation for the engine.
class CollatzComputation {
 public:
  explicit CollatzComputation(CollatzParams params) : params_(std::move(params)) {
    if (sign(params_.maxc) <= 0) throw std::invalid_argument("collatz: maxc must be >= 1");
    if (params_.budget && *params_.budget == 0) throw std::invalid_argument("collatz: budget must be >= 1");
  }

  template <PrecisionLevel L>
  void run(RunContext& ctx) {
    const Int<L> maxc = level_cast<L>(params_.maxc);
    TraversalState<L> state;
    if (ctx.resume_point()) state = TraversalState<L>::from_checkpoint(*ctx.resume_point(), maxc);

    auto on_checkpoint = [&](const TraversalState<L>& s) { ctx.record_checkpoint(s.to_checkpoint(maxc)); };
    if (params_.emit_nodes) {
      auto visit = [&](const Int<L>& node, std::uint64_t) { ctx.out().line(to_decimal(node)); };
      result_ = traverse(maxc, params_.budget, state, visit, params_.checkpoint_every, on_checkpoint);
    } else {
      auto visit = [](const Int<L>&, std::uint64_t) {};
      result_ = traverse(maxc, params_.budget, state, visit, params_.checkpoint_every, on_checkpoint);
    }
    final_state_ = state.to_checkpoint(maxc);
  }

  const CollatzParams& params() const noexcept { return params_; }
  const TraversalResult& result() const noexcept { return result_; }
  /// Position where the last completed run stopped; resumable.
  const Checkpoint& final_state() const noexcept { return final_state_; }

 private:
  CollatzParams params_;
  TraversalResult result_;
  Checkpoint final_state_;
};

}  // namespace lazyarith::collatz
