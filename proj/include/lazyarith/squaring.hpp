#pragma once

#include <string>
#include <utility>

#include "lazyarith/checkpoint.hpp"
#include "lazyarith/engine.hpp"
#include "lazyarith/integer.hpp"

namespace lazyarith {

/// Prints k and then `iterations` successive squares on one line,
/// space-separated. Records a checkpoint after every printed value.
class SquaringComputation {
 public:
  explicit SquaringComputation(BigInt k, int iterations = 6) : k_(std::move(k)), iterations_(iterations) {}

  template <PrecisionLevel L>
  void run(RunContext& ctx) {
    Int<L> value;
    std::int64_t done = 0;
    if (const auto& cp = ctx.resume_point()) {
      value = cp->get<L>("value");
      done = cp->get_scalar("squarings");
    } else {
      value = level_cast<L>(k_);
      ctx.out().write(to_decimal(value));
      record(ctx, value, done);
    }
    while (done < iterations_) {
      mulint(value, value, value);
      ++done;
      ctx.out().write(" " + to_decimal(value));
      record(ctx, value, done);
    }
    ctx.out().write("\n");
  }

 private:
  template <PrecisionLevel L>
  static void record(RunContext& ctx, const Int<L>& value, std::int64_t done) {
    Checkpoint cp;
    cp.put("value", value);
    cp.put_scalar("squarings", done);
    ctx.record_checkpoint(std::move(cp));
  }

  BigInt k_;
  int iterations_;
};

}  // namespace lazyarith
