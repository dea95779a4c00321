#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lazyarith/checkpoint.hpp"
#include "lazyarith/errors.hpp"
#include "lazyarith/output_sink.hpp"
#include "lazyarith/precision.hpp"

namespace lazyarith {

inline constexpr std::string_view restart_notice = "overflow detected:restarting";
inline constexpr std::string_view halt_notice = "overflow detected:halting";

enum class RestartMode { FromBeginning, FromCheckpoint };

constexpr std::string_view restart_mode_name(RestartMode mode) noexcept {
  return mode == RestartMode::FromBeginning ? "begin" : "checkpoint";
}

enum class AttemptOutcome { Completed, Overflowed };

/// What one attempt of a computation sees: its level, where to write, and
/// where to resume from.
class RunContext {
 public:
  RunContext(PrecisionLevel level, OutputSink& out, std::optional<Checkpoint> resume,
             bool commit_on_checkpoint = false)
      : level_(level),
        out_(&out),
        resume_(std::move(resume)),
        commit_on_checkpoint_(commit_on_checkpoint) {}

  PrecisionLevel level() const noexcept { return level_; }
  OutputSink& out() noexcept { return *out_; }
  const std::optional<Checkpoint>& resume_point() const noexcept { return resume_; }

  /// Remembers `cp` as the latest restart point (only the latest is kept).
  /// When restarting from checkpoints, everything written before this call
  /// is committed to the consumer and survives a later overflow.
  void record_checkpoint(Checkpoint cp) {
    latest_ = std::move(cp);
    ++recorded_;
    if (commit_on_checkpoint_) out_->flush();
  }

  const std::optional<Checkpoint>& latest_checkpoint() const noexcept { return latest_; }
  std::uint64_t checkpoints_recorded() const noexcept { return recorded_; }

 private:
  PrecisionLevel level_;
  OutputSink* out_;
  std::optional<Checkpoint> resume_;
  bool commit_on_checkpoint_;
  std::optional<Checkpoint> latest_;
  std::uint64_t recorded_ = 0;
};

/// A computation that can be attempted at any rung. `run<L>` either returns
/// (completed) or lets an overflow_signal / range_error escape (overflowed).
/// It must be deterministic for a given input and resume point.
template <class C>
concept RestartableComputation = requires(C& comp, RunContext& ctx) {
  comp.template run<PrecisionLevel::Fixed64>(ctx);
  comp.template run<PrecisionLevel::Fixed128>(ctx);
  comp.template run<PrecisionLevel::Extended>(ctx);
};

struct AttemptRecord {
  PrecisionLevel level = PrecisionLevel::Fixed64;
  AttemptOutcome outcome = AttemptOutcome::Completed;
  double seconds = 0.0;
  bool resumed = false;  // started from a checkpoint rather than the initial state
  std::string cause;     // what signalled, when outcome is Overflowed
};

struct RunReport {
  PrecisionLevel final_level = PrecisionLevel::Fixed64;
  int escalations = 0;
  RestartMode mode = RestartMode::FromBeginning;
  std::vector<AttemptRecord> attempts;
  std::optional<Checkpoint> latest_checkpoint;

  bool completed() const noexcept {
    return !attempts.empty() && attempts.back().outcome == AttemptOutcome::Completed;
  }

  double total_seconds() const noexcept {
    double total = 0.0;
    for (const auto& a : attempts) total += a.seconds;
    return total;
  }
};

struct EngineHooks {
  std::function<void(PrecisionLevel)> on_attempt_begin;
  std::function<void(const AttemptRecord&)> on_attempt_end;
};

struct LadderOptions {
  PrecisionLevel start = PrecisionLevel::Fixed64;
  RestartMode mode = RestartMode::FromBeginning;
  std::optional<Checkpoint> resume;  // initial state, if not the beginning
  EngineHooks hooks;
};

/// Runs one attempt and converts an escaping signal into an Overflowed
/// record. Everything the attempt allocated on its stack is released by the
/// time this returns. Domain errors of the computation propagate unchanged.
template <RestartableComputation C>
AttemptRecord run_attempt(C& comp, RunContext& ctx) {
  AttemptRecord rec;
  rec.level = ctx.level();
  rec.resumed = ctx.resume_point().has_value();
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (ctx.level()) {
      case PrecisionLevel::Fixed64:
        comp.template run<PrecisionLevel::Fixed64>(ctx);
        break;
      case PrecisionLevel::Fixed128:
        comp.template run<PrecisionLevel::Fixed128>(ctx);
        break;
      case PrecisionLevel::Extended:
        comp.template run<PrecisionLevel::Extended>(ctx);
        break;
    }
  } catch (const overflow_signal& signal) {
    rec.outcome = AttemptOutcome::Overflowed;
    rec.cause = signal.what();
  } catch (const range_error& e) {
    // A value that does not fit this rung (input, checkpoint field) is
    // handled like an overflow: a wider rung will accept it.
    if (!is_fixed(ctx.level())) throw;
    rec.outcome = AttemptOutcome::Overflowed;
    rec.cause = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Climbs the precision ladder from `opts.start` until an attempt completes.
///
/// Output written by an attempt that may still overflow is held in `sink`
/// and discarded if it does; the Extended attempt streams. In FromBeginning
/// mode each escalation re-runs from the initial state. In FromCheckpoint
/// mode it resumes from the latest recorded checkpoint, and output written
/// before that checkpoint has already been committed.
template <RestartableComputation C>
RunReport run_ladder(C& comp, OutputSink& sink, std::ostream& diag, const LadderOptions& opts = {}) {
  RunReport report;
  report.mode = opts.mode;
  std::optional<Checkpoint> resume = opts.resume;
  PrecisionLevel level = opts.start;
  for (;;) {
    sink.set_mode(is_fixed(level) ? OutputSink::Mode::Buffered : OutputSink::Mode::Streaming);
    RunContext ctx(level, sink, resume, opts.mode == RestartMode::FromCheckpoint);
    if (opts.hooks.on_attempt_begin) opts.hooks.on_attempt_begin(level);
    AttemptRecord rec = run_attempt(comp, ctx);
    if (opts.hooks.on_attempt_end) opts.hooks.on_attempt_end(rec);
    report.attempts.push_back(std::move(rec));

    if (report.attempts.back().outcome == AttemptOutcome::Completed) {
      sink.flush();
      report.final_level = level;
      report.latest_checkpoint = ctx.latest_checkpoint();
      return report;
    }

    sink.discard();
    diag << restart_notice << '\n';
    if (opts.mode == RestartMode::FromCheckpoint && ctx.latest_checkpoint()) {
      resume = ctx.latest_checkpoint();
    }
    ++report.escalations;
    // Extended never overflows, so a fixed level is always below it.
    level = *next_level(level);
  }
}

template <RestartableComputation C>
RunReport run_ladder(C& comp, PrecisionLevel start, RestartMode mode, OutputSink& sink,
                     std::ostream& diag) {
  LadderOptions opts;
  opts.start = start;
  opts.mode = mode;
  return run_ladder(comp, sink, diag, opts);
}

/// Runs at exactly one level with streaming output. On overflow the output
/// produced so far stays visible and the halting notice goes to `diag`.
template <RestartableComputation C>
RunReport run_single(C& comp, PrecisionLevel level, OutputSink& sink, std::ostream& diag,
                     std::optional<Checkpoint> resume = std::nullopt) {
  sink.set_mode(OutputSink::Mode::Streaming);
  RunContext ctx(level, sink, std::move(resume));
  RunReport report;
  report.final_level = level;
  report.attempts.push_back(run_attempt(comp, ctx));
  report.latest_checkpoint = ctx.latest_checkpoint();
  if (!report.completed()) diag << halt_notice << '\n';
  return report;
}

}  // namespace lazyarith
