// lazyarith: repeated-squaring demo and Collatz tree benchmark on top of the
// lazy-overflow precision ladder.
//
//   lazyarith square  --k 5 --arith 64|128|ext|hybrid [--iters 6] [--restart begin|checkpoint]
//   lazyarith collatz --maxc 1e8 --arith 64|128|ext|hybrid [--budget N]
//                     [--restart begin|checkpoint] [--checkpoint-every N]
//                     [--checkpoint-out FILE] [--resume FILE] [--print-nodes]
//
// Values go to stdout, overflow notices to stderr.
// Exit status: 0 success, 1 overflow halt, 2 usage error.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "lazyarith/lazyarith.hpp"

namespace {

using lazyarith::BigInt;
using lazyarith::PrecisionLevel;
using lazyarith::RestartMode;

constexpr int kExitOk = 0;
constexpr int kExitOverflow = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string arith = "hybrid";
  std::string restart = "begin";
  // square
  std::string k;
  int iters = 6;
  // collatz
  std::string maxc;
  std::optional<std::uint64_t> budget;
  std::uint64_t checkpoint_every = 0;
  std::string checkpoint_out;
  std::string resume;
  bool print_nodes = false;
};

const std::map<std::string, std::optional<PrecisionLevel>> kArith = {
    {"64", PrecisionLevel::Fixed64},
    {"128", PrecisionLevel::Fixed128},
    {"ext", PrecisionLevel::Extended},
    {"hybrid", std::nullopt},
};

/// Plain decimal, or N e K meaning N * 10^K.
BigInt parse_maxc(const std::string& text) {
  static const std::regex shorthand(R"(([0-9]+)[eE]([0-9]+))");
  std::smatch m;
  if (std::regex_match(text, m, shorthand)) {
    BigInt mantissa = lazyarith::from_decimal<PrecisionLevel::Extended>(m[1].str());
    const unsigned long exponent = std::stoul(m[2].str());
    BigInt power;
    mpz_ui_pow_ui(power.get(), 10, exponent);
    BigInt out;
    lazyarith::mulint(mantissa, power, out);
    return out;
  }
  return lazyarith::from_decimal<PrecisionLevel::Extended>(text);
}

template <class Computation>
lazyarith::RunReport execute(Computation& comp, const CliConfig& cfg, lazyarith::OutputSink& sink,
                             std::optional<lazyarith::Checkpoint> resume) {
  const auto level = kArith.at(cfg.arith);
  if (level) return lazyarith::run_single(comp, *level, sink, std::cerr, std::move(resume));
  lazyarith::LadderOptions opts;
  opts.start = PrecisionLevel::Fixed64;
  opts.mode = cfg.restart == "checkpoint" ? RestartMode::FromCheckpoint : RestartMode::FromBeginning;
  opts.resume = std::move(resume);
  return lazyarith::run_ladder(comp, sink, std::cerr, opts);
}

int run_square(const CliConfig& cfg) {
  BigInt k;
  try {
    k = lazyarith::from_decimal<PrecisionLevel::Extended>(cfg.k);
  } catch (const lazyarith::parse_error& e) {
    std::cerr << "square: --k: " << e.what() << '\n';
    return kExitUsage;
  }
  lazyarith::SquaringComputation comp(std::move(k), cfg.iters);
  lazyarith::OutputSink sink(std::cout);
  const auto report = execute(comp, cfg, sink, std::nullopt);
  if (!report.completed()) {
    std::cout << '\n';
    return kExitOverflow;
  }
  return kExitOk;
}

int run_collatz(const CliConfig& cfg) {
  lazyarith::collatz::CollatzParams params;
  try {
    params.maxc = parse_maxc(cfg.maxc);
  } catch (const lazyarith::parse_error& e) {
    std::cerr << "collatz: --maxc: " << e.what() << '\n';
    return kExitUsage;
  }
  if (lazyarith::sign(params.maxc) <= 0) {
    std::cerr << "collatz: --maxc must be >= 1\n";
    return kExitUsage;
  }
  params.budget = cfg.budget;
  params.checkpoint_every = cfg.checkpoint_every;
  params.emit_nodes = cfg.print_nodes;

  std::optional<lazyarith::Checkpoint> resume;
  if (!cfg.resume.empty()) resume = lazyarith::Checkpoint::load(cfg.resume);

  lazyarith::collatz::CollatzComputation comp(params);
  lazyarith::OutputSink sink(std::cout);
  const auto start = std::chrono::steady_clock::now();
  const auto report = execute(comp, cfg, sink, std::move(resume));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!report.completed()) {
    // Leave a resume point behind so the run can continue at a wider level.
    if (!cfg.checkpoint_out.empty() && report.latest_checkpoint) {
      report.latest_checkpoint->save(cfg.checkpoint_out);
    }
    return kExitOverflow;
  }
  if (!cfg.checkpoint_out.empty()) comp.final_state().save(cfg.checkpoint_out);

  char secs[32];
  std::snprintf(secs, sizeof(secs), "%.3f", seconds);
  std::cout << "maxc=" << lazyarith::to_decimal(params.maxc) << " nodes=" << comp.result().nodes
            << " level=" << lazyarith::level_name(report.final_level) << " escalations=" << report.escalations
            << " seconds=" << secs << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazy overflow detection with automatic precision escalation"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--arith", cfg.arith, "Arithmetic: 64, 128, ext, or hybrid (climb from 64)")
        ->check(CLI::IsMember({"64", "128", "ext", "hybrid"}))
        ->capture_default_str();
    sub->add_option("--restart", cfg.restart, "Hybrid restart mode after an overflow")
        ->check(CLI::IsMember({"begin", "checkpoint"}))
        ->capture_default_str();
  };

  auto* square = app.add_subcommand("square", "Print k and its successive squares");
  square->add_option("--k", cfg.k, "Integer to square")->required();
  square->add_option("--iters", cfg.iters, "Number of squarings")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_common(square);

  auto* collatz = app.add_subcommand("collatz", "Generate the Collatz tree bounded by maxc");
  collatz->add_option("--maxc", cfg.maxc, "Largest allowed node value (decimal or NeK for N*10^K)")->required();
  collatz->add_option("--budget", cfg.budget, "Stop after this many nodes in total")->check(CLI::PositiveNumber);
  collatz->add_option("--checkpoint-every", cfg.checkpoint_every, "Record a restart point every N nodes");
  collatz->add_option("--checkpoint-out", cfg.checkpoint_out, "Write the final (or last) traversal state here");
  collatz->add_option("--resume", cfg.resume, "Resume from a checkpoint file")->check(CLI::ExistingFile);
  collatz->add_flag("--print-nodes", cfg.print_nodes, "Print every visited node");
  add_common(collatz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (square->parsed()) return run_square(cfg);
    return run_collatz(cfg);
  } catch (const lazyarith::arith_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
