#pragma once

// Randomized verification of the invariance properties. Trials are
// independent and seeded by (seed, trial index); run_fuzz_serial is the
// reference driver and run_fuzz_parallel spreads trials over OpenMP threads
// with identical results.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twopar/gauss.hpp"
#include "twopar/moves.hpp"

namespace twopar {

struct FuzzConfig {
  std::size_t trials = 1000;
  std::size_t max_chords = 12;
  std::uint64_t seed = 1;
  DiagramKind kind = DiagramKind::Long;
  bool c_even = false;
  /// Each trial applies between 1 and max_length moves.
  std::size_t max_length = 1;
};

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::string property;
  std::string diagram;  // before the offending move
  std::string move;     // empty when the property failed on the initial diagram
  std::string expected;
  std::string actual;
};

struct TrialResult {
  std::uint64_t trial_seed = 0;
  std::array<std::size_t, kMoveKindCount> move_counts{};
  std::optional<Counterexample> failure;
};

/// Properties checked, step by step:
///  - isotopy moves leave w unchanged;
///  - a rotation changes w exactly as its RotationEffect says;
///  - on c-even diagrams w equals w_after;
///  - on closed c-even diagrams the orbit class never changes.
TrialResult run_trial(const FuzzConfig& config, std::size_t trial);

struct FuzzReport {
  FuzzConfig config;
  std::size_t failures = 0;
  std::array<std::size_t, kMoveKindCount> move_counts{};
  std::optional<Counterexample> first_failure;  // lowest trial index
  std::vector<Counterexample> failed;            // every failure, by trial index
};

FuzzReport run_fuzz_serial(const FuzzConfig& config);
/// threads == 0 uses the OpenMP default.
FuzzReport run_fuzz_parallel(const FuzzConfig& config, int threads = 0);

}  // namespace twopar
