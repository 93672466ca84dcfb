#pragma once

// Seeded generators for diagrams and isotopy move sequences.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "twopar/gauss.hpp"
#include "twopar/moves.hpp"

namespace twopar {

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementation, so seeds replay across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(below(xs.size()))];
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 of (seed, stream); used to give every fuzz trial its own seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Normalized diagram with a uniform chord count in [0, max_chords]. Some of
/// the chords are planted as R3 (or occasionally Delta) triangles so that
/// triple moves are available. With c_even_only the number of c-chords is
/// even.
GaussDiagram random_diagram(std::uint64_t seed, std::size_t max_chords, DiagramKind kind, bool c_even_only);

struct MoveStep {
  Move move;
  GaussDiagram result;
};

struct SequenceOptions {
  /// Insertions are skipped once the diagram has this many chords.
  std::size_t max_chords = 24;
  /// Mix basepoint rotations in (closed diagrams only).
  bool rotations = false;
};

/// Each step first picks a move family uniformly among the families that
/// have an instance (R1Add, R2Add, R1Remove, R2Remove, R3, and Rotate when
/// enabled), then an instance uniformly. Delta is never produced.
std::vector<MoveStep> random_move_sequence(const GaussDiagram& d, std::uint64_t seed, std::size_t length,
                                           const SequenceOptions& opts = {});

}  // namespace twopar
