#pragma once

// Reidemeister moves on Gauss diagrams with two parities, the Delta move and
// basepoint rotation for closed diagrams.
//
// Positions and slots are 0-based in the API. A slot k in 0..2n is the gap
// after the first k endpoints. Moves never act across the basepoint of a
// closed diagram: two endpoints are adjacent when their positions differ by
// one. Rotation is the only way to move the basepoint.
//
// Text form (one line, used in logs and by the CLI); positions are printed
// 1-based, slots as the number of endpoints before the gap:
//   R1Add @<slot> <UO|OU> <index> [+|-]
//   R1Remove <chord>
//   R2Add @(<slot>,<slot>) <U|O> <index>     first pair is U-U or O-O
//   R2Remove <chord> <chord>
//   R3 @(p,p+1)(q,q+1)(t,t+1)
//   Delta @(p,p+1)(q,q+1)(t,t+1)
//   Rotate

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "twopar/coxeter.hpp"
#include "twopar/gauss.hpp"

namespace twopar {

struct R1Add {
  std::size_t slot = 0;
  Role first = Role::Under;
  ChordIndex index = ChordIndex::Trivial;
  std::optional<Sign> sign;
  friend bool operator==(const R1Add&, const R1Add&) = default;
};

struct R1Remove {
  ChordId chord = 0;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

/// Inserts X Y at slot1 and Y X at slot2 (slot1 <= slot2, both measured in
/// the original diagram). The first pair has role `first_pair`, the second
/// the opposite role. On a signed diagram X gets + and Y gets -.
struct R2Add {
  std::size_t slot1 = 0;
  std::size_t slot2 = 0;
  Role first_pair = Role::Under;
  ChordIndex index = ChordIndex::Trivial;
  friend bool operator==(const R2Add&, const R2Add&) = default;
};

struct R2Remove {
  ChordId first = 0;
  ChordId second = 0;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

/// Start positions of three disjoint adjacent pairs, ascending.
using PairTriple = std::array<std::size_t, 3>;

struct R3 {
  PairTriple pairs{};
  friend bool operator==(const R3&, const R3&) = default;
};

struct Delta {
  PairTriple pairs{};
  friend bool operator==(const Delta&, const Delta&) = default;
};

struct RotateBasepoint {
  friend bool operator==(const RotateBasepoint&, const RotateBasepoint&) = default;
};

using Move = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3, Delta, RotateBasepoint>;

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, Delta, Rotate };
inline constexpr std::size_t kMoveKindCount = 7;
MoveKind kind_of(const Move& m) noexcept;
std::string_view to_string(MoveKind k) noexcept;
bool is_isotopy(const Move& m) noexcept;

struct MoveOptions {
  /// Require signs on every chord a move touches. R2 chords must have
  /// opposite signs whenever signs are present, strict or not.
  bool strict_signs = false;
};

enum class MoveError {
  OutOfRange,
  UnknownChord,
  SameChord,
  NotAdjacent,
  R1IndexNotTrivial,
  IndexMismatch,
  RolePattern,
  PairOrder,
  NotATriangle,
  IndexSum,
  SignMismatch,
  MissingSign,
  NotClosed,
  EmptyDiagram,
};

struct MoveViolation {
  MoveError error;
  std::string message;
};

std::optional<MoveViolation> check_move(const GaussDiagram& d, const Move& m, const MoveOptions& opts = {});

class InvalidMove : public std::invalid_argument {
 public:
  explicit InvalidMove(MoveViolation v);
  const MoveViolation& violation() const noexcept { return violation_; }

 private:
  MoveViolation violation_;
};

/// Throws InvalidMove when check_move fails. New chords get ids above the
/// current maximum; existing ids are untouched.
GaussDiagram apply_move(const GaussDiagram& d, const Move& m, const MoveOptions& opts = {});

enum class RotationEffectKind { Unchanged, ApplyPhi, ApplyPsi, ConjugateBy };

struct RotationEffect {
  RotationEffectKind kind = RotationEffectKind::Unchanged;
  Letter letter{};  // meaningful for ConjugateBy only

  friend bool operator==(const RotationEffect&, const RotationEffect&) = default;
};

std::string to_string(const RotationEffect& e);

/// Moves the first endpoint of a closed diagram to the end.
std::pair<GaussDiagram, RotationEffect> rotate_basepoint(const GaussDiagram& d);

/// What w of the rotated diagram must be, given w of the original.
GroupElement predicted_w(const RotationEffect& e, const GroupElement& w_before) noexcept;

/// Every removal, R3 and Delta instance, every R1Add slot, a sample of at
/// most kR2AddSample R2Add instances on distinct slots, and Rotate for
/// nonempty closed diagrams.
inline constexpr std::size_t kR2AddSample = 64;
std::vector<Move> applicable_moves(const GaussDiagram& d, const MoveOptions& opts = {});

std::vector<Move> removal_moves(const GaussDiagram& d, const MoveOptions& opts = {});
/// Triples of adjacent pairs that form a valid R3 (or Delta when `delta`).
std::vector<Move> triangle_moves(const GaussDiagram& d, bool delta, const MoveOptions& opts = {});

std::string to_string(const Move& m);
/// Inverse of to_string(Move); throws std::invalid_argument.
Move parse_move(std::string_view text);

}  // namespace twopar
