#pragma once

// Gauss diagrams of long and closed knots whose chords carry a Z2+Z2 index.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twopar/chord_index.hpp"

namespace twopar {

enum class Role : std::uint8_t { Over, Under };

constexpr Role opposite(Role r) noexcept { return r == Role::Over ? Role::Under : Role::Over; }

enum class Sign : std::uint8_t { Plus, Minus };

enum class DiagramKind : std::uint8_t { Long, Closed };

using ChordId = std::uint32_t;

struct Endpoint {
  ChordId chord = 0;
  Role role = Role::Under;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// A plain aggregate so that invalid diagrams can be built and reported on by
// validate(). Everything downstream of parse() assumes validity and checks it
// with require_valid().
struct GaussDiagram {
  DiagramKind kind = DiagramKind::Long;
  std::vector<Endpoint> endpoints;
  std::map<ChordId, ChordIndex> indices;
  std::optional<std::map<ChordId, Sign>> signs;

  std::size_t chord_count() const noexcept { return indices.size(); }
  bool empty() const noexcept { return endpoints.empty(); }

  ChordIndex index_of(ChordId c) const { return indices.at(c); }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;
};

enum class ViolationKind : std::uint8_t {
  ZeroChordId,
  DuplicateRole,
  OddOccurrence,
  MissingIndex,
  StrayIndex,
  MissingSign,
  StraySign,
};

struct Violation {
  ViolationKind kind;
  ChordId chord;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const GaussDiagram& d);

class InvalidDiagram : public std::invalid_argument {
 public:
  explicit InvalidDiagram(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws InvalidDiagram listing every violation, if any.
void require_valid(const GaussDiagram& d);

/// Syntax or consistency error in Gauss-code text. `offset` is the byte
/// offset of the offending token in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Parses `kind token*` where token is `(O|U)<id>[+|-]:(0|a|b|c)`.
/// Chord ids are kept as written.
GaussDiagram parse(std::string_view text);

std::string serialize(const GaussDiagram& d);

/// Renumbers chords 1..n in order of first occurrence.
GaussDiagram normalize(const GaussDiagram& d);

/// Positions (0-based) of the Over and Under endpoint of every chord.
struct ChordPositions {
  std::size_t over = 0;
  std::size_t under = 0;
  std::size_t of(Role r) const noexcept { return r == Role::Over ? over : under; }
};
std::map<ChordId, ChordPositions> chord_positions(const GaussDiagram& d);

std::string_view to_string(DiagramKind k) noexcept;
std::string_view to_string(ViolationKind k) noexcept;
char role_char(Role r) noexcept;

}  // namespace twopar
