#pragma once

// Chord indices derived from homology data of a knot in the thickened torus.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twopar/chord_index.hpp"
#include "twopar/gauss.hpp"

namespace twopar {

struct Winding {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const Winding&, const Winding&) = default;
};

/// A Gauss diagram whose indices are ignored, plus the (p,q) winding of every
/// arc. arcs[k] follows endpoint k for Closed diagrams (the last one wraps to
/// the first endpoint). Long diagrams carry one extra leading arc: arcs[0]
/// precedes endpoint 0 and arcs[k+1] follows endpoint k.
struct WindingDecoratedDiagram {
  GaussDiagram base;
  std::vector<Winding> arcs;
};

class WindingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t expected_arc_count(const GaussDiagram& d) noexcept;

/// Each chord's index is the mod-2 class of the windings travelled from its
/// Under endpoint forward to its Over endpoint. For Long diagrams the path
/// between the two endpoints is used in whichever direction it runs.
GaussDiagram derive_indices(const WindingDecoratedDiagram& w);

/// Text form: `closed U1 [1,0] O1 [0,1]`, `long [0,0] U1 [1,0] O1 [0,1]`.
/// Throws ParseError on syntax, WindingMismatch if arcs and endpoints do not
/// alternate as required.
WindingDecoratedDiagram parse_winding_diagram(std::string_view text);

}  // namespace twopar
