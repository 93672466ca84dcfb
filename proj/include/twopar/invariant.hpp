#pragma once

// The word invariant w of a Gauss diagram with two parities, its twin
// w_after, and the orbit-class invariant of closed c-even diagrams.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "twopar/coxeter.hpp"
#include "twopar/gauss.hpp"

namespace twopar {

/// Which c-chord ends are counted when deciding primes: those before the
/// opposite endpoint, or those after it.
enum class CountMode { Before, After };

struct LetterWord {
  std::vector<Letter> letters;
  std::vector<std::size_t> positions;  // endpoint position of each letter
};

/// Small letters sit at Under ends, capitals at Over ends of a- and b-chords.
/// A letter is primed when an odd number of c-chord ends of the letter's own
/// role lie before (or after) the chord's other endpoint.
LetterWord assign_letters(const GaussDiagram& d, CountMode mode = CountMode::Before);

GroupElement w(const GaussDiagram& d);
GroupElement w_after(const GaussDiagram& d);

struct ParityProfile {
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::size_t count_c = 0;
  bool a_even = true;
  bool b_even = true;
  bool c_even = true;

  friend bool operator==(const ParityProfile&, const ParityProfile&) = default;
};

ParityProfile parity_profile(const GaussDiagram& d);

/// Raised when an invariant is requested outside the range where it is
/// known to be one: closed c-odd diagrams, or a long diagram passed to
/// compact_invariant.
class InvariantUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Orbit of w under conjugation, phi and psi. Closed c-even diagrams only.
OrbitClass compact_invariant(const GaussDiagram& d);

/// Long: w != 1. Closed c-even: the orbit class is not that of the identity.
bool is_nontrivial(const GaussDiagram& d);

}  // namespace twopar
