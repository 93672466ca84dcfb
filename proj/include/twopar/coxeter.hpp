#pragma once

// The group D = <a,b | a^2=b^2=(ab)^4=1> x <A,B | A^2=B^2=(AB)^4=1>.
//
// Each factor is the dihedral group of order 8 in normal form r^rot s^ref,
// with a = s and b = r^3 s, so that ab = r.

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace twopar {

struct Dih4Element {
  std::uint8_t rot = 0;  // 0..3
  bool ref = false;

  static constexpr Dih4Element identity() noexcept { return {}; }
  static constexpr Dih4Element rotation(int k) noexcept {
    return {static_cast<std::uint8_t>(((k % 4) + 4) % 4), false};
  }

  constexpr Dih4Element operator*(Dih4Element y) const noexcept {
    const int k = ref ? rot - y.rot : rot + y.rot;
    return {static_cast<std::uint8_t>(((k % 4) + 4) % 4), ref != y.ref};
  }
  constexpr Dih4Element inverse() const noexcept { return ref ? *this : rotation(-rot); }

  friend constexpr auto operator<=>(const Dih4Element&, const Dih4Element&) = default;
};

struct GroupElement {
  Dih4Element lower;  // generated by the small letters
  Dih4Element upper;  // generated by the capital letters

  static constexpr GroupElement identity() noexcept { return {}; }

  constexpr GroupElement operator*(const GroupElement& y) const noexcept {
    return {lower * y.lower, upper * y.upper};
  }
  constexpr GroupElement inverse() const noexcept { return {lower.inverse(), upper.inverse()}; }

  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement mul(const GroupElement& x, const GroupElement& y) noexcept { return x * y; }

enum class LetterBase : std::uint8_t { a, b, A, B };

struct Letter {
  LetterBase base = LetterBase::a;
  bool prime = false;

  bool is_capital() const noexcept { return base == LetterBase::A || base == LetterBase::B; }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// All eight letters: a, a', b, b', A, A', B, B'.
std::span<const Letter> all_letters() noexcept;

/// a' = bab, b' = aba, A' = BAB, B' = ABA.
GroupElement letter_value(Letter l) noexcept;

/// Left-to-right product.
GroupElement evaluate_word(std::span<const Letter> w) noexcept;

/// phi: a -> bab, b -> aba, capitals fixed.
GroupElement phi(const GroupElement& x) noexcept;
/// psi: A -> BAB, B -> ABA, small letters fixed.
GroupElement psi(const GroupElement& x) noexcept;
/// chi = phi o psi.
GroupElement chi(const GroupElement& x) noexcept;

/// h x h^-1
inline GroupElement conjugate(const GroupElement& x, const GroupElement& h) noexcept {
  return h * x * h.inverse();
}

/// Closure of an element under conjugation by D and the automorphisms phi,
/// psi. `canonical` is the smallest member in (lower.rot, lower.ref,
/// upper.rot, upper.ref) order.
struct OrbitClass {
  GroupElement canonical;
  std::set<GroupElement> members;

  bool operator==(const OrbitClass& o) const noexcept { return canonical == o.canonical; }
};

OrbitClass orbit(const GroupElement& x);

/// Closure of the generator values under multiplication.
std::set<GroupElement> enumerate_group();
std::set<GroupElement> closure(std::span<const GroupElement> generators);

/// "(r^k s^f | R^K S^F)"
std::string to_string(const GroupElement& x);
std::string to_string(Letter l);
std::string word_to_string(std::span<const Letter> w);

/// Inverse of to_string(GroupElement); throws std::invalid_argument.
GroupElement group_element_from_string(const std::string& s);

namespace letters {
inline constexpr Letter a{LetterBase::a, false};
inline constexpr Letter a_p{LetterBase::a, true};
inline constexpr Letter b{LetterBase::b, false};
inline constexpr Letter b_p{LetterBase::b, true};
inline constexpr Letter A{LetterBase::A, false};
inline constexpr Letter A_p{LetterBase::A, true};
inline constexpr Letter B{LetterBase::B, false};
inline constexpr Letter B_p{LetterBase::B, true};
}  // namespace letters

}  // namespace twopar
