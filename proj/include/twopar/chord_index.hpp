#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace twopar {

// Element of Z2+Z2: bit 0 is the first parity, bit 1 the second.
enum class ChordIndex : std::uint8_t {
  Trivial = 0b00,
  A = 0b01,
  B = 0b10,
  C = 0b11,
};

constexpr ChordIndex operator+(ChordIndex x, ChordIndex y) noexcept {
  return static_cast<ChordIndex>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

constexpr bool is_lettered(ChordIndex x) noexcept { return x == ChordIndex::A || x == ChordIndex::B; }

constexpr ChordIndex index_from_parities(bool first, bool second) noexcept {
  return static_cast<ChordIndex>((first ? 1 : 0) | (second ? 2 : 0));
}

ChordIndex index_sum(std::span<const ChordIndex> xs) noexcept;

/// Index condition for a Reidemeister-3 triple: the three indices add up to
/// Trivial (all trivial, a repeated index plus a trivial one, or a,b,c).
bool r3_index_admissible(ChordIndex x, ChordIndex y, ChordIndex z) noexcept;

constexpr ChordIndex kAllIndices[] = {ChordIndex::Trivial, ChordIndex::A, ChordIndex::B, ChordIndex::C};

/// '0', 'a', 'b' or 'c'.
char index_char(ChordIndex x) noexcept;
std::optional<ChordIndex> index_from_char(char ch) noexcept;

}  // namespace twopar
