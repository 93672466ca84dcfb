#include "twopar/chord_index.hpp"

namespace twopar {

ChordIndex index_sum(std::span<const ChordIndex> xs) noexcept {
  ChordIndex acc = ChordIndex::Trivial;
  for (ChordIndex x : xs) acc = acc + x;
  return acc;
}

bool r3_index_admissible(ChordIndex x, ChordIndex y, ChordIndex z) noexcept {
  return x + y + z == ChordIndex::Trivial;
}

char index_char(ChordIndex x) noexcept {
  switch (x) {
    case ChordIndex::Trivial: return '0';
    case ChordIndex::A: return 'a';
    case ChordIndex::B: return 'b';
    case ChordIndex::C: return 'c';
  }
  return '?';
}

std::optional<ChordIndex> index_from_char(char ch) noexcept {
  switch (ch) {
    case '0': return ChordIndex::Trivial;
    case 'a': return ChordIndex::A;
    case 'b': return ChordIndex::B;
    case 'c': return ChordIndex::C;
    default: return std::nullopt;
  }
}

}  // namespace twopar
