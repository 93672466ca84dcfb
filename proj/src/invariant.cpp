#include "twopar/invariant.hpp"

namespace twopar {

LetterWord assign_letters(const GaussDiagram& d, CountMode mode) {
  require_valid(d);
  const std::size_t n = d.endpoints.size();

  // c_before[role][p] = number of c-chord endpoints with that role at q < p.
  std::array<std::vector<std::size_t>, 2> c_before;
  for (auto& v : c_before) v.assign(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const auto& e = d.endpoints[p];
    const bool is_c = d.index_of(e.chord) == ChordIndex::C;
    for (int r = 0; r < 2; ++r) {
      c_before[r][p + 1] = c_before[r][p] + (is_c && static_cast<int>(e.role) == r ? 1 : 0);
    }
  }
  auto count_relative = [&](Role role, std::size_t p) {
    const auto& pre = c_before[static_cast<int>(role)];
    return mode == CountMode::Before ? pre[p] : pre[n] - pre[p + 1];
  };

  const auto where = chord_positions(d);
  LetterWord out;
  for (std::size_t p = 0; p < n; ++p) {
    const auto& e = d.endpoints[p];
    const ChordIndex idx = d.index_of(e.chord);
    if (!is_lettered(idx)) continue;
    const bool capital = e.role == Role::Over;
    const std::size_t opposite_pos = where.at(e.chord).of(opposite(e.role));
    Letter l;
    if (idx == ChordIndex::A) {
      l.base = capital ? LetterBase::A : LetterBase::a;
    } else {
      l.base = capital ? LetterBase::B : LetterBase::b;
    }
    l.prime = count_relative(e.role, opposite_pos) % 2 == 1;
    out.letters.push_back(l);
    out.positions.push_back(p);
  }
  return out;
}

GroupElement w(const GaussDiagram& d) { return evaluate_word(assign_letters(d, CountMode::Before).letters); }

GroupElement w_after(const GaussDiagram& d) { return evaluate_word(assign_letters(d, CountMode::After).letters); }

ParityProfile parity_profile(const GaussDiagram& d) {
  ParityProfile p;
  for (const auto& [chord, idx] : d.indices) {
    switch (idx) {
      case ChordIndex::A: ++p.count_a; break;
      case ChordIndex::B: ++p.count_b; break;
      case ChordIndex::C: ++p.count_c; break;
      case ChordIndex::Trivial: break;
    }
  }
  p.a_even = p.count_a % 2 == 0;
  p.b_even = p.count_b % 2 == 0;
  p.c_even = p.count_c % 2 == 0;
  return p;
}

OrbitClass compact_invariant(const GaussDiagram& d) {
  if (d.kind != DiagramKind::Closed) throw InvariantUndefined("compact invariant is defined for closed diagrams only");
  require_valid(d);
  if (!parity_profile(d).c_even) {
    throw InvariantUndefined("diagram is c-odd; the compact invariant is only established for c-even knots");
  }
  return orbit(w(d));
}

bool is_nontrivial(const GaussDiagram& d) {
  if (d.kind == DiagramKind::Long) return w(d) != GroupElement::identity();
  return compact_invariant(d).canonical != GroupElement::identity();
}

}  // namespace twopar
