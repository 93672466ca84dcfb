#include "twopar/moves.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "twopar/invariant.hpp"

namespace twopar {

MoveKind kind_of(const Move& m) noexcept { return static_cast<MoveKind>(m.index()); }

std::string_view to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::R1Add: return "R1Add";
    case MoveKind::R1Remove: return "R1Remove";
    case MoveKind::R2Add: return "R2Add";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3: return "R3";
    case MoveKind::Delta: return "Delta";
    case MoveKind::Rotate: return "Rotate";
  }
  return "?";
}

bool is_isotopy(const Move& m) noexcept {
  const MoveKind k = kind_of(m);
  return k != MoveKind::Delta && k != MoveKind::Rotate;
}

InvalidMove::InvalidMove(MoveViolation v) : std::invalid_argument(v.message), violation_(std::move(v)) {}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

MoveViolation violation(MoveError e, std::string msg) { return {e, std::move(msg)}; }

std::string chord_str(ChordId c) { return "chord " + std::to_string(c); }

ChordId max_chord(const GaussDiagram& d) {
  return d.indices.empty() ? 0 : d.indices.rbegin()->first;
}

std::optional<MoveViolation> require_signs(const GaussDiagram& d, const MoveOptions& opts) {
  if (opts.strict_signs && !d.signs) return violation(MoveError::MissingSign, "strict mode needs a signed diagram");
  return std::nullopt;
}

std::optional<MoveViolation> check(const GaussDiagram& d, const R1Add& m, const MoveOptions& opts) {
  if (m.slot > d.endpoints.size()) return violation(MoveError::OutOfRange, "R1Add slot out of range");
  if (m.index != ChordIndex::Trivial) {
    return violation(MoveError::R1IndexNotTrivial, "R1 chord must have trivial index");
  }
  if (!d.signs && m.sign) return violation(MoveError::SignMismatch, "sign given for an unsigned diagram");
  if (d.signs && !m.sign && opts.strict_signs) return violation(MoveError::MissingSign, "R1Add needs a sign");
  return require_signs(d, opts);
}

std::optional<MoveViolation> check(const GaussDiagram& d, const R1Remove& m, const MoveOptions& opts) {
  if (!d.indices.contains(m.chord)) return violation(MoveError::UnknownChord, "no " + chord_str(m.chord));
  const auto pos = chord_positions(d).at(m.chord);
  const auto [lo, hi] = std::minmax(pos.over, pos.under);
  if (hi != lo + 1) return violation(MoveError::NotAdjacent, chord_str(m.chord) + " endpoints are not adjacent");
  if (d.index_of(m.chord) != ChordIndex::Trivial) {
    return violation(MoveError::R1IndexNotTrivial, "R1 chord must have trivial index");
  }
  return require_signs(d, opts);
}

std::optional<MoveViolation> check(const GaussDiagram& d, const R2Add& m, const MoveOptions& opts) {
  if (m.slot1 > m.slot2 || m.slot2 > d.endpoints.size()) {
    return violation(MoveError::OutOfRange, "R2Add slots must satisfy slot1 <= slot2 <= endpoint count");
  }
  return require_signs(d, opts);
}

std::optional<MoveViolation> check(const GaussDiagram& d, const R2Remove& m, const MoveOptions& opts) {
  for (ChordId c : {m.first, m.second}) {
    if (!d.indices.contains(c)) return violation(MoveError::UnknownChord, "no " + chord_str(c));
  }
  if (m.first == m.second) return violation(MoveError::SameChord, "R2 needs two distinct chords");

  const auto where = chord_positions(d);
  const auto px = where.at(m.first);
  const auto py = where.at(m.second);
  const auto [x1, x2] = std::minmax(px.over, px.under);
  const auto [y1, y2] = std::minmax(py.over, py.under);
  auto adjacent = [](std::size_t p, std::size_t q) { return p + 1 == q || q + 1 == p; };
  if (!adjacent(x1, y1) || !adjacent(x2, y2)) {
    return violation(MoveError::NotAdjacent, "R2 chords do not form two adjacent endpoint pairs");
  }
  if ((x1 < y1) == (x2 < y2)) return violation(MoveError::PairOrder, "R2 pairs must be in mutually reversed order");

  const Role r1 = d.endpoints[x1].role;
  if (d.endpoints[y1].role != r1 || d.endpoints[x2].role == r1 || d.endpoints[y2].role == r1) {
    return violation(MoveError::RolePattern, "R2 needs one Over-Over pair and one Under-Under pair");
  }
  if (d.index_of(m.first) != d.index_of(m.second)) {
    return violation(MoveError::IndexMismatch, "R2 chords must have the same index");
  }
  if (d.signs && d.signs->at(m.first) == d.signs->at(m.second)) {
    return violation(MoveError::SignMismatch, "R2 chords must have opposite signs");
  }
  return require_signs(d, opts);
}

std::string pairs_str(const PairTriple& t) {
  std::string out = "@";
  for (std::size_t s : t) out += "(" + std::to_string(s + 1) + "," + std::to_string(s + 2) + ")";
  return out;
}

std::optional<MoveViolation> check_triangle(const GaussDiagram& d, const PairTriple& t, bool delta,
                                            const MoveOptions& opts) {
  const std::size_t n = d.endpoints.size();
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] + 1 >= n) return violation(MoveError::OutOfRange, "pair " + pairs_str(t) + " out of range");
    if (i > 0 && t[i] < t[i - 1] + 2) {
      return violation(MoveError::NotAdjacent, "pairs must be ascending and disjoint");
    }
  }

  std::map<ChordId, int> seen;
  int over_over = 0;
  int under_under = 0;
  int mixed = 0;
  for (std::size_t s : t) {
    const Endpoint& e1 = d.endpoints[s];
    const Endpoint& e2 = d.endpoints[s + 1];
    if (e1.chord == e2.chord) return violation(MoveError::NotATriangle, "a pair holds both ends of one chord");
    ++seen[e1.chord];
    ++seen[e2.chord];
    if (e1.role != e2.role) {
      ++mixed;
    } else if (e1.role == Role::Over) {
      ++over_over;
    } else {
      ++under_under;
    }
  }
  if (seen.size() != 3) return violation(MoveError::NotATriangle, "the pairs must involve exactly three chords");

  if (delta) {
    if (mixed != 3) return violation(MoveError::RolePattern, "Delta needs three mixed-role pairs");
  } else if (over_over != 1 || under_under != 1 || mixed != 1) {
    return violation(MoveError::RolePattern,
                     "R3 needs one Over-Over pair, one Under-Under pair and one mixed pair");
  }

  std::array<ChordIndex, 3> idx{};
  std::size_t k = 0;
  for (const auto& [chord, cnt] : seen) idx[k++] = d.index_of(chord);
  if (!r3_index_admissible(idx[0], idx[1], idx[2])) {
    return violation(MoveError::IndexSum, "indices of the three chords must sum to trivial");
  }
  return require_signs(d, opts);
}

}  // namespace

std::optional<MoveViolation> check_move(const GaussDiagram& d, const Move& m, const MoveOptions& opts) {
  require_valid(d);
  return std::visit(
      overloaded{
          [&](const R3& r) { return check_triangle(d, r.pairs, false, opts); },
          [&](const Delta& r) { return check_triangle(d, r.pairs, true, opts); },
          [&](const RotateBasepoint&) -> std::optional<MoveViolation> {
            if (d.kind != DiagramKind::Closed) return violation(MoveError::NotClosed, "only closed diagrams rotate");
            if (d.empty()) return violation(MoveError::EmptyDiagram, "cannot rotate an empty diagram");
            return std::nullopt;
          },
          [&](const auto& r) { return check(d, r, opts); },
      },
      m);
}

namespace {

void erase_chord(GaussDiagram& d, ChordId c) {
  std::erase_if(d.endpoints, [c](const Endpoint& e) { return e.chord == c; });
  d.indices.erase(c);
  if (d.signs) d.signs->erase(c);
}

void swap_pairs(GaussDiagram& d, const PairTriple& t) {
  for (std::size_t s : t) std::swap(d.endpoints[s], d.endpoints[s + 1]);
}

}  // namespace

GaussDiagram apply_move(const GaussDiagram& d, const Move& m, const MoveOptions& opts) {
  if (auto v = check_move(d, m, opts)) throw InvalidMove(std::move(*v));
  GaussDiagram out = d;
  std::visit(overloaded{
                 [&](const R1Add& r) {
                   const ChordId id = max_chord(d) + 1;
                   const auto at = out.endpoints.begin() + static_cast<std::ptrdiff_t>(r.slot);
                   out.endpoints.insert(at, {Endpoint{id, r.first}, Endpoint{id, opposite(r.first)}});
                   out.indices[id] = r.index;
                   if (out.signs) (*out.signs)[id] = r.sign.value_or(Sign::Plus);
                 },
                 [&](const R1Remove& r) { erase_chord(out, r.chord); },
                 [&](const R2Add& r) {
                   const ChordId x = max_chord(d) + 1;
                   const ChordId y = x + 1;
                   const Role second = opposite(r.first_pair);
                   out.endpoints.clear();
                   for (std::size_t k = 0; k <= d.endpoints.size(); ++k) {
                     if (k == r.slot1) {
                       out.endpoints.push_back({x, r.first_pair});
                       out.endpoints.push_back({y, r.first_pair});
                     }
                     if (k == r.slot2) {
                       out.endpoints.push_back({y, second});
                       out.endpoints.push_back({x, second});
                     }
                     if (k < d.endpoints.size()) out.endpoints.push_back(d.endpoints[k]);
                   }
                   out.indices[x] = r.index;
                   out.indices[y] = r.index;
                   if (out.signs) {
                     (*out.signs)[x] = Sign::Plus;
                     (*out.signs)[y] = Sign::Minus;
                   }
                 },
                 [&](const R2Remove& r) {
                   erase_chord(out, r.first);
                   erase_chord(out, r.second);
                 },
                 [&](const R3& r) { swap_pairs(out, r.pairs); },
                 [&](const Delta& r) { swap_pairs(out, r.pairs); },
                 [&](const RotateBasepoint&) {
                   std::rotate(out.endpoints.begin(), out.endpoints.begin() + 1, out.endpoints.end());
                 },
             },
             m);
  return out;
}

std::string to_string(const RotationEffect& e) {
  switch (e.kind) {
    case RotationEffectKind::Unchanged: return "Unchanged";
    case RotationEffectKind::ApplyPhi: return "ApplyPhi";
    case RotationEffectKind::ApplyPsi: return "ApplyPsi";
    case RotationEffectKind::ConjugateBy: return "ConjugateBy(" + to_string(e.letter) + ")";
  }
  return "?";
}

std::pair<GaussDiagram, RotationEffect> rotate_basepoint(const GaussDiagram& d) {
  GaussDiagram rotated = apply_move(d, RotateBasepoint{});
  const Endpoint& first = d.endpoints.front();
  RotationEffect effect;
  switch (d.index_of(first.chord)) {
    case ChordIndex::Trivial: effect.kind = RotationEffectKind::Unchanged; break;
    case ChordIndex::C:
      effect.kind = first.role == Role::Under ? RotationEffectKind::ApplyPhi : RotationEffectKind::ApplyPsi;
      break;
    case ChordIndex::A:
    case ChordIndex::B: {
      const LetterWord word = assign_letters(d);
      effect.kind = RotationEffectKind::ConjugateBy;
      effect.letter = word.letters.front();  // position 0 carries a letter
      break;
    }
  }
  return {std::move(rotated), effect};
}

GroupElement predicted_w(const RotationEffect& e, const GroupElement& w_before) noexcept {
  switch (e.kind) {
    case RotationEffectKind::Unchanged: return w_before;
    case RotationEffectKind::ApplyPhi: return phi(w_before);
    case RotationEffectKind::ApplyPsi: return psi(w_before);
    case RotationEffectKind::ConjugateBy: return conjugate(w_before, letter_value(e.letter));
  }
  return w_before;
}

std::vector<Move> removal_moves(const GaussDiagram& d, const MoveOptions& opts) {
  std::vector<Move> out;
  for (const auto& [chord, idx] : d.indices) {
    Move m = R1Remove{chord};
    if (!check_move(d, m, opts)) out.push_back(m);
  }
  std::set<std::pair<ChordId, ChordId>> r2;
  for (std::size_t p = 0; p + 1 < d.endpoints.size(); ++p) {
    const Endpoint& e1 = d.endpoints[p];
    const Endpoint& e2 = d.endpoints[p + 1];
    if (e1.chord == e2.chord || e1.role != e2.role) continue;
    const auto key = std::minmax(e1.chord, e2.chord);
    if (r2.contains(key)) continue;
    Move m = R2Remove{key.first, key.second};
    if (!check_move(d, m, opts)) {
      r2.insert(key);
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Move> triangle_moves(const GaussDiagram& d, bool delta, const MoveOptions& opts) {
  const std::size_t n = d.endpoints.size();
  if (n < 6) return {};
  const auto where = chord_positions(d);
  auto other_end = [&](std::size_t p) {
    const Endpoint& e = d.endpoints[p];
    return where.at(e.chord).of(opposite(e.role));
  };
  // Starts of the (at most two) adjacent pairs that contain position p.
  auto pairs_at = [&](std::size_t p) {
    std::vector<std::size_t> s;
    if (p > 0) s.push_back(p - 1);
    if (p + 1 < n) s.push_back(p);
    return s;
  };
  auto chords_of = [&](std::size_t s) { return std::pair{d.endpoints[s].chord, d.endpoints[s + 1].chord}; };
  auto disjoint = [](std::size_t s, std::size_t t) { return s + 1 < t || t + 1 < s; };

  std::set<PairTriple> found;
  for (std::size_t s1 = 0; s1 + 1 < n; ++s1) {
    const auto [x, y] = chords_of(s1);
    if (x == y) continue;
    for (std::size_t s2 : pairs_at(other_end(s1))) {
      if (!disjoint(s1, s2)) continue;
      const auto [u, v] = chords_of(s2);
      if (u == v) continue;
      const ChordId z = u == x ? v : u;
      if (z == x || z == y) continue;
      for (std::size_t s3 : pairs_at(other_end(s1 + 1))) {
        if (!disjoint(s1, s3) || !disjoint(s2, s3)) continue;
        const auto [p, q] = chords_of(s3);
        if (!((p == y && q == z) || (p == z && q == y))) continue;
        PairTriple t{s1, s2, s3};
        std::sort(t.begin(), t.end());
        found.insert(t);
      }
    }
  }

  std::vector<Move> out;
  for (const PairTriple& t : found) {
    Move m = delta ? Move{Delta{t}} : Move{R3{t}};
    if (!check_move(d, m, opts)) out.push_back(m);
  }
  return out;
}

std::vector<Move> applicable_moves(const GaussDiagram& d, const MoveOptions& opts) {
  require_valid(d);
  std::vector<Move> out = removal_moves(d, opts);
  for (auto& m : triangle_moves(d, false, opts)) out.push_back(std::move(m));
  for (auto& m : triangle_moves(d, true, opts)) out.push_back(std::move(m));

  const std::size_t n = d.endpoints.size();
  for (std::size_t slot = 0; slot <= n; ++slot) {
    for (Role first : {Role::Under, Role::Over}) {
      Move m = R1Add{slot, first, ChordIndex::Trivial, std::nullopt};
      if (!check_move(d, m, opts)) out.push_back(m);
    }
  }

  // R2Add on distinct slots, subsampled evenly down to kR2AddSample.
  std::vector<R2Add> r2;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (Role first : {Role::Under, Role::Over}) {
        for (ChordIndex idx : kAllIndices) r2.push_back({i, j, first, idx});
      }
    }
  }
  const std::size_t take = std::min(r2.size(), kR2AddSample);
  for (std::size_t k = 0; k < take; ++k) {
    Move m = r2[k * r2.size() / take];
    if (!check_move(d, m, opts)) out.push_back(m);
  }

  if (d.kind == DiagramKind::Closed && !d.empty()) out.push_back(RotateBasepoint{});
  return out;
}

std::string to_string(const Move& m) {
  return std::visit(
      overloaded{
          [](const R1Add& r) {
            std::string s = "R1Add @" + std::to_string(r.slot) + " " + role_char(r.first) +
                            role_char(opposite(r.first)) + " " + index_char(r.index);
            if (r.sign) s += *r.sign == Sign::Plus ? " +" : " -";
            return s;
          },
          [](const R1Remove& r) { return "R1Remove " + std::to_string(r.chord); },
          [](const R2Add& r) {
            return "R2Add @(" + std::to_string(r.slot1) + "," + std::to_string(r.slot2) + ") " +
                   role_char(r.first_pair) + " " + index_char(r.index);
          },
          [](const R2Remove& r) { return "R2Remove " + std::to_string(r.first) + " " + std::to_string(r.second); },
          [](const R3& r) { return "R3 " + pairs_str(r.pairs); },
          [](const Delta& r) { return "Delta " + pairs_str(r.pairs); },
          [](const RotateBasepoint&) { return std::string("Rotate"); },
      },
      m);
}

Move parse_move(std::string_view text) {
  const std::string s(text);
  auto num = [](const std::ssub_match& sm) { return static_cast<std::size_t>(std::stoull(sm.str())); };
  auto role = [](char c) { return c == 'O' ? Role::Over : Role::Under; };
  std::smatch m;

  static const std::regex r1add(R"(\s*R1Add\s+@(\d+)\s+(UO|OU)\s+([0abc])(?:\s+([+-]))?\s*)");
  static const std::regex r1rem(R"(\s*R1Remove\s+(\d+)\s*)");
  static const std::regex r2add(R"(\s*R2Add\s+@\(\s*(\d+)\s*,\s*(\d+)\s*\)\s+([UO])\s+([0abc])\s*)");
  static const std::regex r2rem(R"(\s*R2Remove\s+(\d+)\s+(\d+)\s*)");
  static const std::regex tri(
      R"(\s*(R3|Delta)\s+@\(\s*(\d+)\s*,\s*(\d+)\s*\)\(\s*(\d+)\s*,\s*(\d+)\s*\)\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex rot(R"(\s*Rotate\s*)");

  if (std::regex_match(s, m, r1add)) {
    R1Add r{num(m[1]), role(m[2].str()[0]), *index_from_char(m[3].str()[0]), std::nullopt};
    if (m[4].matched) r.sign = m[4].str() == "+" ? Sign::Plus : Sign::Minus;
    return r;
  }
  if (std::regex_match(s, m, r1rem)) return R1Remove{static_cast<ChordId>(num(m[1]))};
  if (std::regex_match(s, m, r2add)) {
    return R2Add{num(m[1]), num(m[2]), role(m[3].str()[0]), *index_from_char(m[4].str()[0])};
  }
  if (std::regex_match(s, m, r2rem)) {
    return R2Remove{static_cast<ChordId>(num(m[1])), static_cast<ChordId>(num(m[2]))};
  }
  if (std::regex_match(s, m, tri)) {
    PairTriple t{};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t p = num(m[2 + 2 * i]);
      const std::size_t q = num(m[3 + 2 * i]);
      if (p == 0 || q != p + 1) throw std::invalid_argument("pair (" + std::to_string(p) + "," +
                                                            std::to_string(q) + ") is not two adjacent positions");
      t[i] = p - 1;
    }
    if (m[1].str() == "R3") return R3{t};
    return Delta{t};
  }
  if (std::regex_match(s, m, rot)) return RotateBasepoint{};
  throw std::invalid_argument("unrecognized move: '" + s + "'");
}

}  // namespace twopar
