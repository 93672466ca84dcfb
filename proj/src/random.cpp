#include "twopar/random.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace twopar {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;  // largest multiple of n, minus one
  std::uint64_t x = engine_();
  while (x > limit) x = engine_();
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Block = std::vector<Endpoint>;

void insert_block(std::vector<Block>& blocks, Block b, Rng& rng) {
  const auto at = static_cast<std::ptrdiff_t>(rng.below(blocks.size() + 1));
  blocks.insert(blocks.begin() + at, std::move(b));
}

ChordIndex random_index(Rng& rng) { return kAllIndices[rng.below(4)]; }

}  // namespace

GaussDiagram random_diagram(std::uint64_t seed, std::size_t max_chords, DiagramKind kind, bool c_even_only) {
  Rng rng(seed);
  const std::size_t n = static_cast<std::size_t>(rng.below(max_chords + 1));
  const std::size_t triangles = n >= 3 ? static_cast<std::size_t>(rng.below(n / 3 + 1)) : 0;

  // Pieces of a planted triangle are two-endpoint blocks, so later
  // insertions never split them.
  std::vector<Block> blocks;
  std::map<ChordId, ChordIndex> indices;
  std::vector<ChordId> free_chords;
  std::vector<std::array<ChordId, 3>> planted;
  ChordId next = 1;

  for (std::size_t t = 0; t < triangles; ++t) {
    const std::array<ChordId, 3> ids{next, next + 1, next + 2};
    next += 3;
    const ChordIndex ix = random_index(rng);
    const ChordIndex iy = random_index(rng);
    indices[ids[0]] = ix;
    indices[ids[1]] = iy;
    indices[ids[2]] = ix + iy;
    planted.push_back(ids);

    // Piece i meets the two chords listed in meets[i]; chord k joins the
    // pieces ends[k].
    constexpr std::array<std::array<int, 2>, 3> meets{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<int, 3> level{0, 1, 2};
    for (std::size_t i = level.size() - 1; i > 0; --i) std::swap(level[i], level[rng.below(i + 1)]);
    const bool delta = rng.below(5) == 0;
    constexpr std::array<std::array<int, 2>, 3> ends{{{0, 1}, {0, 2}, {1, 2}}};  // pieces of chords x, y, z

    for (int piece = 0; piece < 3; ++piece) {
      Block b;
      for (int which : meets[piece]) {
        const int other = ends[which][0] == piece ? ends[which][1] : ends[which][0];
        const bool over = delta ? level[other] == (level[piece] + 1) % 3 : level[piece] > level[other];
        b.push_back({ids[static_cast<std::size_t>(which)], over ? Role::Over : Role::Under});
      }
      if (rng.coin()) std::swap(b[0], b[1]);
      insert_block(blocks, std::move(b), rng);
    }
  }

  for (std::size_t k = 3 * triangles; k < n; ++k) {
    const ChordId id = next++;
    indices[id] = random_index(rng);
    free_chords.push_back(id);
    insert_block(blocks, Block{{id, Role::Under}}, rng);
    insert_block(blocks, Block{{id, Role::Over}}, rng);
  }

  if (c_even_only) {
    const auto c_count = std::count_if(indices.begin(), indices.end(),
                                       [](const auto& kv) { return kv.second == ChordIndex::C; });
    if (c_count % 2 == 1) {
      if (!free_chords.empty()) {
        const ChordId id = rng.pick(free_chords);
        indices[id] = indices[id] == ChordIndex::C ? ChordIndex::Trivial : ChordIndex::C;
      } else {
        // Some planted triangle carries exactly one c (indices a, b, c).
        for (const auto& ids : planted) {
          const auto cs = std::count_if(ids.begin(), ids.end(), [&](ChordId c) { return indices[c] == ChordIndex::C; });
          if (cs == 1) {
            for (ChordId c : ids) indices[c] = ChordIndex::Trivial;
            break;
          }
        }
      }
    }
  }

  GaussDiagram d;
  d.kind = kind;
  for (const auto& b : blocks) d.endpoints.insert(d.endpoints.end(), b.begin(), b.end());
  d.indices = std::move(indices);
  return normalize(d);
}

std::vector<MoveStep> random_move_sequence(const GaussDiagram& d, std::uint64_t seed, std::size_t length,
                                           const SequenceOptions& opts) {
  require_valid(d);
  Rng rng(seed);
  std::vector<MoveStep> out;
  out.reserve(length);
  GaussDiagram cur = d;

  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t n = cur.endpoints.size();
    std::vector<Move> r1_remove;
    std::vector<Move> r2_remove;
    for (auto& m : removal_moves(cur)) {
      (kind_of(m) == MoveKind::R1Remove ? r1_remove : r2_remove).push_back(std::move(m));
    }
    const std::vector<Move> r3 = triangle_moves(cur, false);

    enum Family { kR1Add, kR2Add, kR1Remove, kR2Remove, kR3, kRotate };
    std::vector<Family> families;
    if (cur.chord_count() + 1 <= opts.max_chords) families.push_back(kR1Add);
    if (cur.chord_count() + 2 <= opts.max_chords) families.push_back(kR2Add);
    if (!r1_remove.empty()) families.push_back(kR1Remove);
    if (!r2_remove.empty()) families.push_back(kR2Remove);
    if (!r3.empty()) families.push_back(kR3);
    if (opts.rotations && cur.kind == DiagramKind::Closed && n > 0) families.push_back(kRotate);
    if (families.empty()) break;

    Move m;
    switch (rng.pick(families)) {
      case kR1Add: {
        const std::size_t slot = static_cast<std::size_t>(rng.below(n + 1));
        const Role first = rng.coin() ? Role::Over : Role::Under;
        std::optional<Sign> sign;
        if (cur.signs) sign = rng.coin() ? Sign::Plus : Sign::Minus;
        m = R1Add{slot, first, ChordIndex::Trivial, sign};
        break;
      }
      case kR2Add: {
        auto s1 = static_cast<std::size_t>(rng.below(n + 1));
        auto s2 = static_cast<std::size_t>(rng.below(n + 1));
        if (s1 > s2) std::swap(s1, s2);
        const Role first = rng.coin() ? Role::Over : Role::Under;
        m = R2Add{s1, s2, first, random_index(rng)};
        break;
      }
      case kR1Remove: m = rng.pick(r1_remove); break;
      case kR2Remove: m = rng.pick(r2_remove); break;
      case kR3: m = rng.pick(r3); break;
      case kRotate: m = RotateBasepoint{}; break;
    }
    cur = apply_move(cur, m);
    out.push_back({m, cur});
  }
  return out;
}

}  // namespace twopar
