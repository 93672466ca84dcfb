#include <doctest.h>

#include <map>

#include "twopar/gauss.hpp"
#include "twopar/random.hpp"

using namespace twopar;

TEST_CASE("parse: one and two chord long diagrams") {
  const GaussDiagram d = parse("long U1:a O1:a");
  CHECK(d.kind == DiagramKind::Long);
  CHECK(d.chord_count() == 1);
  CHECK(d.index_of(1) == ChordIndex::A);
  CHECK(d.endpoints == std::vector<Endpoint>{{1, Role::Under}, {1, Role::Over}});
  CHECK_FALSE(d.signs.has_value());

  const GaussDiagram e = parse("long U1:a U2:c O1:a O2:c");
  CHECK(e.chord_count() == 2);
  CHECK(e.index_of(1) == ChordIndex::A);
  CHECK(e.index_of(2) == ChordIndex::C);
  CHECK(serialize(e) == "long U1:a U2:c O1:a O2:c");
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_WITH_AS(parse("long U1:a O1:b"), doctest::Contains("index mismatch on chord 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse("long O1:a O1:a"), doctest::Contains("duplicate role"), ParseError);
  CHECK_THROWS_WITH_AS(parse("long U1:a"), doctest::Contains("odd occurrence"), ParseError);
  CHECK_THROWS_WITH_AS(parse("long U1+:a O1-:a"), doctest::Contains("sign mismatch"), ParseError);
  CHECK_THROWS_WITH_AS(parse("long U1+:a O1:a"), doctest::Contains("every token or on none"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("open U1:a O1:a"), ParseError);

  try {
    parse("long U1:a X1:a");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 10);
  }
  for (const char* bad : {"long U0:a O0:a", "long U01:a O01:a", "long U1:d O1:d", "long U1a O1a", "long U1:aa O1:a"}) {
    CHECK_THROWS_AS(parse(bad), ParseError);
  }
}

TEST_CASE("serialize: fixed forms") {
  CHECK(serialize(GaussDiagram{}) == "long");
  CHECK(serialize(parse("long U1:a O1:a")) == "long U1:a O1:a");
  CHECK(serialize(parse("closed U1:0 O1:0")) == "closed U1:0 O1:0");
  CHECK(serialize(parse("  closed\tO3+:b   U3+:b ")) == "closed O3+:b U3+:b");
}

TEST_CASE("validate") {
  CHECK(validate(parse("long U1:a U2:c O1:a O2:c")).empty());

  GaussDiagram dup;
  dup.endpoints = {{1, Role::Over}, {1, Role::Over}};
  dup.indices[1] = ChordIndex::A;
  CHECK(validate(dup) == std::vector<Violation>{{ViolationKind::DuplicateRole, 1}});

  GaussDiagram missing;
  missing.endpoints = {{1, Role::Under}, {1, Role::Over}};
  CHECK(validate(missing) == std::vector<Violation>{{ViolationKind::MissingIndex, 1}});

  GaussDiagram odd;
  odd.endpoints = {{2, Role::Under}};
  odd.indices = {{2, ChordIndex::Trivial}, {5, ChordIndex::B}};
  const auto vs = validate(odd);
  CHECK(vs.size() == 2);
  CHECK(vs[0] == Violation{ViolationKind::OddOccurrence, 2});
  CHECK(vs[1] == Violation{ViolationKind::StrayIndex, 5});

  GaussDiagram sig = parse("long U1:a O1:a");
  sig.signs.emplace();
  CHECK(validate(sig) == std::vector<Violation>{{ViolationKind::MissingSign, 1}});

  CHECK_THROWS_AS(require_valid(dup), InvalidDiagram);
}

TEST_CASE("normalize renumbers by first occurrence") {
  const GaussDiagram d = parse("long O7-:c U3+:b O3+:b U7-:c");
  const GaussDiagram n = normalize(d);
  CHECK(serialize(n) == "long O1-:c U2+:b O2+:b U1-:c");
  CHECK(normalize(n) == n);
}

namespace {

// Random valid diagram with scrambled chord ids and, on odd seeds, signs.
// An empty diagram is always unsigned: "long" has no signed spelling.
GaussDiagram scrambled(std::uint64_t seed) {
  GaussDiagram d = random_diagram(seed, 16, seed % 3 == 0 ? DiagramKind::Closed : DiagramKind::Long, false);
  Rng rng(seed * 7 + 1);
  std::map<ChordId, ChordId> relabel;
  for (const auto& [c, idx] : d.indices) relabel[c] = static_cast<ChordId>(1 + rng.below(1000) * 40 + c);
  GaussDiagram out;
  out.kind = d.kind;
  for (const auto& e : d.endpoints) out.endpoints.push_back({relabel[e.chord], e.role});
  for (const auto& [c, idx] : d.indices) out.indices[relabel[c]] = idx;
  if (seed % 2 == 1 && !out.empty()) {
    out.signs.emplace();
    for (const auto& [c, idx] : out.indices) (*out.signs)[c] = rng.coin() ? Sign::Plus : Sign::Minus;
  }
  return out;
}

}  // namespace

TEST_CASE("property: parse . serialize is the identity on valid diagrams") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const GaussDiagram d = scrambled(seed);
    REQUIRE(validate(d).empty());
    const std::string text = serialize(d);
    CHECK_MESSAGE(parse(text) == d, text);
    CHECK(serialize(parse(text)) == text);
  }
}

TEST_CASE("property: serialize is injective") {
  std::map<std::string, GaussDiagram> seen;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const GaussDiagram d = scrambled(seed % 1500 + (seed >= 1500 ? 100000 : 0));
    auto [it, fresh] = seen.emplace(serialize(d), d);
    if (!fresh) CHECK(it->second == d);
  }
  CHECK(seen.size() > 1000);
}
