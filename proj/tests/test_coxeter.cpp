#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "relations.hpp"
#include "twopar/coxeter.hpp"

using namespace twopar;
using namespace twopar::letters;

namespace {

GroupElement val(std::initializer_list<Letter> w) { return evaluate_word(std::vector<Letter>(w)); }

std::vector<GroupElement> all_elements() {
  const auto s = enumerate_group();
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("letter_value") {
  CHECK(letter_value(a) * letter_value(a) == GroupElement::identity());
  CHECK(letter_value(a_p) == val({b, a, b}));
  CHECK(letter_value(a_p) != letter_value(a));
  CHECK(letter_value(b_p) == val({a, b, a}));
  CHECK(letter_value(A_p) == val({B, A, B}));
  CHECK(letter_value(B_p) == val({A, B, A}));
  CHECK(letter_value(a) * letter_value(B) == letter_value(B) * letter_value(a));

  // Fixed embedding: a = s, b = r^3 s, so ab = r.
  CHECK(to_string(letter_value(a)) == "(r^0 s^1 | R^0 S^0)");
  CHECK(to_string(letter_value(b)) == "(r^3 s^1 | R^0 S^0)");
  CHECK(to_string(val({a, b})) == "(r^1 s^0 | R^0 S^0)");
  CHECK(to_string(letter_value(A)) == "(r^0 s^0 | R^0 S^1)");
}

TEST_CASE("mul") {
  const GroupElement ab = val({a, b});
  const GroupElement ab2 = ab * ab;
  CHECK(ab2 != GroupElement::identity());
  CHECK(ab2 * ab2 == GroupElement::identity());

  const auto elems = all_elements();
  int non_associative = 0;
  for (const auto& x : elems) {
    CHECK(x * GroupElement::identity() == x);
    CHECK(GroupElement::identity() * x == x);
    CHECK(x * x.inverse() == GroupElement::identity());
    GroupElement p = GroupElement::identity();
    for (int i = 0; i < 8; ++i) p = p * x;
    CHECK(p == GroupElement::identity());
    for (const auto& y : elems) {
      for (const auto& z : elems) non_associative += (x * y) * z != x * (y * z);
    }
  }
  CHECK(non_associative == 0);
}

TEST_CASE("evaluate_word") {
  CHECK(evaluate_word({}) == GroupElement::identity());
  CHECK(val({a, B, A, b}) == val({a, b, B, A}));
  CHECK(val({a, b}) != val({b, a}));
  CHECK(val({b, a}) == val({a, b}).inverse());
}

TEST_CASE("displayed relations hold") {
  const auto rels = testing::displayed_relations();
  CHECK(rels.size() == 40);
  for (const auto& r : rels) {
    CHECK_MESSAGE(evaluate_word(r.lhs) == evaluate_word(r.rhs),
                  r.family << ": " << word_to_string(r.lhs) << " = " << word_to_string(r.rhs));
  }
}

TEST_CASE("enumerate_group") {
  CHECK(enumerate_group().size() == 64);
  const std::vector<GroupElement> ab = {letter_value(a), letter_value(b)};
  CHECK(closure(ab).size() == 8);
  const std::vector<GroupElement> capital = {letter_value(A), letter_value(B)};
  CHECK(closure(capital).size() == 8);

  const GroupElement r2 = val({a, b, a, b});
  const GroupElement R2 = val({A, B, A, B});
  const std::set<GroupElement> squares_allowed = {GroupElement::identity(), r2, R2, r2 * R2};
  for (const auto& x : all_elements()) CHECK(squares_allowed.contains(x * x));
}

TEST_CASE("lower and upper factors commute") {
  for (const auto& x : all_elements()) {
    for (const auto& y : all_elements()) {
      const GroupElement g{x.lower, Dih4Element::identity()};
      const GroupElement h{Dih4Element::identity(), y.upper};
      CHECK(g * h == h * g);
    }
  }
}

TEST_CASE("phi, psi, chi") {
  CHECK(phi(GroupElement::identity()) == GroupElement::identity());
  CHECK(phi(letter_value(a)) == letter_value(a_p));
  CHECK(phi(letter_value(b)) == letter_value(b_p));
  CHECK(phi(letter_value(A)) == letter_value(A));
  CHECK(psi(letter_value(A)) == letter_value(A_p));
  CHECK(psi(letter_value(B)) == letter_value(B_p));
  CHECK(psi(letter_value(b)) == letter_value(b));

  const auto elems = all_elements();
  std::set<GroupElement> phi_img, psi_img;
  for (const auto& x : elems) {
    CHECK(chi(x) == psi(phi(x)));
    CHECK(chi(x) == phi(psi(x)));
    CHECK(phi(phi(x)) == x);
    CHECK(psi(psi(x)) == x);
    phi_img.insert(phi(x));
    psi_img.insert(psi(x));
    for (const auto& y : elems) {
      CHECK(phi(x * y) == phi(x) * phi(y));
      CHECK(psi(x * y) == psi(x) * psi(y));
      CHECK(chi(x * y) == chi(x) * chi(y));
    }
  }
  CHECK(phi_img.size() == 64);
  CHECK(psi_img.size() == 64);
  // phi swaps primes on every small letter, psi on every capital.
  for (Letter l : all_letters()) {
    Letter swapped = l;
    swapped.prime = !l.prime;
    CHECK(phi(letter_value(l)) == letter_value(l.is_capital() ? l : swapped));
    CHECK(psi(letter_value(l)) == letter_value(l.is_capital() ? swapped : l));
  }
}

TEST_CASE("computed fact: phi is conjugation by ab and psi by AB") {
  // Recorded, not relied upon: orbit() closes under phi and psi explicitly.
  const GroupElement ab = val({a, b});
  const GroupElement AB = val({A, B});
  for (const auto& x : all_elements()) {
    CHECK(phi(x) == conjugate(x, ab));
    CHECK(psi(x) == conjugate(x, AB));
  }
}

TEST_CASE("orbit") {
  const OrbitClass id = orbit(GroupElement::identity());
  CHECK(id.members.size() == 1);
  CHECK(id.canonical == GroupElement::identity());

  const auto elems = all_elements();
  std::size_t covered = 0;
  std::set<GroupElement> canonicals;
  for (const auto& x : elems) {
    const OrbitClass o = orbit(x);
    CHECK(o.members.contains(x));
    CHECK(o.canonical == *o.members.begin());
    for (const auto& y : o.members) CHECK(orbit(y).members == o.members);
    if (canonicals.insert(o.canonical).second) covered += o.members.size();
  }
  CHECK(covered == 64);  // orbits partition the group
}

TEST_CASE("orbit agrees with brute force over all conjugators and automorphism combinations") {
  const auto& g = oracle::group();
  REQUIRE(g.size() == 64);

  // phi and psi on the oracle by substituting generator words.
  auto substitute = [&](std::size_t i, bool do_phi, bool do_psi) {
    std::size_t acc = 0;
    for (int x : g.word_of[i]) {
      const bool capital = x >= 2;
      const bool second = x % 2 == 1;
      const std::size_t self = g.gen[static_cast<std::size_t>(x)];
      const std::size_t other = g.gen[static_cast<std::size_t>((capital ? 2 : 0) + (second ? 0 : 1))];
      const bool swap = capital ? do_psi : do_phi;
      acc = g.mul(acc, swap ? g.mul(g.mul(other, self), other) : self);
    }
    return acc;
  };
  auto inverse = [&](std::size_t h) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g.mul(h, k) == 0) return k;
    }
    return std::size_t{0};
  };

  for (std::size_t x = 0; x < g.size(); ++x) {
    std::set<GroupElement> brute;
    for (int autom = 0; autom < 4; ++autom) {
      const std::size_t y = substitute(x, autom & 1, autom & 2);
      for (std::size_t h = 0; h < g.size(); ++h) brute.insert(g.to_library(g.mul(g.mul(h, y), inverse(h))));
    }
    CHECK(orbit(g.to_library(x)).members == brute);
  }

  const OrbitClass aA = orbit(val({a, A}));
  CHECK(aA.members.size() <= 64);
  CHECK(aA.members.contains(val({a, A})));
}

TEST_CASE("oracle representation is isomorphic to the normal form") {
  const auto& g = oracle::group();
  std::set<GroupElement> images;
  for (std::size_t i = 0; i < g.size(); ++i) images.insert(g.to_library(i));
  CHECK(images.size() == 64);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(g.to_library(g.mul(i, j)) == g.to_library(i) * g.to_library(j));
  }
  for (Letter l : all_letters()) CHECK(g.to_library(g.letter(l)) == letter_value(l));
}

TEST_CASE("group element text form") {
  for (const auto& x : all_elements()) CHECK(group_element_from_string(to_string(x)) == x);
  CHECK_THROWS_AS(group_element_from_string("(r^4 s^0 | R^0 S^0)"), std::invalid_argument);
  CHECK(word_to_string(std::vector<Letter>{a_p, A}) == "a' A");
  CHECK(word_to_string({}) == "1");
}
