#include "twopar/coxeter.hpp"

#include <deque>
#include <regex>
#include <stdexcept>

namespace twopar {

namespace {

constexpr Dih4Element kS{0, true};    // a, A
constexpr Dih4Element kRs{3, true};   // b, B

constexpr Dih4Element base_value(bool second) noexcept { return second ? kRs : kS; }

// Image of a factor element under the endomorphism x -> image_x, y -> image_y,
// using the normal form r^k s^f = (xy)^k x^f.
Dih4Element extend_homomorphism(Dih4Element g, Dih4Element image_x, Dih4Element image_y) noexcept {
  const Dih4Element image_r = image_x * image_y;
  Dih4Element out = Dih4Element::identity();
  for (int i = 0; i < g.rot; ++i) out = out * image_r;
  if (g.ref) out = out * image_x;
  return out;
}

Dih4Element swap_primes(Dih4Element g) noexcept {
  const Dih4Element x = kS;
  const Dih4Element y = kRs;
  return extend_homomorphism(g, y * x * y, x * y * x);
}

constexpr std::array<Letter, 8> kAllLetters = {
    letters::a, letters::a_p, letters::b, letters::b_p, letters::A, letters::A_p, letters::B, letters::B_p,
};

}  // namespace

std::span<const Letter> all_letters() noexcept { return kAllLetters; }

GroupElement letter_value(Letter l) noexcept {
  const bool capital = l.is_capital();
  const bool second = l.base == LetterBase::b || l.base == LetterBase::B;
  Dih4Element v = base_value(second);
  if (l.prime) {
    const Dih4Element other = base_value(!second);
    v = other * v * other;
  }
  return capital ? GroupElement{Dih4Element::identity(), v} : GroupElement{v, Dih4Element::identity()};
}

GroupElement evaluate_word(std::span<const Letter> w) noexcept {
  GroupElement acc = GroupElement::identity();
  for (Letter l : w) acc = acc * letter_value(l);
  return acc;
}

GroupElement phi(const GroupElement& x) noexcept { return {swap_primes(x.lower), x.upper}; }

GroupElement psi(const GroupElement& x) noexcept { return {x.lower, swap_primes(x.upper)}; }

GroupElement chi(const GroupElement& x) noexcept { return phi(psi(x)); }

OrbitClass orbit(const GroupElement& x) {
  static const std::array<GroupElement, 4> conjugators = {
      letter_value(letters::a), letter_value(letters::b), letter_value(letters::A), letter_value(letters::B)};

  OrbitClass out;
  std::deque<GroupElement> queue{x};
  out.members.insert(x);
  while (!queue.empty()) {
    const GroupElement g = queue.front();
    queue.pop_front();
    auto visit = [&](const GroupElement& h) {
      if (out.members.insert(h).second) queue.push_back(h);
    };
    for (const auto& h : conjugators) visit(conjugate(g, h));
    visit(phi(g));
    visit(psi(g));
  }
  out.canonical = *out.members.begin();
  return out;
}

std::set<GroupElement> closure(std::span<const GroupElement> generators) {
  std::set<GroupElement> seen{GroupElement::identity()};
  std::deque<GroupElement> queue{GroupElement::identity()};
  while (!queue.empty()) {
    const GroupElement g = queue.front();
    queue.pop_front();
    for (const auto& h : generators) {
      const GroupElement gh = g * h;
      if (seen.insert(gh).second) queue.push_back(gh);
    }
  }
  return seen;
}

std::set<GroupElement> enumerate_group() {
  const std::array<GroupElement, 4> gens = {
      letter_value(letters::a), letter_value(letters::b), letter_value(letters::A), letter_value(letters::B)};
  return closure(gens);
}

std::string to_string(const GroupElement& x) {
  std::string out = "(r^";
  out += std::to_string(x.lower.rot);
  out += " s^";
  out += x.lower.ref ? '1' : '0';
  out += " | R^";
  out += std::to_string(x.upper.rot);
  out += " S^";
  out += x.upper.ref ? '1' : '0';
  out += ')';
  return out;
}

GroupElement group_element_from_string(const std::string& s) {
  static const std::regex re(R"(\(r\^([0-3]) s\^([01]) \| R\^([0-3]) S\^([01])\))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("not a group element: " + s);
  auto digit = [&](int i) { return static_cast<std::uint8_t>(m[i].str()[0] - '0'); };
  return {{digit(1), digit(2) == 1}, {digit(3), digit(4) == 1}};
}

std::string to_string(Letter l) {
  static constexpr char names[] = {'a', 'b', 'A', 'B'};
  std::string out(1, names[static_cast<int>(l.base)]);
  if (l.prime) out += '\'';
  return out;
}

std::string word_to_string(std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

}  // namespace twopar
