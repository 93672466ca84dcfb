#include "twopar/gauss.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace twopar {

std::string_view to_string(DiagramKind k) noexcept { return k == DiagramKind::Long ? "long" : "closed"; }

char role_char(Role r) noexcept { return r == Role::Over ? 'O' : 'U'; }

std::string_view to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::ZeroChordId: return "zero-chord-id";
    case ViolationKind::DuplicateRole: return "duplicate-role";
    case ViolationKind::OddOccurrence: return "odd-occurrence";
    case ViolationKind::MissingIndex: return "missing-index";
    case ViolationKind::StrayIndex: return "stray-index";
    case ViolationKind::MissingSign: return "missing-sign";
    case ViolationKind::StraySign: return "stray-sign";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " on chord " << chord;
  return os.str();
}

std::vector<Violation> validate(const GaussDiagram& d) {
  struct Tally {
    int over = 0;
    int under = 0;
  };
  std::map<ChordId, Tally> tally;
  for (const auto& e : d.endpoints) {
    auto& t = tally[e.chord];
    (e.role == Role::Over ? t.over : t.under) += 1;
  }

  std::vector<Violation> out;
  for (const auto& [chord, t] : tally) {
    if (chord == 0) out.push_back({ViolationKind::ZeroChordId, chord});
    if (t.over > 1 || t.under > 1) out.push_back({ViolationKind::DuplicateRole, chord});
    if (t.over + t.under != 2) out.push_back({ViolationKind::OddOccurrence, chord});
    if (!d.indices.contains(chord)) out.push_back({ViolationKind::MissingIndex, chord});
    if (d.signs && !d.signs->contains(chord)) out.push_back({ViolationKind::MissingSign, chord});
  }
  for (const auto& [chord, idx] : d.indices) {
    if (!tally.contains(chord)) out.push_back({ViolationKind::StrayIndex, chord});
  }
  if (d.signs) {
    for (const auto& [chord, s] : *d.signs) {
      if (!tally.contains(chord)) out.push_back({ViolationKind::StraySign, chord});
    }
  }
  return out;
}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::string msg = "invalid Gauss diagram:";
  for (const auto& v : vs) {
    msg += ' ';
    msg += v.describe();
    msg += ';';
  }
  return msg;
}

}  // namespace

InvalidDiagram::InvalidDiagram(std::vector<Violation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

void require_valid(const GaussDiagram& d) {
  auto vs = validate(d);
  if (!vs.empty()) throw InvalidDiagram(std::move(vs));
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + what), offset_(offset), detail_(what) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_ws(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back({s.substr(i, j - i), i});
    i = j;
  }
  return out;
}

struct ChordToken {
  Role role;
  ChordId id;
  std::optional<Sign> sign;
  ChordIndex index;
};

ChordToken parse_token(const Token& tok) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError(tok.offset, "bad token '" + std::string(tok.text) + "': " + why);
  };
  std::string_view t = tok.text;
  if (t.empty() || (t[0] != 'O' && t[0] != 'U')) throw fail("expected role O or U");
  ChordToken out{};
  out.role = t[0] == 'O' ? Role::Over : Role::Under;
  t.remove_prefix(1);

  if (t.empty() || t[0] < '1' || t[0] > '9') throw fail("expected chord id [1-9][0-9]*");
  std::size_t digits = 0;
  while (digits < t.size() && std::isdigit(static_cast<unsigned char>(t[digits]))) ++digits;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + digits, out.id);
  if (ec != std::errc{}) throw fail("chord id out of range");
  t.remove_prefix(digits);

  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    out.sign = t[0] == '+' ? Sign::Plus : Sign::Minus;
    t.remove_prefix(1);
  }
  if (t.size() != 2 || t[0] != ':') throw fail("expected ':' followed by index 0, a, b or c");
  auto idx = index_from_char(t[1]);
  if (!idx) throw fail("index must be 0, a, b or c");
  out.index = *idx;
  return out;
}

}  // namespace

GaussDiagram parse(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError(0, "empty input; expected 'long' or 'closed'");

  GaussDiagram d;
  if (tokens[0].text == "long") {
    d.kind = DiagramKind::Long;
  } else if (tokens[0].text == "closed") {
    d.kind = DiagramKind::Closed;
  } else {
    throw ParseError(tokens[0].offset, "expected 'long' or 'closed', got '" + std::string(tokens[0].text) + "'");
  }

  struct Seen {
    ChordToken first;
    std::size_t first_offset;
    int count = 0;
  };
  std::map<ChordId, Seen> seen;
  std::map<ChordId, Sign> signs;
  std::optional<bool> signed_mode;

  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const auto& tok = tokens[k];
    ChordToken ct = parse_token(tok);
    const bool has_sign = ct.sign.has_value();
    if (!signed_mode) signed_mode = has_sign;
    if (*signed_mode != has_sign) {
      throw ParseError(tok.offset, "signs must be given on every token or on none");
    }

    auto [it, fresh] = seen.try_emplace(ct.id, Seen{ct, tok.offset, 0});
    Seen& s = it->second;
    if (!fresh) {
      if (s.count >= 2) throw ParseError(tok.offset, "chord " + std::to_string(ct.id) + " appears more than twice");
      if (s.first.role == ct.role) {
        throw ParseError(tok.offset, "duplicate role: chord " + std::to_string(ct.id) + " has two " +
                                         (ct.role == Role::Over ? "Over" : "Under") + " endpoints");
      }
      if (s.first.index != ct.index) {
        throw ParseError(tok.offset, "index mismatch on chord " + std::to_string(ct.id));
      }
      if (s.first.sign != ct.sign) {
        throw ParseError(tok.offset, "sign mismatch on chord " + std::to_string(ct.id));
      }
    }
    ++s.count;
    d.endpoints.push_back({ct.id, ct.role});
    d.indices[ct.id] = ct.index;
    if (ct.sign) signs[ct.id] = *ct.sign;
  }

  for (const auto& [id, s] : seen) {
    if (s.count != 2) {
      throw ParseError(s.first_offset, "odd occurrence count: chord " + std::to_string(id) + " appears once");
    }
  }
  if (signed_mode.value_or(false)) d.signs = std::move(signs);
  return d;
}

std::string serialize(const GaussDiagram& d) {
  std::string out(to_string(d.kind));
  for (const auto& e : d.endpoints) {
    out += ' ';
    out += role_char(e.role);
    out += std::to_string(e.chord);
    if (d.signs) out += d.signs->at(e.chord) == Sign::Plus ? '+' : '-';
    out += ':';
    out += index_char(d.indices.at(e.chord));
  }
  return out;
}

GaussDiagram normalize(const GaussDiagram& d) {
  std::map<ChordId, ChordId> relabel;
  for (const auto& e : d.endpoints) {
    relabel.try_emplace(e.chord, static_cast<ChordId>(relabel.size() + 1));
  }
  GaussDiagram out;
  out.kind = d.kind;
  out.endpoints.reserve(d.endpoints.size());
  for (const auto& e : d.endpoints) out.endpoints.push_back({relabel.at(e.chord), e.role});
  for (const auto& [from, to] : relabel) {
    if (auto it = d.indices.find(from); it != d.indices.end()) out.indices[to] = it->second;
  }
  if (d.signs) {
    out.signs.emplace();
    for (const auto& [from, to] : relabel) {
      if (auto it = d.signs->find(from); it != d.signs->end()) (*out.signs)[to] = it->second;
    }
  }
  return out;
}

std::map<ChordId, ChordPositions> chord_positions(const GaussDiagram& d) {
  std::map<ChordId, ChordPositions> out;
  for (std::size_t p = 0; p < d.endpoints.size(); ++p) {
    const auto& e = d.endpoints[p];
    auto& cp = out[e.chord];
    (e.role == Role::Over ? cp.over : cp.under) = p;
  }
  return out;
}

}  // namespace twopar
