#include "twopar/indexing.hpp"

#include <cctype>
#include <charconv>

namespace twopar {

std::size_t expected_arc_count(const GaussDiagram& d) noexcept {
  return d.endpoints.size() + (d.kind == DiagramKind::Long ? 1 : 0);
}

GaussDiagram derive_indices(const WindingDecoratedDiagram& w) {
  const GaussDiagram& base = w.base;
  if (w.arcs.size() != expected_arc_count(base)) {
    throw WindingMismatch("expected " + std::to_string(expected_arc_count(base)) + " arc windings, got " +
                          std::to_string(w.arcs.size()));
  }
  // Indices may be placeholders; only the endpoint structure has to be sound.
  GaussDiagram out = base;
  out.indices.clear();
  for (const auto& e : base.endpoints) out.indices[e.chord] = ChordIndex::Trivial;
  require_valid(out);

  const std::size_t n = base.endpoints.size();
  for (const auto& [chord, pos] : chord_positions(base)) {
    Winding sum;
    auto add = [&](std::size_t arc) {
      sum.p += w.arcs[arc].p;
      sum.q += w.arcs[arc].q;
    };
    if (base.kind == DiagramKind::Closed) {
      for (std::size_t k = pos.under; k != pos.over; k = (k + 1) % n) add(k);
    } else {
      const auto [lo, hi] = std::minmax(pos.under, pos.over);
      for (std::size_t k = lo; k < hi; ++k) add(k + 1);
    }
    out.indices[chord] = index_from_parities(sum.p % 2 != 0, sum.q % 2 != 0);
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool at_bracket() {
    skip_ws();
    return i_ < s_.size() && s_[i_] == '[';
  }
  std::size_t offset() const noexcept { return i_; }

  std::string_view word() {
    skip_ws();
    std::size_t j = i_;
    while (j < s_.size() && !std::isspace(static_cast<unsigned char>(s_[j])) && s_[j] != '[') ++j;
    auto out = s_.substr(i_, j - i_);
    i_ = j;
    return out;
  }

  Winding bracket() {
    skip_ws();
    const std::size_t start = i_;
    ++i_;  // '['
    Winding w;
    w.p = integer(start);
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != ',') throw ParseError(i_, "expected ',' inside winding");
    ++i_;
    w.q = integer(start);
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != ']') throw ParseError(i_, "expected ']' closing winding");
    ++i_;
    return w;
  }

 private:
  std::int64_t integer(std::size_t bracket_start) {
    skip_ws();
    std::int64_t v = 0;
    const char* first = s_.data() + i_;
    auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
    if (ec != std::errc{}) throw ParseError(i_, "expected integer in winding opened at offset " +
                                                      std::to_string(bracket_start));
    i_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

WindingDecoratedDiagram parse_winding_diagram(std::string_view text) {
  Scanner sc(text);
  WindingDecoratedDiagram out;
  const std::size_t kind_off = sc.offset();
  auto kind = sc.word();
  if (kind == "long") {
    out.base.kind = DiagramKind::Long;
  } else if (kind == "closed") {
    out.base.kind = DiagramKind::Closed;
  } else {
    throw ParseError(kind_off, "expected 'long' or 'closed'");
  }

  // Re-use the Gauss-code token grammar by attaching a placeholder index.
  std::string gauss(kind);
  std::vector<std::pair<std::size_t, std::size_t>> token_origin;  // (offset in gauss, offset in text)
  bool expect_arc = out.base.kind == DiagramKind::Long;
  while (!sc.done()) {
    if (sc.at_bracket()) {
      if (!expect_arc) throw WindingMismatch("unexpected winding at offset " + std::to_string(sc.offset()));
      out.arcs.push_back(sc.bracket());
      expect_arc = false;
    } else {
      if (expect_arc) throw WindingMismatch("missing winding before offset " + std::to_string(sc.offset()));
      const std::size_t off = sc.offset();
      auto tok = sc.word();
      if (tok.find(':') != std::string_view::npos) throw ParseError(off, "winding-decorated tokens carry no index");
      gauss += ' ';
      token_origin.emplace_back(gauss.size(), off);
      gauss += tok;
      gauss += ":0";
      expect_arc = true;
    }
  }
  if (expect_arc) throw WindingMismatch("missing winding at end of input");
  try {
    out.base = parse(gauss);
  } catch (const ParseError& e) {
    std::size_t orig = 0;
    for (const auto& [g, o] : token_origin) {
      if (g <= e.offset()) orig = o;
    }
    throw ParseError(orig, e.detail());
  }
  return out;
}

}  // namespace twopar
