#include "twopar/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "twopar/coxeter.hpp"
#include "twopar/fuzz.hpp"
#include "twopar/gauss.hpp"
#include "twopar/indexing.hpp"
#include "twopar/invariant.hpp"
#include "twopar/moves.hpp"

namespace twopar::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

// Ordered key/value record. Text mode prints one `key: value` line per
// entry (arrays print one line per element); JSON mode prints the record as
// a single JSON object on one line.
class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }

  void add(const std::string& key, Json value) { fields_[key] = std::move(value); }

  void print(std::ostream& os, Format f) const {
    if (f == Format::Json) {
      os << fields_.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : fields_.items()) {
      if (value.is_array()) {
        for (const auto& v : value) os << key << ": " << scalar(v) << '\n';
      } else {
        os << key << ": " << scalar(value) << '\n';
      }
    }
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object()) {
      std::string s;
      for (const auto& [k, x] : v.items()) {
        if (!s.empty()) s += ' ';
        s += k + "=" + scalar(x);
      }
      return s;
    }
    return v.dump();
  }

  Json fields_ = Json::object();
};

Json parity_json(const ParityProfile& p) {
  return Json{{"a", p.count_a}, {"b", p.count_b}, {"c", p.count_c},
              {"a-even", p.a_even}, {"b-even", p.b_even}, {"c-even", p.c_even}};
}

struct Failure {
  int code;
  std::string message;
};

std::string slurp(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Inline codes come first, then files; "-" reads standard input.
std::vector<std::string> read_inputs(const std::vector<std::string>& codes, const std::vector<std::string>& files,
                                     std::istream& in) {
  std::vector<std::string> out = codes;
  for (const auto& f : files) {
    if (f == "-") {
      out.push_back(slurp(in));
      continue;
    }
    std::ifstream fs(f);
    if (!fs) throw Failure{kExitUsage, "cannot open " + f};
    out.push_back(slurp(fs));
  }
  if (out.empty()) out.push_back(slurp(in));
  return out;
}

GaussDiagram parse_input(const std::string& text) {
  try {
    GaussDiagram d = parse(text);
    require_valid(d);
    return d;
  } catch (const ParseError& e) {
    throw Failure{kExitUsage, std::string("parse error ") + e.what()};
  } catch (const InvalidDiagram& e) {
    throw Failure{kExitUsage, e.what()};
  }
}

std::string trimmed(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Value compared by `equal` and printed by `invariant`: w for long diagrams,
// the orbit canonical form for closed c-even ones.
struct InvariantValue {
  std::string key;
  GroupElement value;
};

InvariantValue invariant_value(const GaussDiagram& d, CountMode mode) {
  if (d.kind == DiagramKind::Long) return {mode == CountMode::Before ? "w" : "w-after", mode == CountMode::Before ? w(d) : w_after(d)};
  try {
    return {"orbit", compact_invariant(d).canonical};
  } catch (const InvariantUndefined& e) {
    throw Failure{kExitUsage, e.what()};
  }
}

int cmd_invariant(const std::string& input, bool after, Format fmt, std::ostream& out) {
  Report r("invariant");
  const GaussDiagram d = parse_input(input);
  const ParityProfile prof = parity_profile(d);
  r.add("diagram", serialize(d));
  r.add("mode", after ? "after" : "before");
  r.add("word", word_to_string(assign_letters(d, after ? CountMode::After : CountMode::Before).letters));
  r.add("parity", parity_json(prof));
  try {
    const InvariantValue v = invariant_value(d, after ? CountMode::After : CountMode::Before);
    r.add(v.key, to_string(v.value));
    if (v.key == "orbit") r.add("orbit-size", orbit(v.value).members.size());
    r.add("status", kExitOk);
    r.print(out, fmt);
    return kExitOk;
  } catch (const Failure& f) {
    r.add("error", f.message);
    r.add("status", f.code);
    r.print(out, fmt);
    throw Failure{f.code, ""};
  }
}

int cmd_equal(const std::string& lhs, const std::string& rhs, Format fmt, std::ostream& out) {
  Report r("equal");
  const GaussDiagram a = parse_input(lhs);
  const GaussDiagram b = parse_input(rhs);
  r.add("diagram", Json::array({serialize(a), serialize(b)}));
  if (a.kind != b.kind) throw Failure{kExitUsage, "cannot compare a long diagram with a closed one"};
  const InvariantValue va = invariant_value(a, CountMode::Before);
  const InvariantValue vb = invariant_value(b, CountMode::Before);
  r.add(va.key, Json::array({to_string(va.value), to_string(vb.value)}));
  const bool same = va.value == vb.value;
  r.add("result", same ? "equal-invariant" : "distinguished");
  const int code = same ? kExitOk : kExitDistinguished;
  r.add("status", code);
  r.print(out, fmt);
  return code;
}

int cmd_moves(const std::string& input, const std::optional<std::string>& apply, bool strict, Format fmt,
              std::ostream& out) {
  Report r("moves");
  const GaussDiagram d = parse_input(input);
  r.add("diagram", serialize(d));
  MoveOptions opts;
  opts.strict_signs = strict;

  if (!apply) {
    Json list = Json::array();
    for (const auto& m : applicable_moves(d, opts)) list.push_back(to_string(m));
    r.add("count", list.size());
    r.add("move", list);
    r.add("status", kExitOk);
    r.print(out, fmt);
    return kExitOk;
  }

  Move m;
  try {
    m = parse_move(*apply);
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
  r.add("applied", to_string(m));
  if (auto v = check_move(d, m, opts)) {
    r.add("error", v->message);
    r.add("status", kExitUsage);
    r.print(out, fmt);
    throw Failure{kExitUsage, ""};
  }
  const GaussDiagram next = apply_move(d, m, opts);
  r.add("result", serialize(next));
  r.add("w-old", to_string(w(d)));
  r.add("w-new", to_string(w(next)));
  if (kind_of(m) == MoveKind::Rotate) r.add("effect", to_string(rotate_basepoint(d).second));
  r.add("status", kExitOk);
  r.print(out, fmt);
  return kExitOk;
}

int cmd_fuzz(const FuzzConfig& config, int threads, Format fmt, std::ostream& out) {
  Report r("fuzz");
  const FuzzReport rep = run_fuzz_parallel(config, threads);
  r.add("seed", config.seed);
  r.add("kind", std::string(to_string(config.kind)));
  r.add("c-even", config.c_even);
  r.add("max-chords", config.max_chords);
  r.add("max-length", config.max_length);
  r.add("trials", config.trials);
  r.add("failures", rep.failures);
  Json counts = Json::object();
  for (std::size_t k = 0; k < kMoveKindCount; ++k) {
    counts[std::string(to_string(static_cast<MoveKind>(k)))] = rep.move_counts[k];
  }
  r.add("moves", counts);
  if (rep.first_failure) {
    const Counterexample& c = *rep.first_failure;
    r.add("counterexample", Json{{"trial", c.trial},
                                 {"trial-seed", c.trial_seed},
                                 {"property", c.property},
                                 {"diagram", c.diagram},
                                 {"move", c.move},
                                 {"expected", c.expected},
                                 {"actual", c.actual}});
  }
  const int code = rep.failures == 0 ? kExitOk : kExitDistinguished;
  r.add("status", code);
  r.print(out, fmt);
  return code;
}

int cmd_derive(const std::string& input, Format fmt, std::ostream& out) {
  Report r("derive");
  GaussDiagram d;
  try {
    d = derive_indices(parse_winding_diagram(input));
  } catch (const ParseError& e) {
    throw Failure{kExitUsage, std::string("parse error ") + e.what()};
  } catch (const std::invalid_argument& e) {  // WindingMismatch, InvalidDiagram
    throw Failure{kExitUsage, e.what()};
  }
  r.add("input", trimmed(input));
  r.add("gauss", serialize(d));
  r.add("status", kExitOk);
  r.print(out, fmt);
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-valued invariant of virtual knots with two parities"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> codes;
  std::vector<std::string> files;
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("-c,--code", codes, "Gauss code given inline (repeatable)");
    sub->add_option("files", files, "Input files; '-' or nothing reads standard input");
  };

  auto* inv = app.add_subcommand("invariant", "Compute w (or w_after); orbit class for closed c-even diagrams");
  bool after = false;
  inv->add_flag("--after", after, "Count c-chord ends after the opposite endpoint");
  add_inputs(inv);

  auto* eq = app.add_subcommand("equal", "Compare the invariants of two diagrams");
  add_inputs(eq);

  auto* mv = app.add_subcommand("moves", "List applicable moves or apply one");
  std::optional<std::string> apply;
  bool strict = false;
  mv->add_option("--apply", apply, "Move in text form, e.g. 'R3 @(1,2)(3,4)(5,6)'");
  mv->add_flag("--strict", strict, "Require signs; R2 chords must have opposite signs");
  add_inputs(mv);

  auto* fz = app.add_subcommand("fuzz", "Randomized invariance checks");
  FuzzConfig config;
  std::string kind = "long";
  int threads = 0;
  fz->add_option("--trials", config.trials)->check(CLI::NonNegativeNumber);
  fz->add_option("--max-chords", config.max_chords)->check(CLI::NonNegativeNumber);
  fz->add_option("--seed", config.seed, "Master seed (printed in the report)");
  fz->add_option("--kind", kind)->check(CLI::IsMember({"long", "closed"}));
  fz->add_flag("--c-even", config.c_even, "Generate c-even diagrams only");
  fz->add_option("--max-length", config.max_length, "Moves per trial are drawn from 1..max-length")
      ->check(CLI::PositiveNumber);
  fz->add_option("--threads", threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

  auto* dv = app.add_subcommand("derive", "Indices from arc windings on the torus");
  add_inputs(dv);

  for (auto* sub : {inv, eq, mv, fz, dv}) sub->fallthrough();

  std::vector<std::string> argv_rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rev.begin(), argv_rev.end());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Format fmt = format == "json" ? Format::Json : Format::Text;

  try {
    if (*inv) return cmd_invariant(read_inputs(codes, files, in).front(), after, fmt, out);
    if (*eq) {
      const auto inputs = read_inputs(codes, files, in);
      if (inputs.size() != 2) throw Failure{kExitUsage, "equal needs exactly two diagrams"};
      return cmd_equal(inputs[0], inputs[1], fmt, out);
    }
    if (*mv) return cmd_moves(read_inputs(codes, files, in).front(), apply, strict, fmt, out);
    if (*fz) {
      config.kind = kind == "closed" ? DiagramKind::Closed : DiagramKind::Long;
      return cmd_fuzz(config, threads, fmt, out);
    }
    if (*dv) return cmd_derive(read_inputs(codes, files, in).front(), fmt, out);
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}

}  // namespace twopar::cli
