// Acceptance checks A1..A9. One PASS/FAIL line per criterion; exit status is
// nonzero if any criterion fails or runs over its time limit.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "relations.hpp"
#include "twopar/cli.hpp"
#include "twopar/coxeter.hpp"
#include "twopar/fuzz.hpp"
#include "twopar/invariant.hpp"
#include "twopar/moves.hpp"
#include "twopar/random.hpp"

using namespace twopar;
using namespace twopar::letters;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& o) : o_(o) {}
  void expect(bool cond, const std::string& what) {
    if (!cond && o_.ok) o_.detail = what;
    o_.ok = o_.ok && cond;
  }
  void note(const std::string& s) {
    if (o_.ok) o_.detail = s;
  }

 private:
  Outcome& o_;
};

int failures = 0;

void criterion(const char* id, double limit_s, const std::function<void(Checker&)>& body) {
  Outcome o;
  Checker c(o);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > limit_s) {
    o.ok = false;
    o.detail = "over the time limit";
  }
  failures += !o.ok;
  std::printf("%s %s %.3fs (limit %gs) %s\n", id, o.ok ? "PASS" : "FAIL", secs, limit_s, o.detail.c_str());
  std::fflush(stdout);
}

GroupElement val(std::initializer_list<Letter> w) { return evaluate_word(std::vector<Letter>(w)); }

std::size_t count(const FuzzReport& r, MoveKind k) { return r.move_counts[static_cast<std::size_t>(k)]; }

std::string fuzz_summary(const FuzzReport& r) {
  std::ostringstream s;
  s << r.config.trials << " trials, failures=" << r.failures << ", R1Add=" << count(r, MoveKind::R1Add)
    << " R1Remove=" << count(r, MoveKind::R1Remove) << " R2Add=" << count(r, MoveKind::R2Add)
    << " R2Remove=" << count(r, MoveKind::R2Remove) << " R3=" << count(r, MoveKind::R3)
    << " Rotate=" << count(r, MoveKind::Rotate);
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    s << "; first: trial " << f.trial << " " << f.property << " on " << f.diagram << " by " << f.move << " expected "
      << f.expected << " got " << f.actual;
  }
  return s.str();
}

void check_fuzz(Checker& c, const FuzzReport& r, bool closed) {
  c.expect(r.failures == 0, fuzz_summary(r));
  c.expect(count(r, MoveKind::R3) > 0, "no R3 moves exercised");
  if (closed) c.expect(count(r, MoveKind::Rotate) > 0, "no rotations exercised");
}

}  // namespace

int main() {
  criterion("A1", 1.0, [](Checker& c) {
    c.expect(enumerate_group().size() == 64, "closure of {a,b,A,B} is not 64");
    const std::vector<GroupElement> small = {letter_value(a), letter_value(b)};
    const std::vector<GroupElement> big = {letter_value(A), letter_value(B)};
    c.expect(closure(small).size() == 8, "closure of {a,b} is not 8");
    c.expect(closure(big).size() == 8, "closure of {A,B} is not 8");
    const GroupElement e = GroupElement::identity();
    c.expect(val({a, a}) == e && val({b, b}) == e && val({a, b, a, b, a, b, a, b}) == e, "lower Coxeter relations");
    c.expect(val({A, A}) == e && val({B, B}) == e && val({A, B, A, B, A, B, A, B}) == e, "upper Coxeter relations");
    c.expect(val({a, b, a, b}) != e, "(ab)^2 is trivial");
    c.expect(val({A, B, A, B}) != e, "(AB)^2 is trivial");
    c.expect(letter_value(a_p) == val({b, a, b}) && letter_value(a_p) != letter_value(a), "a' = bab != a");
    c.note("|<a,b>|=8, |D|=64");
  });

  criterion("A2", 1.0, [](Checker& c) {
    const auto rels = testing::displayed_relations();
    for (const auto& r : rels) {
      c.expect(evaluate_word(r.lhs) == evaluate_word(r.rhs),
               r.family + ": " + word_to_string(r.lhs) + " = " + word_to_string(r.rhs));
    }
    c.note(std::to_string(rels.size()) + " relations");
  });

  criterion("A3", 30.0, [](Checker& c) {
    FuzzConfig single;
    single.trials = 10000;
    single.max_chords = 12;
    single.seed = 20261019;
    const FuzzReport one = run_fuzz_parallel(single);
    check_fuzz(c, one, false);

    FuzzConfig seq = single;
    seq.trials = 1000;
    seq.max_length = 20;
    seq.seed = 20261020;
    const FuzzReport many = run_fuzz_parallel(seq);
    check_fuzz(c, many, false);
    c.note(fuzz_summary(one) + " | " + fuzz_summary(many));
  });

  criterion("A4", 10.0, [](Checker& c) {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const GaussDiagram d = random_diagram(derive_seed(404, i), 12, DiagramKind::Long, true);
      c.expect(parity_profile(d).c_even, "generator produced a c-odd diagram");
      c.expect(w(d) == w_after(d), "w != w_after on " + serialize(d));
    }
    const GaussDiagram witness = parse("long U1:a U2:c O1:a O2:c");
    c.expect(w(witness) == val({a_p, A}), "w(witness) != a'A");
    c.expect(w_after(witness) == val({a, A_p}), "w_after(witness) != aA'");
    c.expect(w(witness) != w_after(witness), "witness does not separate w and w_after");
    c.note("2000 c-even diagrams; witness w=" + to_string(w(witness)) + " w_after=" + to_string(w_after(witness)));
  });

  criterion("A5", 10.0, [](Checker& c) {
    std::size_t done = 0, by_kind[4] = {};
    for (std::uint64_t i = 0; done < 1000; ++i) {
      const GaussDiagram d = random_diagram(derive_seed(505, i), 12, DiagramKind::Closed, true);
      if (d.empty()) continue;
      ++done;
      const GroupElement before = w(d);
      const auto [rotated, effect] = rotate_basepoint(d);
      const GroupElement after = w(rotated);
      ++by_kind[static_cast<int>(effect.kind)];
      const std::string where = serialize(d) + " (" + to_string(effect) + ")";
      switch (effect.kind) {
        case RotationEffectKind::Unchanged:
          c.expect(after == before, "not unchanged: " + where);
          break;
        case RotationEffectKind::ApplyPhi:
          c.expect(after == phi(before), "not phi: " + where);
          break;
        case RotationEffectKind::ApplyPsi:
          c.expect(after == psi(before), "not psi: " + where);
          break;
        case RotationEffectKind::ConjugateBy: {
          bool conjugate_found = false;
          for (const auto& h : enumerate_group()) conjugate_found = conjugate_found || conjugate(before, h) == after;
          c.expect(conjugate_found, "not a conjugate: " + where);
          c.expect(after == predicted_w(effect, before), "not conjugate by the moved letter: " + where);
          break;
        }
      }
      c.expect(compact_invariant(rotated) == compact_invariant(d), "orbit changed: " + where);
    }
    for (std::size_t k : by_kind) c.expect(k > 0, "a rotation kind was never exercised");
    c.note("1000 rotations: unchanged=" + std::to_string(by_kind[0]) + " phi=" + std::to_string(by_kind[1]) +
           " psi=" + std::to_string(by_kind[2]) + " conjugate=" + std::to_string(by_kind[3]));
  });

  criterion("A6", 30.0, [](Checker& c) {
    FuzzConfig cfg;
    cfg.trials = 1000;
    cfg.max_chords = 12;
    cfg.kind = DiagramKind::Closed;
    cfg.c_even = true;
    cfg.max_length = 20;
    cfg.seed = 606;
    const FuzzReport r = run_fuzz_parallel(cfg);
    check_fuzz(c, r, true);
    c.note(fuzz_summary(r));
  });

  criterion("A7", 1.0, [](Checker& c) {
    const GaussDiagram d = parse("long U1:a O2:b U3:c O1:a U2:b O3:c");
    const PairTriple t{0, 2, 4};
    const auto r3 = check_move(d, R3{t});
    c.expect(r3 && r3->error == MoveError::RolePattern, "accepted as R3");
    c.expect(!check_move(d, Delta{t}), "rejected as Delta");
    const GroupElement before = w(d);
    const GroupElement after = w(apply_move(d, Delta{t}));
    c.expect(before == group_element_from_string("(r^3 s^0 | R^3 S^0)"), "w before is " + to_string(before));
    c.expect(after == group_element_from_string("(r^1 s^0 | R^1 S^0)"), "w after is " + to_string(after));
    c.expect(before != after, "Delta preserved w");
    c.note(to_string(before) + " -> " + to_string(after));
  });

  criterion("A8", 1.0, [](Checker& c) {
    const GroupElement x = w(parse("long U1:a U2:b O1:a O2:b"));
    c.expect(x == val({a, b, A, B}), "w is not abAB");
    c.expect(x != GroupElement::identity(), "abAB is trivial");
    const std::vector<std::string> args = {"twopar", "equal", "-c", "long U1:a U2:b O1:a O2:b", "-c", "long"};
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    c.expect(code == cli::kExitDistinguished, "equal exited " + std::to_string(code));
    c.note("w=" + to_string(x) + ", equal exit " + std::to_string(code));
  });

  criterion("A9", 60.0, [](Checker& c) {
    const auto& g = oracle::group();
    std::atomic<std::size_t> checked{0}, mismatches{0};
    std::string first_bad;
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto matchings = oracle::all_matchings(n);
      const std::uint32_t masks = 1U << n;
      const std::uint32_t codes = 1U << (2 * n);
      const long total = static_cast<long>(matchings.size() * masks);
#pragma omp parallel for schedule(dynamic, 4)
      for (long job = 0; job < total; ++job) {
        const auto& m = matchings[static_cast<std::size_t>(job) / masks];
        const std::uint32_t mask = static_cast<std::uint32_t>(job) % masks;
        for (std::uint32_t code = 0; code < codes; ++code) {
          for (DiagramKind kind : {DiagramKind::Long, DiagramKind::Closed}) {
            const GaussDiagram d = oracle::diagram_from(m, mask, code, kind);
            bool ok = true;
            for (bool after : {false, true}) {
              const auto naive = oracle::naive_letters(d, after);
              const auto lw = assign_letters(d, after ? CountMode::After : CountMode::Before).letters;
              ok = ok && naive == lw && g.to_library(g.evaluate(naive)) == evaluate_word(lw);
            }
            checked.fetch_add(1, std::memory_order_relaxed);
            if (!ok && mismatches.fetch_add(1) == 0) {
#pragma omp critical
              first_bad = serialize(d);
            }
          }
        }
      }
    }
    c.expect(mismatches == 0, std::to_string(mismatches.load()) + " mismatches, first " + first_bad);
    c.note(std::to_string(checked.load()) + " diagrams (long and closed, both count modes)");
  });

  return failures == 0 ? 0 : 1;
}
