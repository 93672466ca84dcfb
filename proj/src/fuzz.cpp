#include "twopar/fuzz.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twopar/invariant.hpp"
#include "twopar/random.hpp"

namespace twopar {

TrialResult run_trial(const FuzzConfig& config, std::size_t trial) {
  TrialResult result;
  result.trial_seed = derive_seed(config.seed, trial);

  Counterexample cx;
  cx.trial = trial;
  cx.trial_seed = result.trial_seed;
  auto fail = [&](std::string property, const GaussDiagram& before, const Move* m, const std::string& expected,
                  const std::string& actual) {
    cx.property = std::move(property);
    cx.diagram = serialize(before);
    cx.move = m ? to_string(*m) : "";
    cx.expected = expected;
    cx.actual = actual;
    result.failure = cx;
  };

  try {
    const GaussDiagram start =
        random_diagram(result.trial_seed, config.max_chords, config.kind, config.c_even);
    const bool closed = config.kind == DiagramKind::Closed;

    auto twin_holds = [&](const GaussDiagram& d, const GaussDiagram& before, const Move* m) {
      if (!parity_profile(d).c_even) return true;
      const GroupElement x = w(d);
      const GroupElement y = w_after(d);
      if (x == y) return true;
      fail("w == w_after on c-even diagram", before, m, to_string(x), to_string(y));
      return false;
    };
    if (!twin_holds(start, start, nullptr)) return result;

    const bool track_orbit = closed && parity_profile(start).c_even;
    const GroupElement orbit0 = track_orbit ? compact_invariant(start).canonical : GroupElement{};

    Rng rng(derive_seed(result.trial_seed, 0x5eed));
    const std::size_t length = 1 + static_cast<std::size_t>(rng.below(std::max<std::size_t>(config.max_length, 1)));
    SequenceOptions seq;
    seq.max_chords = config.max_chords + 8;
    seq.rotations = closed;
    const auto steps = random_move_sequence(start, rng.below(~std::uint64_t{0}), length, seq);

    GaussDiagram prev = start;
    GroupElement w_prev = w(prev);
    for (const auto& step : steps) {
      ++result.move_counts[static_cast<std::size_t>(kind_of(step.move))];
      const GaussDiagram& next = step.result;
      const GroupElement w_next = w(next);

      GroupElement expected = w_prev;
      std::string property = "isotopy move preserves w";
      if (kind_of(step.move) == MoveKind::Rotate) {
        const RotationEffect effect = rotate_basepoint(prev).second;
        expected = predicted_w(effect, w_prev);
        property = "rotation acts on w as " + to_string(effect);
      }
      if (w_next != expected) {
        fail(property, prev, &step.move, to_string(expected), to_string(w_next));
        return result;
      }
      if (!twin_holds(next, prev, &step.move)) return result;
      if (track_orbit) {
        const GroupElement canon = compact_invariant(next).canonical;
        if (canon != orbit0) {
          fail("compact invariant unchanged", prev, &step.move, to_string(orbit0), to_string(canon));
          return result;
        }
      }
      prev = next;
      w_prev = w_next;
    }
  } catch (const std::exception& e) {
    cx.property = std::string("exception: ") + e.what();
    result.failure = cx;
  }
  return result;
}

namespace {

FuzzReport summarize(const FuzzConfig& config, const std::vector<TrialResult>& results) {
  FuzzReport report;
  report.config = config;
  for (const auto& r : results) {
    for (std::size_t k = 0; k < kMoveKindCount; ++k) report.move_counts[k] += r.move_counts[k];
    if (r.failure) {
      ++report.failures;
      if (!report.first_failure) report.first_failure = r.failure;
      report.failed.push_back(*r.failure);
    }
  }
  return report;
}

}  // namespace

FuzzReport run_fuzz_serial(const FuzzConfig& config) {
  std::vector<TrialResult> results(config.trials);
  for (std::size_t i = 0; i < config.trials; ++i) results[i] = run_trial(config, i);
  return summarize(config, results);
}

FuzzReport run_fuzz_parallel(const FuzzConfig& config, int threads) {
  std::vector<TrialResult> results(config.trials);
  const auto n = static_cast<std::int64_t>(config.trials);
#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    results[static_cast<std::size_t>(i)] = run_trial(config, static_cast<std::size_t>(i));
  }
  (void)threads;
  return summarize(config, results);
}

}  // namespace twopar
