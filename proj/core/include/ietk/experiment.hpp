#ifndef IETK_EXPERIMENT_HPP
#define IETK_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ietk/json_io.hpp"
#include "ietk/rng.hpp"
#include "ietk/targets.hpp"

namespace ietk {

/// Spec for drawing the trial IETs instead of giving one explicitly.
struct SamplerSpec {
  int d = 2;
  long q = 2;
  std::uint64_t seed = 0;
  int count = 1;
};

/// One experiment, parsed from a JSON config file.  `kind` selects the
/// driver; kind-specific knobs stay in `params` and are read by the driver.
/// Identical configs produce byte-identical CSV.
struct ExperimentConfig {
  std::string kind;
  std::optional<Iet> iet;
  std::optional<SamplerSpec> sampler;
  std::optional<TargetSequence> sequence;
  std::vector<std::pair<long, long>> schedule;  // (N, M) checkpoints
  Metric metric = Metric::Interval;
  ExactNumber x;
  Json params = Json::object();
  Json echo = Json::object();  // the raw config, echoed into the summary

  static ExperimentConfig from_json(const Json& j);
  static ExperimentConfig from_file(const std::string& path);
};

struct ExperimentOutcome {
  std::string csv;
  Json summary;
  bool checks_passed = true;  // embedded theorem-checkers
};

/// Runs the experiment in memory.  Throws InvalidParamsError/ParseError for
/// bad configs; per-trial runtime errors are recorded in the rows instead.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

/// Writes <out_dir>/results.csv and <out_dir>/summary.json.
void write_outcome(const ExperimentOutcome& outcome, const std::string& out_dir);

/// One random precondition-satisfying instance of the separation bound on
/// the line (points pairwise e/n apart, S a union of t intervals,
/// delta < e/(2n)), checked.  Shared by the stats driver and the tests.
SeparatedReport random_separated_trial(SplitMix64& rng);

/// Same for the orbit-preimage variant, with a random rational rotation
/// supplying the dynamics.
SeparatedReport random_preimage_trial(SplitMix64& rng);

/// CSV cell pair for an exact value: numerator part and denominator, chosen
/// so that parse(num + "/" + den) recovers the value exactly.
std::string csv_num(const ExactNumber& x);
std::string csv_den(const ExactNumber& x);
/// Fixed-format approximate decimal (display convenience only).
std::string csv_approx(const ExactNumber& x);

}  // namespace ietk

#endif
