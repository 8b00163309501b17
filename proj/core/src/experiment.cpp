#include "ietk/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ietk/errors.hpp"
#include "ietk/rauzy.hpp"
#include "ietk/rigidity.hpp"
#include "ietk/rotations.hpp"
#include "ietk/sampling.hpp"

namespace ietk {

namespace {

Metric metric_from(const std::string& name) {
  if (name == "interval") return Metric::Interval;
  if (name == "circle") return Metric::Circle;
  throw ParseError("metric must be 'interval' or 'circle'");
}

std::vector<Iet> trial_iets(const ExperimentConfig& c) {
  std::vector<Iet> out;
  if (c.iet) {
    out.push_back(*c.iet);
    return out;
  }
  if (!c.sampler) throw InvalidParamsError("config needs 'iet' or 'sampler'");
  SplitMix64 rng(c.sampler->seed);
  for (int i = 0; i < c.sampler->count; ++i)
    out.push_back(sample_random_iet(c.sampler->d, c.sampler->q, rng));
  return out;
}

std::string perm_str(const Permutation& pi) {
  std::string s;
  for (int j = 1; j <= pi.size(); ++j) {
    if (j > 1) s += ' ';
    s += std::to_string(pi(j));
  }
  return s;
}

/// Column-sum = return-time identity, discharged by direct first-return
/// iteration; skipped (treated as passing) when the tower is too tall.
bool column_sums_match_return_times(const Iet& t, const RvRecord& rec) {
  const Int cap = rec.matrix.max_column_sum();
  if (cap > 50000) return true;
  const long cap_l = cap.convert_to<long>() + 1;
  ExactNumber lo(0);
  for (int j = 1; j <= t.d(); ++j) {
    const ExactNumber len = rec.induced.lengths()[j - 1];
    ExactNumber p = lo + len / ExactNumber(2);
    long steps = 0;
    do {
      p = t.apply(p);
      ++steps;
    } while (p >= rec.interval_length && steps <= cap_l);
    if (Int(steps) != rec.matrix.column_sum(j)) return false;
    lo += len;
  }
  return true;
}

struct CsvBuilder {
  std::ostringstream out;
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  }
};

ExperimentOutcome run_target_measure(const ExperimentConfig& c) {
  if (!c.sequence) throw InvalidParamsError("target-measure needs a sequence");
  const int grid = c.params.value("grid", 64);
  CsvBuilder csv;
  csv.row({"trial", "checkpoint_N", "checkpoint_M", "measure_num",
           "measure_den", "measure_approx", "hit_fraction"});
  bool monotone = true;
  const auto iets = trial_iets(c);
  for (std::size_t ti = 0; ti < iets.size(); ++ti) {
    ExperimentResult res =
        limsup_profile(iets[ti], c.x, *c.sequence, c.schedule, grid, c.metric);
    for (std::size_t ri = 0; ri < res.rows.size(); ++ri) {
      const auto& row = res.rows[ri];
      if (ri > 0 && res.rows[ri - 1].n == row.n &&
          res.rows[ri - 1].m <= row.m && row.measure < res.rows[ri - 1].measure)
        monotone = false;
      csv.row({std::to_string(ti), std::to_string(row.n), std::to_string(row.m),
               csv_num(row.measure), csv_den(row.measure),
               csv_approx(row.measure),
               csv_num(row.hit_fraction) + "/" + csv_den(row.hit_fraction)});
    }
  }
  ExperimentOutcome o;
  o.csv = csv.out.str();
  o.checks_passed = monotone;
  o.summary["checks"] = {{"measure_monotone", monotone}};
  return o;
}

ExperimentOutcome run_rv_path(const ExperimentConfig& c) {
  const long depth = c.params.value("n", 10L);
  CsvBuilder csv;
  csv.row({"trial", "steps", "depth", "det", "length_num", "length_den",
           "length_approx", "error"});
  bool identity_ok = true;
  const auto iets = trial_iets(c);
  Json records = Json::array();
  for (std::size_t ti = 0; ti < iets.size(); ++ti) {
    try {
      RvRecord rec = rv_path(iets[ti], depth);
      std::string steps;
      for (RvStep s : rec.steps) steps += rv_letter(s);
      if (!column_sums_match_return_times(iets[ti], rec)) identity_ok = false;
      csv.row({std::to_string(ti), steps, std::to_string(depth),
               rec.matrix.det().str(), csv_num(rec.interval_length),
               csv_den(rec.interval_length), csv_approx(rec.interval_length),
               ""});
      records.push_back(rv_record_to_json(rec));
    } catch (const NotInGeneralPositionError& err) {
      csv.row({std::to_string(ti), "", std::to_string(err.depth), "", "", "",
               "", "not-in-general-position"});
    }
  }
  ExperimentOutcome o;
  o.csv = csv.out.str();
  o.checks_passed = identity_ok;
  o.summary["checks"] = {{"column_sum_return_time", identity_ok}};
  o.summary["records"] = std::move(records);
  return o;
}

ExperimentOutcome run_rauzy_class(const ExperimentConfig& c) {
  if (!c.params.contains("perm"))
    throw InvalidParamsError("rauzy-class needs params.perm");
  Permutation pi(c.params.at("perm").get<std::vector<int>>());
  const auto cls = rauzy_class(pi);
  CsvBuilder csv;
  csv.row({"index", "perm"});
  bool all_irreducible = true;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!cls[i].is_irreducible()) all_irreducible = false;
    csv.row({std::to_string(i), perm_str(cls[i])});
  }
  ExperimentOutcome o;
  o.csv = csv.out.str();
  o.checks_passed = all_irreducible;
  o.summary["checks"] = {{"class_irreducible", all_irreducible}};
  o.summary["size"] = cls.size();
  return o;
}

ExperimentOutcome run_cf(const ExperimentConfig& c) {
  if (!c.params.contains("alpha"))
    throw InvalidParamsError("cf needs params.alpha");
  const ExactNumber alpha =
      ExactNumber::parse(c.params.at("alpha").get<std::string>());
  const int n = c.params.value("n", 20);
  const int bits = c.params.value("bits", 24);
  ContinuedFraction cf = cf_expand(alpha, n);
  CsvBuilder csv;
  csv.row({"k", "a_k", "p_k", "q_k", "exponent_lo", "exponent_hi"});
  for (int k = 0; k < cf.size(); ++k) {
    std::string lo, hi;
    if (k >= 1 && cf.q[k] >= 2) {
      Enclosure ex = log_nat(cf.q[k], bits);
      lo = (ex.lo / ExactNumber(k)).str();
      hi = (ex.hi / ExactNumber(k)).str();
    }
    csv.row({std::to_string(k), cf.a[k].str(), cf.p[k].str(), cf.q[k].str(),
             lo, hi});
  }
  ExperimentOutcome o;
  o.csv = csv.out.str();
  o.summary["terminated"] = cf.terminated;
  if (cf.period)
    o.summary["period"] = {{"start", cf.period->first},
                           {"length", cf.period->second}};
  return o;
}

ExperimentOutcome run_hitting_time(const ExperimentConfig& c) {
  if (!c.iet) throw InvalidParamsError("hitting-time needs an explicit iet");
  if (!c.params.contains("y"))
    throw InvalidParamsError("hitting-time needs params.y");
  const ExactNumber y = ExactNumber::parse(c.params.at("y").get<std::string>());
  const int k_min = c.params.value("k_min", 4);
  const int k_max = c.params.value("k_max", 16);
  const long cap = c.params.value("cap", 1000000L);
  const int bits = c.params.value("bits", 24);
  CsvBuilder csv;
  csv.row({"k", "r_num", "r_den", "tau", "exponent_lo", "exponent_hi",
           "censored"});
  for (int k = k_min; k <= k_max; ++k) {
    const ExactNumber r = ExactNumber::rational(1, Int(1) << k);
    auto tau = hitting_time(*c.iet, c.x, y, r, cap, c.metric);
    if (tau) {
      Enclosure ex = hitting_exponent(*tau, r, bits);
      csv.row({std::to_string(k), csv_num(r), csv_den(r), std::to_string(*tau),
               ex.lo.str(), ex.hi.str(), "0"});
    } else {
      csv.row({std::to_string(k), csv_num(r), csv_den(r), "", "", "", "1"});
    }
  }
  ExperimentOutcome o;
  o.csv = csv.out.str();
  return o;
}

ExperimentOutcome run_separation_stats(const ExperimentConfig& c) {
  const int instances = c.params.value("instances", 500);
  const std::string variant = c.params.value("variant", std::string("both"));
  const std::uint64_t seed = c.params.value("seed", std::uint64_t{0});
  CsvBuilder csv;
  csv.row({"variant", "instance", "lhs_num", "lhs_den", "rhs_num", "rhs_den",
           "holds"});
  bool all_hold = true;
  SplitMix64 rng(seed);
  auto emit = [&](const char* name, int i, const SeparatedReport& rep) {
    if (!rep.holds) all_hold = false;
    csv.row({name, std::to_string(i), csv_num(rep.lhs), csv_den(rep.lhs),
             csv_num(rep.rhs), csv_den(rep.rhs), rep.holds ? "1" : "0"});
  };
  if (variant == "line" || variant == "both")
    for (int i = 0; i < instances; ++i)
      emit("line", i, random_separated_trial(rng));
  if (variant == "preimage" || variant == "both")
    for (int i = 0; i < instances; ++i)
      emit("preimage", i, random_preimage_trial(rng));
  ExperimentOutcome o;
  o.csv = csv.out.str();
  o.checks_passed = all_hold;
  o.summary["checks"] = {{"separated_bound", all_hold}};
  return o;
}

ExperimentOutcome run_rigidity_search(const ExperimentConfig& c) {
  if (!c.iet) throw InvalidParamsError("rigidity-search needs an explicit iet");
  const int j_max = c.params.value("j_max", 6);
  const long n_search = c.params.value("n_search", 64L);
  RigidSequenceReport rep = rigid_sequence(*c.iet, c.x, j_max, n_search);
  CsvBuilder csv;
  csv.row({"j", "N_j", "block_measure_num", "block_measure_den",
           "block_measure_approx", "bound_num", "bound_den", "below"});
  bool all_below = true;
  for (const auto& b : rep.blocks) {
    if (!b.below) all_below = false;
    csv.row({std::to_string(b.j), b.n_j.str(), csv_num(b.measure),
             csv_den(b.measure), csv_approx(b.measure), csv_num(b.bound),
             csv_den(b.bound), b.below ? "1" : "0"});
  }
  bool towers_verify = true;
  Json towers = Json::array();
  for (const auto& tw : rep.towers) {
    if (tw.n <= 20000 && !verify_tower(*c.iet, tw)) towers_verify = false;
    towers.push_back({{"j_lo", tw.j_interval.lo.str()},
                      {"j_hi", tw.j_interval.hi.str()},
                      {"N", tw.n.str()},
                      {"cover", tw.cover.str()},
                      {"overlap", tw.overlap.str()},
                      {"eps", tw.eps.str()},
                      {"depth", tw.depth}});
  }
  ExperimentOutcome o;
  o.csv = csv.out.str();
  o.checks_passed = all_below && towers_verify;
  o.summary["checks"] = {{"blocks_below_bound", all_below},
                         {"towers_verify", towers_verify}};
  o.summary["towers"] = std::move(towers);
  return o;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig c;
  c.echo = j;
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("config needs a 'kind'");
  c.kind = j.at("kind").get<std::string>();
  if (j.contains("iet")) c.iet = iet_from_json(j.at("iet"));
  if (j.contains("sampler")) {
    const Json& s = j.at("sampler");
    SamplerSpec spec;
    spec.d = s.value("d", 2);
    spec.q = s.value("Q", 2L);
    spec.seed = s.value("seed", std::uint64_t{0});
    spec.count = s.value("count", 1);
    c.sampler = spec;
  }
  if (j.contains("sequence"))
    c.sequence = target_sequence_from_json(j.at("sequence"));
  if (j.contains("schedule"))
    for (const auto& pair : j.at("schedule")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("schedule entries are [N, M] pairs");
      c.schedule.emplace_back(pair[0].get<long>(), pair[1].get<long>());
    }
  if (j.contains("metric"))
    c.metric = metric_from(j.at("metric").get<std::string>());
  if (j.contains("x")) c.x = ExactNumber::parse(j.at("x").get<std::string>());
  if (j.contains("params")) c.params = j.at("params");
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("config parse error: ") + e.what());
  }
  return from_json(j);
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  ExperimentOutcome o;
  if (config.kind == "target-measure")
    o = run_target_measure(config);
  else if (config.kind == "rv-path")
    o = run_rv_path(config);
  else if (config.kind == "rauzy-class")
    o = run_rauzy_class(config);
  else if (config.kind == "cf")
    o = run_cf(config);
  else if (config.kind == "hitting-time")
    o = run_hitting_time(config);
  else if (config.kind == "separation-stats")
    o = run_separation_stats(config);
  else if (config.kind == "rigidity-search")
    o = run_rigidity_search(config);
  else
    throw InvalidParamsError("unknown experiment kind '" + config.kind + "'");
  o.summary["kind"] = config.kind;
  o.summary["config"] = config.echo;
  o.summary["version"] = "ietk 0.1.0";
  o.summary["passed"] = o.checks_passed;
  return o;
}

void write_outcome(const ExperimentOutcome& outcome,
                   const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream csv(std::filesystem::path(out_dir) / "results.csv",
                    std::ios::binary);
  csv << outcome.csv;
  std::ofstream summary(std::filesystem::path(out_dir) / "summary.json",
                        std::ios::binary);
  summary << outcome.summary.dump(2) << '\n';
}

std::string csv_num(const ExactNumber& x) {
  const std::string s = x.str();
  return s.substr(0, s.rfind('/'));
}

std::string csv_den(const ExactNumber& x) {
  const std::string s = x.str();
  return s.substr(s.rfind('/') + 1);
}

std::string csv_approx(const ExactNumber& x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x.to_double());
  return buf;
}

SeparatedReport random_separated_trial(SplitMix64& rng) {
  const int n = 3 + static_cast<int>(rng.below(18));
  const ExactNumber e = ExactNumber::rational(1 + Int(rng.below(8)),
                                              1 + Int(rng.below(4)));
  const ExactNumber gap = e / ExactNumber(n);
  // Consecutive spacings in [gap, 2*gap]: separation holds by construction.
  std::vector<ExactNumber> points;
  ExactNumber z = ExactNumber::rational(Int(rng.below(16)), 16);
  for (int i = 0; i < n; ++i) {
    points.push_back(z);
    z += gap * ExactNumber::rational(4 + Int(rng.below(5)), 4);
  }
  const ExactNumber delta =
      e / ExactNumber(2 * n) * ExactNumber::rational(1 + Int(rng.below(7)), 8);
  const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2) + 1));
  const ExactNumber span = points.back() - points.front();
  std::vector<Interval> raw;
  for (int i = 0; i < t; ++i) {
    const ExactNumber lo =
        points.front() + span * ExactNumber::rational(Int(rng.below(256)), 256);
    raw.push_back({lo, lo + delta * ExactNumber::rational(1 + Int(rng.below(8)), 4)});
  }
  return check_separated_bound(points, IntervalSet::from(std::move(raw)), e,
                               delta);
}

SeparatedReport random_preimage_trial(SplitMix64& rng) {
  // Mix trivial-bound instances (small r) with ones where the right side is
  // positive (r >= 6, k = 1).
  long r, k;
  switch (rng.below(4)) {
    case 0: r = 2 + static_cast<long>(rng.below(3)), k = 1; break;
    case 1: r = 2 + static_cast<long>(rng.below(3)), k = 2; break;
    default: r = 6 + static_cast<long>(rng.below(3)), k = 1; break;
  }
  long rk = 1;
  for (long i = 0; i < k; ++i) rk *= r;
  const long rk1 = rk * r;
  const long q = 64 + static_cast<long>(rng.below(400));
  const long p = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(q - 1)));
  const Iet t = rotation_iet(ExactNumber::rational(p, q));
  const ExactNumber e =
      t.min_gap(rk1) * ExactNumber(rk1) * ExactNumber::rational(3, 4);
  const ExactNumber delta = e / ExactNumber(2 * rk1) *
                            ExactNumber::rational(1 + Int(rng.below(6)), 8);
  const ExactNumber y = ExactNumber::rational(Int(rng.below(static_cast<std::uint64_t>(q))), q);
  const long t_count = static_cast<long>(rng.below(static_cast<std::uint64_t>(rk) + 1));
  std::vector<Interval> raw;
  for (long i = 0; i < t_count; ++i) {
    const ExactNumber lo = ExactNumber::rational(Int(rng.below(512)), 512);
    const ExactNumber len =
        delta * ExactNumber::rational(1 + Int(rng.below(8)), 8);
    raw.push_back({lo, min(lo + len, ExactNumber(1))});
  }
  return check_separated_preimage_bound(
      t, y, delta, IntervalSet::from(std::move(raw)), r, k, e);
}

}  // namespace ietk
