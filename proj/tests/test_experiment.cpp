#include <doctest.h>

#include <sstream>

#include "ietk/experiment.hpp"
#include "ietk/sampling.hpp"

using namespace ietk;

TEST_CASE("sampling is deterministic and well formed") {
  Iet a = sample_random_iet(4, 100, std::uint64_t{42});
  Iet b = sample_random_iet(4, 100, std::uint64_t{42});
  CHECK(a == b);
  Iet c = sample_random_iet(4, 100, std::uint64_t{43});
  CHECK_FALSE(a == c);  // (almost surely)
  SplitMix64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Iet t = sample_random_iet(2 + static_cast<int>(rng.below(4)),
                              10 + static_cast<long>(rng.below(500)), rng);
    CHECK(t.total() == ExactNumber(1));
    CHECK(t.permutation().is_irreducible());
    for (const auto& l : t.lengths()) CHECK(l.sign() > 0);
  }
  // unique composition when Q = d
  Iet forced = sample_random_iet(2, 2, std::uint64_t{9});
  CHECK(forced.lengths()[0] == ExactNumber::rational(1, 2));
  CHECK_THROWS_AS(sample_random_iet(1, 5, std::uint64_t{0}), InvalidParamsError);
  CHECK_THROWS_AS(sample_random_iet(5, 3, std::uint64_t{0}), InvalidParamsError);
}

TEST_CASE("iet json round trip") {
  Iet t({ExactNumber::rational(5, 8), ExactNumber::rational(3, 8)},
        Permutation({2, 1}));
  Json j = iet_to_json(t);
  CHECK(j["perm"] == Json::array({2, 1}));
  CHECK(j["lengths"] == Json::array({"5/8", "3/8"}));
  CHECK(iet_from_json(j) == t);
  Iet q({ExactNumber::quadratic(3, -1, 2, 5), ExactNumber::quadratic(-1, 1, 2, 5)},
        Permutation({2, 1}));
  CHECK(iet_from_json(iet_to_json(q)) == q);
  CHECK_THROWS_AS(iet_from_json(Json{{"perm", {2, 1}}}), ParseError);
}

TEST_CASE("interval set and sequence json round trips") {
  IntervalSet s = IntervalSet::from({{ExactNumber(0), ExactNumber::rational(1, 3)},
                                     {ExactNumber(2), ExactNumber(3)}});
  CHECK(interval_set_from_json(interval_set_to_json(s)) == s);

  TargetSequence blocked = TargetSequence::blocked(
      TargetSequence::harmonic(ExactNumber::rational(1, 10)), 2);
  Json j = target_sequence_to_json(blocked);
  CHECK(j["family"] == "blocked");
  CHECK(j["base"]["c"] == "1/10");
  TargetSequence back = target_sequence_from_json(j);
  for (long i = 1; i <= 40; ++i)
    CHECK(back.eval(Int(i)) == blocked.eval(Int(i)));
  TargetSequence rigid = TargetSequence::rigid({Int(2), Int(31)});
  TargetSequence rigid2 =
      target_sequence_from_json(target_sequence_to_json(rigid));
  for (long i = 1; i <= 123; ++i)
    CHECK(rigid2.eval(Int(i)) == rigid.eval(Int(i)));
  CHECK_THROWS_AS(target_sequence_from_json(Json{{"family", "weird"}}),
                  ParseError);
}

TEST_CASE("csv cells round trip through the exact format") {
  for (const ExactNumber& x :
       {ExactNumber::rational(-7, 3), ExactNumber(0),
        ExactNumber::quadratic(3, -1, 2, 5), ExactNumber::rational(1, 1)}) {
    CHECK(ExactNumber::parse(csv_num(x) + "/" + csv_den(x)) == x);
  }
}

TEST_CASE("target-measure experiment produces monotone measures") {
  Json cfg = {
      {"kind", "target-measure"},
      {"iet", {{"perm", {2, 1}}, {"lengths", {"5/7", "2/7"}}}},
      {"sequence", {{"family", "harmonic"}, {"c", "1/10"}}},
      {"schedule", {{1, 10}, {1, 100}, {1, 1000}}},
      {"metric", "circle"},
      {"x", "0"}};
  ExperimentOutcome o = run_experiment(ExperimentConfig::from_json(cfg));
  CHECK(o.checks_passed);
  std::istringstream csv(o.csv);
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "trial,checkpoint_N,checkpoint_M,measure_num,measure_den,"
        "measure_approx,hit_fraction");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("empty trial list yields a header-only csv") {
  Json cfg = {{"kind", "target-measure"},
              {"sampler", {{"d", 3}, {"Q", 30}, {"seed", 1}, {"count", 0}}},
              {"sequence", {{"family", "harmonic"}, {"c", "1/10"}}},
              {"schedule", {{1, 10}}}};
  ExperimentOutcome o = run_experiment(ExperimentConfig::from_json(cfg));
  CHECK(o.checks_passed);
  CHECK(o.csv ==
        "trial,checkpoint_N,checkpoint_M,measure_num,measure_den,"
        "measure_approx,hit_fraction\n");
}

TEST_CASE("rv-path experiment checks the column-sum identity") {
  Json cfg = {{"kind", "rv-path"},
              {"iet", {{"perm", {2, 1}}, {"lengths", {"5/8", "3/8"}}}},
              {"params", {{"n", 3}}}};
  ExperimentOutcome o = run_experiment(ExperimentConfig::from_json(cfg));
  CHECK(o.checks_passed);
  CHECK(o.csv.find("aba") != std::string::npos);
  CHECK(o.summary["records"][0]["steps"] == "aba");
}

TEST_CASE("experiment reruns are byte identical") {
  Json cfg = {{"kind", "separation-stats"},
              {"params", {{"instances", 20}, {"seed", 3}}}};
  ExperimentConfig c = ExperimentConfig::from_json(cfg);
  CHECK(run_experiment(c).csv == run_experiment(c).csv);
}

TEST_CASE("config errors are parse errors") {
  CHECK_THROWS_AS(ExperimentConfig::from_json(Json{{"x", "0"}}), ParseError);
  CHECK_THROWS_AS(
      run_experiment(ExperimentConfig::from_json(Json{{"kind", "nope"}})),
      InvalidParamsError);
  CHECK_THROWS_AS(ExperimentConfig::from_file("/nonexistent.json"), ParseError);
}
