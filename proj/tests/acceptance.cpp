// Release gate: one line of output per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "ietk/experiment.hpp"
#include "ietk/rauzy.hpp"
#include "ietk/rigidity.hpp"
#include "ietk/rotations.hpp"
#include "ietk/sampling.hpp"

using namespace ietk;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double secs) {
  if (!ok) ++failures;
  std::printf("%s  %2d  %-58s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what, secs);
  std::fflush(stdout);
}

template <typename F>
void criterion(int id, const char* what, F f) {
  const auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = f();
  } catch (const std::exception& e) {
    std::printf("      (exception: %s)\n", e.what());
  }
  report(id, what, ok, std::chrono::duration<double>(Clock::now() - t0).count());
}

std::string rv_letters_to_end(const Iet& t) {
  std::string letters;
  Iet cur = t;
  try {
    while (true) {
      auto r = rv_step(cur);
      letters += rv_letter(r.step);
      cur = r.induced;
    }
  } catch (const NotInGeneralPositionError&) {
  }
  return letters;
}

// 1: the induction letters of a 2-IET run-length encode to the continued
// fraction of the length ratio (last quotient short by one: the subtractive
// algorithm halts at equality instead of reaching zero).
bool euclid_cf_correspondence() {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const long q = 3 + static_cast<long>(rng.below(9998));
    long p = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(q - 1)));
    if (2 * p == q) ++p;  // equal lengths: induction undefined at depth 1
    const ExactNumber l1 = ExactNumber::rational(p, q);
    const ExactNumber l2 = ExactNumber::rational(q - p, q);
    Iet t({l1, l2}, Permutation({2, 1}));
    const std::string letters = rv_letters_to_end(t);
    std::vector<std::pair<char, long>> runs;
    for (char ch : letters) {
      if (runs.empty() || runs.back().first != ch)
        runs.emplace_back(ch, 1);
      else
        ++runs.back().second;
    }
    ContinuedFraction cf = cf_expand(min(l1, l2) / max(l1, l2), 10000);
    if (!cf.terminated) return false;
    std::vector<Int> expect(cf.a.begin() + 1, cf.a.end());  // drop a_0 = 0
    expect.back() -= 1;
    if (runs.size() != expect.size()) return false;
    char letter = l2 < l1 ? 'a' : 'b';
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].first != letter || Int(runs[i].second) != expect[i])
        return false;
      letter = letter == 'a' ? 'b' : 'a';
    }
  }
  return true;
}

// 2: column sums of M(T,n) equal the first-return times to I^(n), measured
// by iterating the map directly from each induced subinterval.
bool column_sum_return_time() {
  SplitMix64 rng(22);
  int done = 0;
  while (done < 100) {
    const int d = 3 + static_cast<int>(rng.below(3));
    const long q = 50 + static_cast<long>(rng.below(450));
    Iet t = sample_random_iet(d, q, rng);
    long n = 5 + static_cast<long>(rng.below(11));
    RvRecord rec = [&] {
      try {
        return rv_path(t, n);
      } catch (const NotInGeneralPositionError& e) {
        n = e.depth - 1;
        return rv_path(t, n);
      }
    }();
    if (n < 1) continue;
    const long cap = rec.matrix.max_column_sum().convert_to<long>() + 1;
    ExactNumber lo(0);
    for (int j = 1; j <= d; ++j) {
      const ExactNumber len = rec.induced.lengths()[j - 1];
      ExactNumber p = lo + len / ExactNumber(2);
      long steps = 0;
      do {
        p = t.apply(p);
        ++steps;
      } while (p >= rec.interval_length && steps <= cap);
      if (Int(steps) != rec.matrix.column_sum(j)) return false;
      lo += len;
    }
    ++done;
  }
  return true;
}

// 3: iet_from_column rebuilds an IET following the same first n steps.
bool column_replay() {
  SplitMix64 rng(33);
  int done = 0;
  while (done < 50) {
    const int d = 3 + static_cast<int>(rng.below(2));
    const long q = 50 + static_cast<long>(rng.below(450));
    Iet t = sample_random_iet(d, q, rng);
    const long n = 1 + static_cast<long>(rng.below(5));
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    bool replayed = false;
    for (long k = 1; k <= 30 && !replayed; ++k) {
      try {
        Iet rebuilt = iet_from_column(t, n, k, i);
        RvRecord a = rv_path(t, n);
        RvRecord b = rv_path(rebuilt, n);
        if (a.steps != b.steps) return false;
        if (!(a.induced.permutation() == b.induced.permutation())) return false;
        replayed = true;
      } catch (const NotPositiveError&) {
      } catch (const NotInGeneralPositionError&) {
        break;
      }
    }
    if (replayed) ++done;
  }
  return true;
}

// 4: circle min_gap of a rotation equals the smallest three-gap length.
bool three_gap_oracle() {
  SplitMix64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const long q = 5 + static_cast<long>(rng.below(996));
    const long p = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(q - 1)));
    const long n = 1 + static_cast<long>(rng.below(100));
    const ExactNumber alpha = ExactNumber::rational(p, q);
    if (rotation_iet(alpha).min_gap(n, Metric::Circle) !=
        three_gaps(alpha, Int(n)).smallest())
      return false;
  }
  return true;
}

// 5: both separation lemmas on 500 random precondition-satisfying instances.
bool separation_lemmas() {
  SplitMix64 rng(55);
  for (int i = 0; i < 500; ++i)
    if (!random_separated_trial(rng).holds) return false;
  for (int i = 0; i < 500; ++i)
    if (!random_preimage_trial(rng).holds) return false;
  return true;
}

// 6: staged rigidity construction on a rotation whose partial quotients
// grow like 4*3^k: every block-union measure stays below 2^-j + (2/3)^j.
bool rigidity_blocks() {
  const std::vector<long> quots{2, 15, 39, 111, 327, 975, 2919, 8751};
  Int p0 = 1, p1 = 0, q0 = 0, q1 = 1;  // convergents of [0; a_1, a_2, ...]
  for (long a : quots) {
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1; p1 = p2; q0 = q1; q1 = q2;
  }
  const ExactNumber alpha = ExactNumber::rational(p1, q1);
  Iet t = rotation_iet(alpha);
  RigidSequenceReport rep = rigid_sequence(t, ExactNumber(0), 6, 13200);
  if (rep.blocks.size() != 6) return false;
  for (std::size_t j = 1; j < rep.n.size(); ++j)
    if (!(rep.n[j] > rep.n[j - 1])) return false;
  for (const auto& b : rep.blocks)
    if (!b.below) return false;
  return true;
}

// 7: golden rotation, harmonic radii c = 1/10: the union measure grows with
// the horizon and passes 9/10 by M = 1e5.
bool growth_union() {
  Iet t = rotation_iet(ExactNumber::quadratic(-1, 1, 2, 5));
  TargetSequence seq = TargetSequence::harmonic(ExactNumber::rational(1, 10));
  ExactNumber prev(0);
  ExactNumber last;
  for (long m : {10L, 100L, 1000L, 10000L, 100000L}) {
    last = hit_union(t, ExactNumber(0), seq, 1, m, Metric::Circle).measure();
    if (last < prev) return false;
    prev = last;
  }
  return last > ExactNumber::rational(9, 10);
}

// 8: hitting-time exponent of the golden rotation near 1 at r = 2^-16.
bool hitting_exponent_near_one() {
  Iet t = rotation_iet(ExactNumber::quadratic(-1, 1, 2, 5));
  const ExactNumber y = ExactNumber::rational(1, 2);
  Enclosure at16{ExactNumber(0), ExactNumber(0)};
  for (int k = 4; k <= 16; ++k) {
    const ExactNumber r = ExactNumber::rational(1, Int(1) << k);
    auto tau = hitting_time(t, ExactNumber(0), y, r, 1L << (k + 4),
                            Metric::Circle);
    if (!tau) return false;
    if (k == 16) at16 = hitting_exponent(*tau, r);
  }
  return at16.lo >= ExactNumber::rational(8, 10) &&
         at16.hi <= ExactNumber::rational(12, 10);
}

// 9: every tower located by the search re-verifies by explicit pushing.
bool towers_verify() {
  std::vector<Iet> systems;
  // quadratic rotations with quotients 8 and 12, plus rational rotations
  systems.push_back(rotation_iet(ExactNumber::quadratic(-4, 1, 1, 17)));
  systems.push_back(rotation_iet(ExactNumber::quadratic(-6, 1, 1, 37)));
  systems.push_back(rotation_iet(ExactNumber::rational(31, 97)));
  systems.push_back(rotation_iet(ExactNumber::rational(355, 1000)));
  systems.push_back(rotation_iet(ExactNumber::rational(15, 127)));
  SplitMix64 rng(99);
  for (int i = 0; i < 5; ++i) systems.push_back(sample_random_iet(3, 200, rng));
  const std::vector<ExactNumber> epss{ExactNumber::rational(1, 3),
                                      ExactNumber::rational(1, 5),
                                      ExactNumber::rational(1, 2)};
  int found = 0;
  for (const Iet& t : systems)
    for (const ExactNumber& eps : epss) {
      std::optional<RigidityTower> tw;
      try {
        tw = find_tower(t, eps, 40);
      } catch (const NotInGeneralPositionError&) {
        continue;
      }
      if (!tw || tw->n > 20000) continue;
      ++found;
      if (!verify_tower(t, *tw)) return false;
    }
  return found >= 5;
}

// 10: a million exact orbit steps of a rational 4-IET with a denominator
// near 2^62 in under a second.
bool fast_orbit_performance() {
  const long long q = (1LL << 62) - 57;
  std::vector<ExactNumber> lengths{
      ExactNumber::rational(Int(q) / 5, q),
      ExactNumber::rational(Int(q) / 3, q),
      ExactNumber::rational(Int(q) / 7, q),
      ExactNumber::rational(Int(q) - Int(q) / 5 - Int(q) / 3 - Int(q) / 7, q)};
  Iet t(lengths, Permutation({4, 3, 2, 1}));
  const ExactNumber x = ExactNumber::rational(12345, q);
  auto orbit = FastOrbit::create(t, x);
  if (!orbit) return false;
  const auto t0 = Clock::now();
  orbit->step(1000000);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  // Spot check against the slow exact path.
  ExactNumber p = t.iterate(x, 1000);
  FastOrbit check = *FastOrbit::create(t, x);
  check.step(1000);
  if (check.position() != p) return false;
  std::printf("      (1e6 iterations in %.3fs)\n", secs);
  return secs < 1.0;
}

// 11: same config, same seed -> byte-identical CSV.
bool determinism() {
  const char* configs[] = {
      R"({"kind":"separation-stats","params":{"instances":50,"seed":5}})",
      R"({"kind":"target-measure","sampler":{"d":3,"Q":60,"seed":9,"count":3},
          "sequence":{"family":"harmonic","c":"1/10"},
          "schedule":[[1,50],[1,200]],"metric":"circle"})",
      R"({"kind":"rv-path","sampler":{"d":4,"Q":97,"seed":3,"count":5},
          "params":{"n":6}})"};
  for (const char* text : configs) {
    ExperimentConfig c = ExperimentConfig::from_json(Json::parse(text));
    ExperimentOutcome a = run_experiment(c);
    ExperimentOutcome b = run_experiment(c);
    if (a.csv != b.csv || a.csv.empty()) return false;
    if (!a.checks_passed) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Euclid/CF correspondence on 200 random 2-IETs",
            euclid_cf_correspondence);
  criterion(2, "column sums = return times on 100 random IETs",
            column_sum_return_time);
  criterion(3, "column-vector replay on 50 random cases", column_replay);
  criterion(4, "min_gap matches the three-gap oracle (100 rotations)",
            three_gap_oracle);
  criterion(5, "separation bounds hold on 500+500 random instances",
            separation_lemmas);
  criterion(6, "rigidity block measures below 2^-j + (2/3)^j for j <= 6",
            rigidity_blocks);
  criterion(7, "harmonic-target union exceeds 9/10 by M = 1e5", growth_union);
  criterion(8, "hitting exponent within 0.2 of 1 at r = 2^-16",
            hitting_exponent_near_one);
  criterion(9, "located towers re-verify by explicit pushing", towers_verify);
  criterion(10, "1e6 exact orbit iterations under 1s", fast_orbit_performance);
  criterion(11, "byte-identical CSV under fixed seed", determinism);
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
