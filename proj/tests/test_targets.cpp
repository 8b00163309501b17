#include <doctest.h>

#include "ietk/rng.hpp"
#include "ietk/rotations.hpp"
#include "ietk/targets.hpp"

using namespace ietk;

TEST_CASE("sequence families evaluate exactly") {
  TargetSequence h = TargetSequence::harmonic(ExactNumber::rational(1, 10));
  CHECK(h.eval(Int(7)) == ExactNumber::rational(1, 70));
  TargetSequence p = TargetSequence::power(ExactNumber(2), 2);
  CHECK(p.eval(Int(5)) == ExactNumber::rational(2, 25));
  TargetSequence e = TargetSequence::explicit_list(
      {ExactNumber::rational(1, 2), ExactNumber::rational(1, 3)});
  CHECK(e.eval(Int(2)) == ExactNumber::rational(1, 3));
  CHECK_THROWS_AS(e.eval(Int(3)), OutOfRangeError);
}

TEST_CASE("blocked sequence is constant on blocks") {
  TargetSequence b = TargetSequence::blocked(
      TargetSequence::harmonic(ExactNumber(1)), 2);
  // b_i = a_{2^k} for 2^{k-1} <= i < 2^k
  CHECK(b.eval(Int(1)) == ExactNumber::rational(1, 2));
  CHECK(b.eval(Int(2)) == ExactNumber::rational(1, 4));
  CHECK(b.eval(Int(3)) == ExactNumber::rational(1, 4));
  CHECK(b.eval(Int(4)) == ExactNumber::rational(1, 8));
  CHECK(b.eval(Int(7)) == ExactNumber::rational(1, 8));
}

TEST_CASE("rigid sequence follows the tower blocks") {
  TargetSequence r = TargetSequence::rigid({Int(2), Int(31)});
  // block 1: 1 <= i < 4 with radius 1/4; block 2: 4 <= i < 124 radius 1/124
  CHECK(r.eval(Int(1)) == ExactNumber::rational(1, 4));
  CHECK(r.eval(Int(3)) == ExactNumber::rational(1, 4));
  CHECK(r.eval(Int(4)) == ExactNumber::rational(1, 124));
  CHECK(r.eval(Int(123)) == ExactNumber::rational(1, 124));
}

TEST_CASE("log harmonic radii come as certified enclosures") {
  TargetSequence lh = TargetSequence::log_harmonic(ExactNumber(1));
  Enclosure e = lh.eval_enclosure(Int(10));
  // 1/(10 ln 11) ~ 0.0417
  CHECK(e.lo > ExactNumber::rational(4, 100));
  CHECK(e.hi < ExactNumber::rational(43, 1000));
  CHECK(e.lo <= e.hi);
}

TEST_CASE("two-standardness of blocked harmonic") {
  TargetSequence b = TargetSequence::blocked(
      TargetSequence::harmonic(ExactNumber(1)), 2);
  auto r = is_two_standard(b, 4, 40);
  REQUIRE(r.has_value());
  CHECK(*r == 2);
  // an increasing sequence is not 2-standard on any horizon
  std::vector<ExactNumber> inc;
  for (long i = 1; i <= 64; ++i) inc.push_back(ExactNumber(i));
  CHECK_FALSE(is_two_standard(TargetSequence::explicit_list(inc), 3, 6)
                  .has_value());
}

TEST_CASE("domain balls truncate or wrap") {
  ExactNumber total(1);
  IntervalSet trunc = domain_ball(total, ExactNumber::rational(1, 10),
                                  ExactNumber::rational(1, 5), Metric::Interval);
  REQUIRE(trunc.size() == 1);
  CHECK(trunc.intervals()[0].lo == ExactNumber(0));
  CHECK(trunc.intervals()[0].hi == ExactNumber::rational(3, 10));
  IntervalSet wrap = domain_ball(total, ExactNumber::rational(1, 10),
                                 ExactNumber::rational(1, 5), Metric::Circle);
  CHECK(wrap.size() == 2);
  CHECK(wrap.measure() == ExactNumber::rational(2, 5));
}

TEST_CASE("hit_union on the quarter rotation") {
  Iet t = rotation_iet(ExactNumber::rational(1, 4));
  TargetSequence seq = TargetSequence::harmonic(ExactNumber::rational(1, 100));
  // orbit of 0 visits 1/4, 1/2, 3/4, 0, ... with radii 1/(100 i)
  IntervalSet u = hit_union(t, ExactNumber(0), seq, 1, 4, Metric::Circle);
  // disjoint balls: 2*(1/100 + 1/200 + 1/300 + 1/400) = 1/24
  CHECK(u.measure() == ExactNumber::rational(1, 24));
  CHECK(u.size() == 5);  // the ball about 0 wraps into two pieces
}

TEST_CASE("first_hit and hitting_time agree") {
  Iet t = rotation_iet(ExactNumber::rational(2, 7));
  ExactNumber y = ExactNumber::rational(6, 7);
  auto tau = hitting_time(t, ExactNumber(0), y, ExactNumber::rational(1, 20), 100);
  REQUIRE(tau.has_value());
  CHECK(*tau == 3);  // 3 * 2/7 = 6/7
  auto fh = first_hit(t, ExactNumber(0), y,
                      TargetSequence::explicit_list(
                          std::vector<ExactNumber>(100, ExactNumber::rational(1, 20))),
                      1, 100);
  CHECK(fh == tau);
  CHECK_FALSE(hitting_time(t, ExactNumber(0), ExactNumber::rational(1, 2),
                           ExactNumber::rational(1, 100), 50)
                  .has_value());
}

TEST_CASE("hitting exponent encloses log tau / -log r") {
  Enclosure e = hitting_exponent(1000, ExactNumber::rational(1, 1024));
  // log(1000)/log(1024) ~ 0.99657
  CHECK(e.lo < e.hi);
  CHECK(e.lo > ExactNumber::rational(99, 100));
  CHECK(e.hi < ExactNumber(1));
  CHECK(e.width() < ExactNumber::rational(1, 1000));
}

TEST_CASE("separated_count greedy is optimal in 1d") {
  std::vector<ExactNumber> pts{ExactNumber(0), ExactNumber::rational(1, 2),
                               ExactNumber(1), ExactNumber(3)};
  CHECK(separated_count(pts, ExactNumber(1)) == 3);
  CHECK(separated_count(pts, ExactNumber::rational(1, 2)) == 4);
  CHECK(separated_count(pts, ExactNumber(5)) == 1);
}

TEST_CASE("separation checker enforces its preconditions") {
  std::vector<ExactNumber> pts{ExactNumber(0), ExactNumber(1), ExactNumber(2)};
  ExactNumber e(3);  // e/n = 1: points exactly at the threshold
  SeparatedReport rep = check_separated_bound(pts, IntervalSet(), e,
                                              ExactNumber::rational(1, 4));
  CHECK(rep.holds);
  CHECK(rep.lhs == ExactNumber::rational(3, 2));  // three disjoint balls
  CHECK_THROWS_AS(check_separated_bound(pts, IntervalSet(), e, ExactNumber(1)),
                  PreconditionViolatedError);
  CHECK_THROWS_AS(check_separated_bound({ExactNumber(0), ExactNumber::rational(1, 2)},
                                        IntervalSet(), ExactNumber(4),
                                        ExactNumber::rational(1, 10)),
                  PreconditionViolatedError);
}

TEST_CASE("preimage checker enforces its preconditions") {
  Iet t = rotation_iet(ExactNumber::rational(2, 7));
  // e_T(r^{k+1}) = 1/7 here; e must stay below r^{k+1}/7
  CHECK_THROWS_AS(check_separated_preimage_bound(
                      t, ExactNumber::rational(1, 3), ExactNumber::rational(1, 1000),
                      IntervalSet(), 2, 1, ExactNumber(10)),
                  PreconditionViolatedError);
}

TEST_CASE("limsup profile rows carry hit fractions") {
  Iet t = rotation_iet(ExactNumber::rational(2, 7));
  TargetSequence seq = TargetSequence::harmonic(ExactNumber(1));
  ExperimentResult res =
      limsup_profile(t, ExactNumber(0), seq, {{1, 3}, {1, 30}}, 16, Metric::Circle);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].measure <= res.rows[1].measure);
  CHECK(res.rows[1].hit_fraction >= res.rows[0].hit_fraction);
  CHECK(res.rows[1].hit_fraction <= ExactNumber(1));
}
