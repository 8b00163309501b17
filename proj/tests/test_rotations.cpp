#include <doctest.h>

#include <algorithm>

#include "ietk/rng.hpp"
#include "ietk/rotations.hpp"

using namespace ietk;

namespace {

// Brute-force circle gaps of {j*alpha mod 1 : 0 <= j <= n}.
std::vector<ExactNumber> brute_gaps(const ExactNumber& alpha, long n) {
  std::vector<ExactNumber> pts;
  ExactNumber p(0);
  pts.push_back(p);
  for (long j = 1; j <= n; ++j) {
    p += alpha;
    if (!(p < ExactNumber(1))) p -= ExactNumber(1);
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ExactNumber> gaps;
  for (std::size_t i = 1; i < pts.size(); ++i) gaps.push_back(pts[i] - pts[i - 1]);
  gaps.push_back(ExactNumber(1) - pts.back() + pts.front());
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

}  // namespace

TEST_CASE("cf of rationals is the euclidean algorithm") {
  ContinuedFraction cf = cf_expand(ExactNumber::rational(5, 8), 20);
  CHECK(cf.terminated);
  // 5/8 = [0; 1, 1, 1, 2]
  REQUIRE(cf.size() == 5);
  CHECK(cf.a[0] == 0);
  CHECK(cf.a[1] == 1);
  CHECK(cf.a[2] == 1);
  CHECK(cf.a[3] == 1);
  CHECK(cf.a[4] == 2);
  // convergents align with quotients and end at the value itself
  CHECK(ExactNumber::rational(cf.p.back(), cf.q.back()) ==
        ExactNumber::rational(5, 8));
}

TEST_CASE("cf convergents satisfy the determinant identity") {
  SplitMix64 rng(30);
  for (int trial = 0; trial < 50; ++trial) {
    long q = 3 + static_cast<long>(rng.below(5000));
    long p = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(q - 1)));
    ContinuedFraction cf = cf_expand(ExactNumber::rational(p, q), 100);
    CHECK(cf.terminated);
    for (int k = 1; k < cf.size(); ++k) {
      Int det = cf.p[k] * cf.q[k - 1] - cf.p[k - 1] * cf.q[k];
      CHECK((det == 1 || det == -1));
      CHECK(cf.q[k] >= cf.q[k - 1]);
    }
  }
}

TEST_CASE("golden continued fraction is all ones with period 1") {
  ContinuedFraction cf = cf_expand(ExactNumber::quadratic(-1, 1, 2, 5), 15);
  CHECK_FALSE(cf.terminated);
  for (int k = 1; k < cf.size(); ++k) CHECK(cf.a[k] == 1);
  REQUIRE(cf.period.has_value());
  CHECK(cf.period->second == 1);
  // sqrt(2)-1 = [0;2,2,2,...]
  ContinuedFraction cf2 = cf_expand(ExactNumber::quadratic(-1, 1, 1, 2), 10);
  for (int k = 1; k < cf2.size(); ++k) CHECK(cf2.a[k] == 2);
}

TEST_CASE("three gaps match brute force") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const bool rational = rng.below(2) == 0;
    ExactNumber alpha =
        rational
            ? ExactNumber::rational(1 + static_cast<long>(rng.below(96)), 97)
            : ExactNumber::quadratic(-1, 1, 1 + static_cast<long>(rng.below(3)),
                                     2);  // (sqrt(2)-1)/c, inside (0,1)
    const long n = 1 + static_cast<long>(rng.below(60));
    GapMultiset gm = three_gaps(alpha, Int(n));
    CHECK(gm.gaps.size() <= 3);
    auto brute = brute_gaps(alpha, n);
    CHECK(gm.total_count() == Int(brute.size()));
    std::vector<ExactNumber> expanded;
    for (const auto& [len, cnt] : gm.gaps)
      for (Int c = 0; c < cnt; ++c) expanded.push_back(len);
    REQUIRE(expanded.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i)
      CHECK(expanded[i] == brute[i]);
  }
}

TEST_CASE("three gaps with astronomically many points") {
  // golden rotation, n = 10^30: counts stay exact via batched splitting
  ExactNumber golden = ExactNumber::quadratic(-1, 1, 2, 5);
  Int n("1000000000000000000000000000000");
  GapMultiset gm = three_gaps(golden, n);
  CHECK(gm.gaps.size() <= 3);
  CHECK(gm.total_count() == n + 1);
  ExactNumber total;
  for (const auto& [len, cnt] : gm.gaps) total += len * ExactNumber(cnt);
  CHECK(total == ExactNumber(1));
}

TEST_CASE("rational alpha saturates at its denominator") {
  GapMultiset gm = three_gaps(ExactNumber::rational(3, 7), Int(1000));
  REQUIRE(gm.gaps.size() == 1);
  CHECK(gm.gaps[0].first == ExactNumber::rational(1, 7));
  CHECK(gm.gaps[0].second == 7);
}

TEST_CASE("kurzweil exponent flags bounded quotients") {
  KurzweilReport rep = kurzweil_exponent(ExactNumber::quadratic(-1, 1, 2, 5), 20);
  CHECK(rep.max_quotient == 1);
  CHECK_FALSE(rep.terminated);
  // q_k ~ phi^k so log(q_k)/k -> log(phi) ~ 0.4812
  CHECK(rep.exponent.lo > ExactNumber::rational(2, 5));
  CHECK(rep.exponent.hi < ExactNumber::rational(3, 5));
  KurzweilReport rat = kurzweil_exponent(ExactNumber::rational(5, 8), 20);
  CHECK(rat.terminated);
}

TEST_CASE("rotation iet wraps correctly") {
  Iet t = rotation_iet(ExactNumber::rational(2, 5));
  CHECK(t.apply(ExactNumber(0)) == ExactNumber::rational(2, 5));
  CHECK(t.apply(ExactNumber::rational(4, 5)) == ExactNumber::rational(1, 5));
  CHECK_THROWS_AS(rotation_iet(ExactNumber(1)), InvalidParamsError);
  CHECK_THROWS_AS(rotation_iet(ExactNumber(0)), InvalidParamsError);
}
