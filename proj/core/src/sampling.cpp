#include "ietk/sampling.hpp"

#include <algorithm>
#include <set>

#include "ietk/errors.hpp"

namespace ietk {

Permutation sample_irreducible_permutation(int d, SplitMix64& rng) {
  std::vector<int> img(d);
  // Rejection: irreducible permutations are a positive fraction of S_d for
  // every d >= 2, so this terminates quickly.
  while (true) {
    for (int i = 0; i < d; ++i) img[i] = i + 1;
    for (int i = d - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(img[i], img[j]);
    }
    Permutation pi(img);
    if (pi.is_irreducible()) return pi;
  }
}

Iet sample_random_iet(int d, long q, SplitMix64& rng) {
  if (d < 2) throw InvalidParamsError("need d >= 2");
  if (q < d) throw InvalidParamsError("need Q >= d");
  // Uniform composition of Q into d positive parts: d-1 distinct cut points
  // in {1, ..., Q-1}.
  std::set<long> cuts;
  while (static_cast<int>(cuts.size()) < d - 1)
    cuts.insert(1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(q - 1))));
  std::vector<long> c(cuts.begin(), cuts.end());
  c.push_back(q);
  std::vector<ExactNumber> lengths;
  long prev = 0;
  for (long cut : c) {
    lengths.push_back(ExactNumber::rational(cut - prev, q));
    prev = cut;
  }
  Permutation pi = sample_irreducible_permutation(d, rng);
  return Iet(std::move(lengths), std::move(pi));
}

Iet sample_random_iet(int d, long q, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_random_iet(d, q, rng);
}

}  // namespace ietk
