#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "demaz/demaz.hpp"
#include "demaz/oracle.hpp"

namespace demaz::testing {

using Rng = std::mt19937_64;

inline Permutation sym(std::vector<Int> w) { return make_one_line(w, 1); }

inline Permutation random_sd(Rng& rng, int d) {
  std::vector<Int> w(static_cast<std::size_t>(d));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return sym(w);
}

// Window alpha(0..k-1) = a shuffled residue system with offsets in [-1, 1].
inline Permutation random_affine(Rng& rng, Int k) {
  std::vector<Int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 0);
  std::shuffle(w.begin(), w.end(), rng);
  std::uniform_int_distribution<Int> off(-1, 1);
  for (auto& v : w) v += k * off(rng);
  return make_affine(w, k);
}

inline Permutation random_gamma(Rng& rng, Int top = 3) {
  std::uniform_int_distribution<Int> u(0, top);
  return make_gamma(u(rng), u(rng));
}

inline Permutation random_shift(Rng& rng) {
  std::uniform_int_distribution<Int> u(-2, 2);
  return make_shift(u(rng));
}

// Pool used by the mixed property checks.
inline Permutation random_base(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return random_sd(rng, std::uniform_int_distribution<int>(1, 5)(rng));
    case 1: return random_shift(rng);
    case 2: return random_affine(rng, std::uniform_int_distribution<Int>(2, 3)(rng));
    case 3: return random_gamma(rng);
    default: return make_sigma_set(GeneratorSet::residue(std::uniform_int_distribution<Int>(0, 2)(rng), 2));
  }
}

inline Permutation random_mixed(Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return star(random_base(rng), random_base(rng));
  return random_base(rng);
}

inline std::vector<Permutation> all_sd(int d) {
  std::vector<Permutation> out;
  for (auto& w : oracle::all_perms(d)) out.push_back(oracle::from_one_line(w));
  return out;
}

}  // namespace demaz::testing
