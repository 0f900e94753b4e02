#pragma once

#include "demaz/permutation.hpp"
#include "demaz/slipface.hpp"

namespace demaz {

// Bruhat order: pointwise comparison of slipfaces, decided on essential points.
inline Comparison bruhat_leq(const Permutation& x, const Permutation& y) {
  return sf_leq(sf_from_perm(x), sf_from_perm(y));
}

inline Comparison bruhat_leq_brute(const Permutation& x, const Permutation& y) {
  return sf_leq_brute(sf_from_perm(x), sf_from_perm(y));
}

inline Comparison leq_chi(const Permutation& x, const Permutation& y) {
  if (x.shift() != y.shift()) {
    auto r = bruhat_leq(x, y);
    return {false, r.holds ? std::optional<Cell>{} : r.witness};
  }
  return bruhat_leq(x, y);
}

struct WeakComparison {
  bool holds = true;
  std::optional<std::pair<Int, Int>> witness;  // inversion of x missing from y
  explicit operator bool() const { return holds; }
};

// Inv(x) subset of Inv(y).
inline WeakComparison weak_left_leq(const Permutation& x, const Permutation& y) {
  auto [lo, hi] = inversion_region(x, y);
  WeakComparison r;
  for_each_inversion(x, lo, hi, 2 * x.diff_bound(), [&](Int u, Int v) {
    if (r.holds && !has_inversion(y, u, v)) r = {false, std::pair{u, v}};
  });
  return r;
}

inline WeakComparison weak_right_leq(const Permutation& x, const Permutation& y) {
  return weak_left_leq(inverse(x), inverse(y));
}

}  // namespace demaz
