#pragma once

#include <vector>

#include "demaz/order.hpp"
#include "demaz/permutation.hpp"
#include "demaz/slipface.hpp"

namespace demaz {

inline Permutation star(const Permutation& x, const Permutation& y, const Limits& lim = {}) {
  return sf_to_perm(sf_star(sf_from_perm(x), sf_from_perm(y), lim), lim);
}

inline Permutation tll(const Permutation& x, const Permutation& y, const Limits& lim = {}) {
  return sf_to_perm(sf_tll(sf_from_perm(x), sf_from_perm(y), lim), lim);
}

inline Permutation tlr(const Permutation& x, const Permutation& y, const Limits& lim = {}) {
  return sf_to_perm(sf_tlr(sf_from_perm(x), sf_from_perm(y), lim), lim);
}

namespace detail {

// {n in S : keep(x(n), x(n+1))} as an eventually periodic set.
template <class Keep>
GeneratorSet filter_generators(const Permutation& x, const GeneratorSet& S, Keep keep) {
  const Int K = lcm(S.period(), x.period());
  const Int lo = std::min(S.lo(), x.lo()) - 2 * K - 2;
  const Int hi = std::max(S.hi(), x.hi()) + 2 * K + 2;
  return GeneratorSet::from_predicate(K, lo, hi, [&](Int n) { return S.contains(n) && keep(x(n), x(n + 1)); });
}

}  // namespace detail

// x * sigma_S without going through slipfaces: only the ascents of x in S act.
inline Permutation star_sigma(const Permutation& x, const GeneratorSet& S, const Limits& lim = {}) {
  auto S1 = detail::filter_generators(x, S, [](Int u, Int v) { return u < v; });
  return compose(x, make_sigma_set(S1), lim);
}

// x <| sigma_S: only the descents of x in S act.
inline Permutation tll_sigma(const Permutation& x, const GeneratorSet& S, const Limits& lim = {}) {
  auto S2 = detail::filter_generators(x, S, [](Int u, Int v) { return u > v; });
  return compose(x, make_sigma_set(S2), lim);
}

// Inv(x) and Inv(y^-1) disjoint, i.e. the product x y is reduced.
inline bool is_reduced_pair(const Permutation& x, const Permutation& y) {
  Permutation yi = inverse(y);
  auto [lo, hi] = inversion_region(x, yi);
  bool ok = true;
  for_each_inversion(x, lo, hi, 2 * std::min(x.diff_bound(), yi.diff_bound()), [&](Int u, Int v) {
    if (ok && has_inversion(yi, u, v)) ok = false;
  });
  return ok;
}

// x1 = (x * y) y^-1, the largest left factor making the product reduced.
inline Permutation greedy_witness(const Permutation& x, const Permutation& y, const Limits& lim = {}) {
  Permutation x1 = compose(star(x, y, lim), inverse(y, lim), lim);
  if (!leq_chi(x1, x) || !is_reduced_pair(x1, y))
    throw Error(Errc::internal_inconsistency, "greedy factor failed certification");
  return x1;
}

// y1 with x <| y^-1 = x y1^-1 and y1 <=_chi y.
inline Permutation stingy_witness(const Permutation& x, const Permutation& y, const Limits& lim = {}) {
  Permutation y1 = compose(tlr(y, inverse(x, lim), lim), x, lim);
  if (!leq_chi(y1, y) || !(tll(x, inverse(y, lim), lim) == compose(x, inverse(y1, lim), lim)))
    throw Error(Errc::internal_inconsistency, "stingy factor failed certification");
  return y1;
}

struct ReductionWitness {
  Permutation alpha1;
  Permutation beta1;
  Permutation gamma;
  bool alpha1_leq_chi_alpha = false;
  bool beta1_leq_chi_beta = false;
  bool reduced = false;
  bool product_is_gamma = false;

  bool certified() const { return alpha1_leq_chi_alpha && beta1_leq_chi_beta && reduced && product_is_gamma; }
};

// Given x * y >= g with matching shifts, factor g = x1 y1 reduced with
// x1 <=_chi x and y1 <=_chi y.
inline ReductionWitness reduce(const Permutation& x, const Permutation& y, const Permutation& g,
                               const Limits& lim = {}) {
  if (x.shift() + y.shift() != g.shift())
    throw Error(Errc::not_dominated, "shift of target differs from the sum of shifts");
  auto dom = bruhat_leq(g, star(x, y, lim));
  if (!dom) throw Error(Errc::not_dominated, "target not below the Demazure product", dom.witness);
  ReductionWitness w;
  w.gamma = g;
  w.alpha1 = tll(g, inverse(y, lim), lim);
  w.beta1 = tlr(inverse(w.alpha1, lim), g, lim);
  w.alpha1_leq_chi_alpha = leq_chi(w.alpha1, x).holds;
  w.beta1_leq_chi_beta = leq_chi(w.beta1, y).holds;
  w.reduced = is_reduced_pair(w.alpha1, w.beta1);
  w.product_is_gamma = compose(w.alpha1, w.beta1, lim) == g;
  if (!w.certified()) throw Error(Errc::theorem_violation, "reduction witness failed certification");
  return w;
}

struct ReducedTuple {
  std::vector<Permutation> factors;
  std::vector<Permutation> suffix;  // suffix[n] = factors[n] o ... o factors.back()
};

inline ReducedTuple make_reduced_tuple(std::vector<Permutation> factors, const Limits& lim = {}) {
  ReducedTuple t{std::move(factors), {}};
  t.suffix.resize(t.factors.size());
  for (std::size_t i = t.factors.size(); i-- > 0;)
    t.suffix[i] = i + 1 == t.factors.size() ? t.factors[i] : compose(t.factors[i], t.suffix[i + 1], lim);
  return t;
}

inline bool is_reduced_tuple(const std::vector<Permutation>& factors, const Limits& lim = {}) {
  auto t = make_reduced_tuple(factors, lim);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (!is_reduced_pair(factors[i], t.suffix[i + 1])) return false;
  return true;
}

inline Permutation star_fold(const std::vector<Permutation>& factors, std::size_t from, const Limits& lim = {}) {
  Permutation acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > from;) acc = star(factors[i], acc, lim);
  return acc;
}

// Peel factors off the left: each step reduces (first, product of the rest).
inline ReducedTuple reduce_tuple(const std::vector<Permutation>& factors, const Permutation& g,
                                 const Limits& lim = {}) {
  if (factors.empty()) throw Error(Errc::invalid_argument, "empty tuple");
  std::vector<Permutation> out;
  Permutation target = g;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    auto w = reduce(factors[i], star_fold(factors, i + 1, lim), target, lim);
    out.push_back(w.alpha1);
    target = w.beta1;
  }
  auto last = leq_chi(target, factors.back());
  if (!last) throw Error(Errc::not_dominated, "target not below the Demazure product", last.witness);
  out.push_back(target);
  return make_reduced_tuple(std::move(out), lim);
}

}  // namespace demaz
