#pragma once

// Brute-force reference implementations.  Nothing here calls the slipface
// engine; finite permutations are handled as plain one-line arrays.

#include <algorithm>
#include <numeric>
#include <vector>

#include "demaz/permutation.hpp"
#include "demaz/slipface.hpp"

namespace demaz::oracle {

// Values w[0..d-1] are the images of 1..d.
using OneLine = std::vector<int>;
using Table = std::vector<std::vector<Int>>;  // indexed [a-1][b-1], a, b in 1..d+1

inline std::vector<OneLine> all_perms(int d) {
  OneLine w(static_cast<std::size_t>(d));
  std::iota(w.begin(), w.end(), 1);
  std::vector<OneLine> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline OneLine to_one_line(const Permutation& p, int d) {
  OneLine w;
  for (int n = 1; n <= d; ++n) w.push_back(static_cast<int>(p(n)));
  for (Int n = std::min<Int>(p.lo(), 0) - p.period(); n <= std::max<Int>(p.hi(), d + 1) + p.period(); ++n)
    if ((n < 1 || n > d) && p(n) != n) throw Error(Errc::invalid_argument, "permutation moves points outside 1..d");
  return w;
}

inline Permutation from_one_line(const OneLine& w) {
  return make_one_line(std::vector<Int>(w.begin(), w.end()), 1);
}

inline OneLine ol_compose(const OneLine& x, const OneLine& y) {
  OneLine r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[static_cast<std::size_t>(y[i] - 1)];
  return r;
}

inline OneLine ol_inverse(const OneLine& x) {
  OneLine r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[static_cast<std::size_t>(x[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

inline std::vector<std::pair<int, int>> ol_inversions(const OneLine& x) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] > x[j]) out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return out;
}

// Literal count of #{n >= b : w(n) < a} for a, b in 1..d+1.
inline Table ol_table(const OneLine& w) {
  const int d = static_cast<int>(w.size());
  Table t(static_cast<std::size_t>(d + 1), std::vector<Int>(static_cast<std::size_t>(d + 1), 0));
  for (int a = 1; a <= d + 1; ++a)
    for (int b = 1; b <= d + 1; ++b) {
      Int c = 0;
      for (int n = b; n <= d; ++n)
        if (w[static_cast<std::size_t>(n - 1)] < a) ++c;
      t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = c;
    }
  return t;
}

inline bool ol_bruhat_leq(const OneLine& x, const OneLine& y) {
  Table tx = ol_table(x), ty = ol_table(y);
  for (std::size_t i = 0; i < tx.size(); ++i)
    for (std::size_t j = 0; j < tx.size(); ++j)
      if (tx[i][j] > ty[i][j]) return false;
  return true;
}

inline OneLine ol_from_table(const Table& t) {
  const int d = static_cast<int>(t.size()) - 1;
  OneLine w(static_cast<std::size_t>(d), 0);
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; };
  for (int b = 1; b <= d; ++b)
    for (int a = 1; a <= d; ++a)
      if (at(a + 1, b) - at(a, b) - at(a + 1, b + 1) + at(a, b + 1) == 1) w[static_cast<std::size_t>(b - 1)] = a;
  return w;
}

inline OneLine ol_star(const OneLine& x, const OneLine& y) {
  Table tx = ol_table(x), ty = ol_table(y), r = tx;
  const std::size_t n = tx.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Int best = tx[a][0] + ty[0][b];
      for (std::size_t l = 1; l < n; ++l) best = std::min(best, tx[a][l] + ty[l][b]);
      r[a][b] = best;
    }
  return ol_from_table(r);
}

inline Permutation oracle_star_sd(const Permutation& x, const Permutation& y, int d) {
  return from_one_line(ol_star(to_one_line(x, d), to_one_line(y, d)));
}

inline std::vector<OneLine> ol_below(const OneLine& x) {
  std::vector<OneLine> out;
  for (auto& w : all_perms(static_cast<int>(x.size())))
    if (ol_bruhat_leq(w, x)) out.push_back(w);
  return out;
}

inline std::vector<OneLine> ol_above(const OneLine& x) {
  std::vector<OneLine> out;
  for (auto& w : all_perms(static_cast<int>(x.size())))
    if (ol_bruhat_leq(x, w)) out.push_back(w);
  return out;
}

// Unique maximum (or minimum) of a family in Bruhat order.
inline OneLine ol_extreme(std::vector<OneLine> family, bool want_max) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  auto above = [&](const OneLine& u, const OneLine& v) { return want_max ? ol_bruhat_leq(v, u) : ol_bruhat_leq(u, v); };
  OneLine best = family.front();
  for (auto& w : family)
    if (above(w, best)) best = w;
  for (auto& w : family)
    if (!above(best, w)) throw Error(Errc::theorem_violation, "family has no unique extreme element");
  return best;
}

inline OneLine ol_greedy_max(const OneLine& x, const OneLine& y) {
  std::vector<OneLine> products;
  auto ys = ol_below(y);
  for (auto& x1 : ol_below(x))
    for (auto& y1 : ys) products.push_back(ol_compose(x1, y1));
  return ol_extreme(std::move(products), true);
}

// min { x1 y1^-1 : x1 >= x, y1 <= y }
inline OneLine ol_stingy_min(const OneLine& x, const OneLine& y) {
  std::vector<OneLine> products;
  auto ys = ol_below(y);
  for (auto& x1 : ol_above(x))
    for (auto& y1 : ys) products.push_back(ol_compose(x1, ol_inverse(y1)));
  return ol_extreme(std::move(products), false);
}

// x <| y = min { g : g * y^-1 >= x }
inline OneLine ol_tll_min(const OneLine& x, const OneLine& y) {
  std::vector<OneLine> fam;
  OneLine yi = ol_inverse(y);
  for (auto& g : all_perms(static_cast<int>(x.size())))
    if (ol_bruhat_leq(x, ol_star(g, yi))) fam.push_back(g);
  return ol_extreme(std::move(fam), false);
}

// x |> y = min { g : x^-1 * g >= y }
inline OneLine ol_tlr_min(const OneLine& x, const OneLine& y) {
  std::vector<OneLine> fam;
  OneLine xi = ol_inverse(x);
  for (auto& g : all_perms(static_cast<int>(x.size())))
    if (ol_bruhat_leq(y, ol_star(xi, g))) fam.push_back(g);
  return ol_extreme(std::move(fam), false);
}

inline Permutation oracle_greedy_max(const Permutation& x, const Permutation& y, int d) {
  return from_one_line(ol_greedy_max(to_one_line(x, d), to_one_line(y, d)));
}

inline Permutation oracle_stingy_min(const Permutation& x, const Permutation& y, int d) {
  return from_one_line(ol_stingy_min(to_one_line(x, d), to_one_line(y, d)));
}

// Left-to-right fold of x * sigma_{i1} * sigma_{i2} * ...: each step swaps
// positions i, i+1 exactly when they form an ascent.
inline Permutation oracle_star_word(const Permutation& x, const std::vector<Int>& word) {
  Int lo = x.lo(), hi = x.hi();
  for (Int i : word) {
    lo = std::min(lo, i - x.period());
    hi = std::max(hi, i + 1 + x.period());
  }
  std::vector<Int> vals;
  for (Int n = lo; n <= hi; ++n) vals.push_back(x(n));
  for (Int i : word) {
    auto& u = vals[static_cast<std::size_t>(i - lo)];
    auto& v = vals[static_cast<std::size_t>(i + 1 - lo)];
    if (u < v) std::swap(u, v);
  }
  return Permutation::from_raw({x.period(), lo, std::move(vals)});
}

// #{n >= b : x(n) < a} by scanning n in [b, max(a, b) + radius].  A hit in the
// upper half of the scan means the radius could be truncating the count.
inline Int oracle_eval_s(const Permutation& x, Int a, Int b, Int radius) {
  const Int top = std::max(a, b) + radius;
  Int count = 0;
  for (Int n = b; n <= top; ++n)
    if (x(n) < a) {
      if (n > top - radius / 2) throw Error(Errc::invalid_argument, "scan radius too small");
      ++count;
    }
  return count;
}

// min over l in a wide window of s(a, l) + t(l, b), no corner pruning.
inline Int oracle_minplus(const Slipface& s, const Slipface& t, Int a, Int b, Int radius) {
  Int best = s(a, b) + t(b, b);
  for (Int l = std::min(a, b) - radius; l <= std::max(a, b) + radius; ++l) best = std::min(best, s(a, l) + t(l, b));
  return best;
}

}  // namespace demaz::oracle
