#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "demaz/core.hpp"

namespace demaz {

// Eventually periodic bijection of the integers, stored as a window of values
// on [lo, lo + size) together with a period k.  Outside the window the map is
// extended by translation:
//   n < lo : alpha(n) = alpha(n + m k) - m k   with n + m k in [lo, lo + k)
//   n > hi : alpha(n) = alpha(n - m k) + m k   with n - m k in (hi - k, hi]
struct RawPermutation {
  Int period = 1;
  Int lo = 0;
  std::vector<Int> vals;

  Int hi() const { return lo + static_cast<Int>(vals.size()) - 1; }
};

inline Int raw_apply(const RawPermutation& r, Int n) {
  const Int k = r.period;
  const Int hi = r.hi();
  if (n < r.lo) {
    Int m = ceil_div(r.lo - n, k);
    return r.vals[static_cast<std::size_t>(n + m * k - r.lo)] - m * k;
  }
  if (n > hi) {
    Int m = ceil_div(n - hi, k);
    return r.vals[static_cast<std::size_t>(n - m * k - r.lo)] + m * k;
  }
  return r.vals[static_cast<std::size_t>(n - r.lo)];
}

enum class ViolationKind { bad_period, window_too_short, residue_collision, duplicate_image, missing_preimage };

inline const char* violation_name(ViolationKind v) {
  switch (v) {
    case ViolationKind::bad_period: return "bad-period";
    case ViolationKind::window_too_short: return "window-too-short";
    case ViolationKind::residue_collision: return "residue-collision";
    case ViolationKind::duplicate_image: return "duplicate-image";
    case ViolationKind::missing_preimage: return "missing-preimage";
  }
  return "violation";
}

struct Violation {
  ViolationKind kind;
  Int where = 0;  // offending position or value
  std::string detail;
};

inline Int raw_diff_bound(const RawPermutation& r) {
  Int m = 0;
  for (std::size_t i = 0; i < r.vals.size(); ++i)
    m = std::max(m, iabs(r.vals[i] - (r.lo + static_cast<Int>(i))));
  return m;
}

// Bijectivity check.  The residue test covers the deep tails, injectivity is
// checked on a guard band of width 2M + 2k around the window, and every value
// near the window must have exactly one preimage.
inline std::vector<Violation> validate(const RawPermutation& r) {
  std::vector<Violation> out;
  if (r.period < 1) {
    out.push_back({ViolationKind::bad_period, r.period, "period must be positive"});
    return out;
  }
  const Int k = r.period;
  if (static_cast<Int>(r.vals.size()) < k) {
    out.push_back({ViolationKind::window_too_short, static_cast<Int>(r.vals.size()),
                   "window shorter than one period"});
    return out;
  }
  const Int hi = r.hi();
  auto residues = [&](Int start, const char* side) {
    std::vector<Int> seen(static_cast<std::size_t>(k), -1);
    for (Int n = start; n < start + k; ++n) {
      Int res = mod_pos(raw_apply(r, n), k);
      if (seen[static_cast<std::size_t>(res)] >= 0) {
        out.push_back({ViolationKind::residue_collision, n,
                       std::string(side) + " generator repeats residue " + std::to_string(res)});
        return;
      }
      seen[static_cast<std::size_t>(res)] = n;
    }
  };
  residues(r.lo, "left");
  residues(hi - k + 1, "right");

  const Int M = raw_diff_bound(r);
  const Int band_lo = r.lo - 2 * M - 2 * k;
  const Int band_hi = hi + 2 * M + 2 * k;
  std::unordered_map<Int, Int> preimage;
  preimage.reserve(static_cast<std::size_t>(band_hi - band_lo + 1));
  for (Int n = band_lo; n <= band_hi; ++n) {
    Int v = raw_apply(r, n);
    auto [it, fresh] = preimage.emplace(v, n);
    if (!fresh) {
      out.push_back({ViolationKind::duplicate_image, v,
                     "value " + std::to_string(v) + " hit at " + std::to_string(it->second) + " and " +
                         std::to_string(n)});
      return out;
    }
  }
  for (Int a = r.lo - M - k; a <= hi + M + k; ++a) {
    if (!preimage.count(a)) {
      out.push_back({ViolationKind::missing_preimage, a, "value " + std::to_string(a) + " has no preimage"});
      return out;
    }
  }
  return out;
}

class Permutation {
 public:
  // Identity.
  Permutation() : raw_{1, 0, {0}} { init_cache(); }

  static Permutation from_raw(RawPermutation r, const Limits& lim = {}) {
    if (r.vals.size() > lim.max_window)
      throw Error(Errc::resource_limit,
                  "window of " + std::to_string(r.vals.size()) + " entries exceeds cap " +
                      std::to_string(lim.max_window));
    auto v = validate(r);
    if (!v.empty())
      throw Error(Errc::not_a_bijection, std::string(violation_name(v.front().kind)) + ": " + v.front().detail);
    Permutation p;
    p.raw_ = std::move(r);
    p.init_cache();
    return p;
  }

  template <class F>
  static Permutation from_function(Int period, Int lo, Int hi, F&& f, const Limits& lim = {}) {
    if (hi - lo + 1 > static_cast<Int>(lim.max_window))
      throw Error(Errc::resource_limit, "window of " + std::to_string(hi - lo + 1) + " entries exceeds cap " +
                                            std::to_string(lim.max_window));
    RawPermutation r{period, lo, {}};
    r.vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int n = lo; n <= hi; ++n) r.vals.push_back(f(n));
    return from_raw(std::move(r), lim);
  }

  Int operator()(Int n) const { return raw_apply(raw_, n); }

  Int period() const { return raw_.period; }
  Int lo() const { return raw_.lo; }
  Int hi() const { return raw_.hi(); }
  std::span<const Int> values() const { return raw_.vals; }
  const RawPermutation& raw() const { return raw_; }

  Int shift() const { return chi_; }
  Int diff_bound() const { return bound_; }

 private:
  void init_cache();

  RawPermutation raw_;
  Int chi_ = 0;
  Int bound_ = 0;
};

// s_alpha(a, b) = #{ n >= b : alpha(n) < a }.
// Indices below a - M are always counted and indices at or above a + M never
// are, so only a strip of width 2M needs scanning.
inline Int eval_s(const Permutation& p, Int a, Int b) {
  const Int M = p.diff_bound();
  Int count = std::max<Int>(0, (a - M - 1) - b + 1);
  for (Int n = std::max(b, a - M); n <= a + M - 1; ++n)
    if (p(n) < a) ++count;
  return count;
}

// s_{alpha^-1}(b, a) = #{ n < b : alpha(n) >= a }, without building the inverse.
inline Int eval_s_inverse(const Permutation& p, Int b, Int a) {
  const Int M = p.diff_bound();
  Int count = std::max<Int>(0, (b - 1) - (a + M) + 1);
  for (Int n = a - M; n <= std::min(b - 1, a + M - 1); ++n)
    if (p(n) >= a) ++count;
  return count;
}

inline void Permutation::init_cache() {
  bound_ = raw_diff_bound(raw_);
  chi_ = eval_s(*this, 0, 0) - eval_s_inverse(*this, 0, 0);
}

inline Int apply(const Permutation& p, Int n) { return p(n); }
inline Int shift_of(const Permutation& p) { return p.shift(); }
inline Int diff_bound(const Permutation& p) { return p.diff_bound(); }
inline Int delta_s(const Permutation& p, Int a, Int b) { return p(b) == a ? 1 : 0; }

// Minimal period, then minimal window, for that period.
inline Permutation canonicalize(const Permutation& p) {
  const Int k = p.period();
  const Int lo = p.lo();
  const Int hi = p.hi();
  Int per = k;
  for (Int d = 1; d <= k; ++d) {
    if (k % d) continue;
    bool ok = true;
    for (Int m = lo - 2 * k; m < lo - k && ok; ++m) ok = p(m - d) == p(m) - d;
    for (Int m = hi + k + 1; m <= hi + 2 * k && ok; ++m) ok = p(m + d) == p(m) + d;
    if (ok) {
      per = d;
      break;
    }
  }
  std::optional<Int> first_left, last_right;
  for (Int m = lo - 2 * k; m <= hi + 2 * k; ++m) {
    if (!first_left && p(m - per) != p(m) - per) first_left = m;
    if (p(m + per) != p(m) + per) last_right = m;
  }
  Int nlo, nhi;
  if (!first_left && !last_right) {
    nlo = 0;
    nhi = per - 1;
  } else if (!first_left) {
    nhi = *last_right + per;
    nlo = nhi - per + 1;
  } else if (!last_right) {
    nlo = *first_left - per;
    nhi = nlo + per - 1;
  } else {
    nlo = *first_left - per;
    nhi = std::max(*last_right + per, nlo + per - 1);
  }
  RawPermutation r{per, nlo, {}};
  for (Int n = nlo; n <= nhi; ++n) r.vals.push_back(p(n));
  return Permutation::from_raw(std::move(r), Limits{std::max<std::size_t>(r.vals.size(), 1)});
}

inline bool operator==(const Permutation& x, const Permutation& y) {
  if (x.shift() != y.shift()) return false;
  Permutation cx = canonicalize(x), cy = canonicalize(y);
  return cx.period() == cy.period() && cx.lo() == cy.lo() &&
         std::equal(cx.values().begin(), cx.values().end(), cy.values().begin(), cy.values().end());
}

inline Permutation inverse(const Permutation& p, const Limits& lim = {}) {
  const Int k = p.period(), M = p.diff_bound();
  const Int lo = p.lo() - M - k, hi = p.hi() + M + k;
  if (hi - lo + 1 > static_cast<Int>(lim.max_window))
    throw Error(Errc::resource_limit, "inverse window exceeds cap");
  std::vector<Int> vals(static_cast<std::size_t>(hi - lo + 1));
  for (Int n = lo - M; n <= hi + M; ++n) {
    Int v = p(n);
    if (v >= lo && v <= hi) vals[static_cast<std::size_t>(v - lo)] = n;
  }
  return canonicalize(Permutation::from_raw({k, lo, std::move(vals)}, lim));
}

// (x o y)(n) = x(y(n)).
inline Permutation compose(const Permutation& x, const Permutation& y, const Limits& lim = {}) {
  const Int K = lcm(x.period(), y.period());
  const Int My = y.diff_bound();
  const Int lo = std::min(y.lo(), x.lo() - My) - K;
  const Int hi = std::max(y.hi(), x.hi() + My) + K;
  return canonicalize(Permutation::from_function(K, lo, hi, [&](Int n) { return x(y(n)); }, lim));
}

// ---- constructors -------------------------------------------------------

inline Permutation make_shift(Int chi) { return Permutation::from_raw({1, 0, {-chi}}); }

inline Permutation identity() { return Permutation(); }

// One-line notation: values[i] is the image of off + i; the values must be a
// rearrangement of off .. off + d - 1.  Fixed outside that block.
inline Permutation make_one_line(const std::vector<Int>& values, Int off = 1) {
  const Int d = static_cast<Int>(values.size());
  std::vector<char> seen(values.size(), 0);
  for (Int v : values) {
    if (v < off || v >= off + d || seen[static_cast<std::size_t>(v - off)])
      throw Error(Errc::invalid_one_line, "values must rearrange " + std::to_string(off) + ".." +
                                              std::to_string(off + d - 1));
    seen[static_cast<std::size_t>(v - off)] = 1;
  }
  RawPermutation r{1, off - 1, {}};
  r.vals.push_back(off - 1);
  r.vals.insert(r.vals.end(), values.begin(), values.end());
  r.vals.push_back(off + d);
  return canonicalize(Permutation::from_raw(std::move(r)));
}

// Affine permutation with alpha(n + k) = alpha(n) + k, given alpha(0..k-1).
inline Permutation make_affine(const std::vector<Int>& window, Int k) {
  if (k < 1 || static_cast<Int>(window.size()) != k)
    throw Error(Errc::invalid_argument, "affine window must have exactly k entries");
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (Int v : window) {
    Int r = mod_pos(v, k);
    if (seen[static_cast<std::size_t>(r)])
      throw Error(Errc::not_a_bijection, "affine window repeats residue " + std::to_string(r));
    seen[static_cast<std::size_t>(r)] = 1;
  }
  return canonicalize(Permutation::from_raw({k, 0, window}));
}

// Order-preserving on four blocks:
//   (-inf, -m-1] -> (-inf, -n],  [-m, -1] -> [1, m],
//   [0, n-1] -> [-n+1, 0],       [n, inf) -> [m+1, inf).
inline Permutation make_gamma(Int m, Int n) {
  if (m < 0 || n < 0) throw Error(Errc::invalid_argument, "gamma needs m, n >= 0");
  auto g = [m, n](Int x) {
    if (x <= -m - 1) return x + m + 1 - n;
    if (x <= -1) return x + m + 1;
    if (x <= n - 1) return x - n + 1;
    return x + m + 1 - n;
  };
  return canonicalize(Permutation::from_function(1, -m - 1, n, g));
}

// ---- generator sets -----------------------------------------------------

// Eventually periodic subset of the integers, same window/tail convention as
// RawPermutation.
class GeneratorSet {
 public:
  GeneratorSet() : period_(1), lo_(0), bits_{0} {}

  static GeneratorSet finite(std::vector<Int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) return GeneratorSet();
    GeneratorSet g;
    g.period_ = 1;
    g.lo_ = elems.front() - 1;
    g.bits_.assign(static_cast<std::size_t>(elems.back() - elems.front() + 3), 0);
    for (Int e : elems) g.bits_[static_cast<std::size_t>(e - g.lo_)] = 1;
    g.check_admissible();
    return g;
  }

  static GeneratorSet residue(Int n, Int k) {
    if (k < 2) throw Error(Errc::invalid_generator_set, "residue class needs modulus >= 2");
    GeneratorSet g;
    g.period_ = k;
    g.lo_ = 0;
    g.bits_.assign(static_cast<std::size_t>(k), 0);
    g.bits_[static_cast<std::size_t>(mod_pos(n, k))] = 1;
    return g;
  }

  template <class F>
  static GeneratorSet from_predicate(Int period, Int lo, Int hi, F&& in) {
    GeneratorSet g;
    g.period_ = period;
    g.lo_ = lo;
    g.bits_.clear();
    for (Int n = lo; n <= hi; ++n) g.bits_.push_back(in(n) ? 1 : 0);
    g.check_admissible();
    return g;
  }

  bool contains(Int n) const {
    const Int hi = this->hi();
    if (n < lo_) n += ceil_div(lo_ - n, period_) * period_;
    if (n > hi) n -= ceil_div(n - hi, period_) * period_;
    return bits_[static_cast<std::size_t>(n - lo_)] != 0;
  }

  Int period() const { return period_; }
  Int lo() const { return lo_; }
  Int hi() const { return lo_ + static_cast<Int>(bits_.size()) - 1; }

 private:
  void check_admissible() const {
    for (Int n = lo_ - period_ - 1; n <= hi() + period_; ++n)
      if (contains(n) && contains(n + 1))
        throw Error(Errc::invalid_generator_set,
                    "contains consecutive integers " + std::to_string(n) + " and " + std::to_string(n + 1));
  }

  Int period_;
  Int lo_;
  std::vector<char> bits_;
};

// Product of the commuting transpositions (n n+1), n in S.
inline Permutation make_sigma_set(const GeneratorSet& S) {
  const Int P = S.period();
  auto f = [&](Int n) {
    if (S.contains(n)) return n + 1;
    if (S.contains(n - 1)) return n - 1;
    return n;
  };
  return canonicalize(Permutation::from_function(P, S.lo() - P - 1, S.hi() + P + 1, f));
}

// ---- inversions ---------------------------------------------------------

inline bool has_inversion(const Permutation& p, Int u, Int v) { return u < v && p(u) > p(v); }

// Calls f(u, v) for every inversion with u in [ulo, uhi] and v - u <= gap.
template <class F>
void for_each_inversion(const Permutation& p, Int ulo, Int uhi, Int gap, F&& f) {
  for (Int u = ulo; u <= uhi; ++u) {
    const Int pu = p(u);
    for (Int v = u + 1; v <= u + gap; ++v)
      if (pu > p(v)) f(u, v);
  }
}

// Range of first coordinates that represents every inversion of either
// permutation up to simultaneous translation by the common period.
inline std::pair<Int, Int> inversion_region(const Permutation& x, const Permutation& y) {
  const Int K = lcm(x.period(), y.period());
  const Int M = std::max(x.diff_bound(), y.diff_bound());
  return {std::min(x.lo(), y.lo()) - 2 * M - K, std::max(x.hi(), y.hi()) + K};
}

inline bool is_finitary(const Permutation& p) { return canonicalize(p).period() == 1; }

inline Int inv_count(const Permutation& p) {
  Permutation c = canonicalize(p);
  if (c.period() != 1) throw Error(Errc::infinite_inversions, "permutation has infinitely many inversions");
  const Int M = c.diff_bound();
  Int count = 0;
  for_each_inversion(c, c.lo() - 2 * M, c.hi(), 2 * M, [&](Int, Int) { ++count; });
  return count;
}

}  // namespace demaz
