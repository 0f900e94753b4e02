#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "demaz/core.hpp"
#include "demaz/permutation.hpp"

namespace demaz {

struct Box {
  Int a_lo = 0, a_hi = -1, b_lo = 0, b_hi = -1;

  Int width() const { return a_hi - a_lo + 1; }
  Int height() const { return b_hi - b_lo + 1; }
  bool contains(Int a, Int b) const { return a >= a_lo && a <= a_hi && b >= b_lo && b <= b_hi; }
  Box inflate(Int m) const { return {a_lo - m, a_hi + m, b_lo - m, b_hi + m}; }
  friend bool operator==(const Box&, const Box&) = default;
};

inline Box square_hull(const Box& x, const Box& y) {
  Int lo = std::min({x.a_lo, x.b_lo, y.a_lo, y.b_lo});
  Int hi = std::max({x.a_hi, x.b_hi, y.a_hi, y.b_hi});
  return {lo, hi, lo, hi};
}

// Raw fields of a slipface.  Values are stored row-major by a.
//
// Evaluation order: within |a - b| < band the stored value is used when the
// cell is in the box, otherwise the cell is moved along its diagonal by
// multiples of the period until it lands in the box (from above or from
// below, so the two ends of a diagonal may carry different data).  At
// |a - b| >= band the value is max(0, chi + a - b).
struct SlipfaceData {
  Int chi = 0;
  Int period = 1;
  Int band = 0;
  Box box;
  std::vector<Int> values;

  Int& at(Int a, Int b) { return values[static_cast<std::size_t>((a - box.a_lo) * box.height() + (b - box.b_lo))]; }
  Int at(Int a, Int b) const {
    return values[static_cast<std::size_t>((a - box.a_lo) * box.height() + (b - box.b_lo))];
  }
};

inline Int asymptote(Int chi, Int a, Int b) { return std::max<Int>(0, chi + a - b); }

// b-range of diagonal a - b = d inside the box.
inline std::pair<Int, Int> diagonal_range(const Box& box, Int d) {
  return {std::max(box.b_lo, box.a_lo - d), std::min(box.b_hi, box.a_hi - d)};
}

inline Int raw_eval(const SlipfaceData& s, Int a, Int b) {
  const Int d = a - b;
  if (iabs(d) >= s.band) return asymptote(s.chi, a, b);
  if (s.box.contains(a, b)) return s.at(a, b);
  auto [bs, be] = diagonal_range(s.box, d);
  if (b > be) {
    Int t = ceil_div(b - be, s.period) * s.period;
    return s.at(a - t, b - t);
  }
  Int t = ceil_div(bs - b, s.period) * s.period;
  return s.at(a + t, b + t);
}

struct SlipfaceViolation {
  std::string kind;  // shape, coverage, band, S1, S2
  Cell where;
  std::string detail;
};

// Cells whose values are not forced by the band rule, with a margin around
// the box so that seams between stored and translated data are covered.
template <class F>
void for_each_frame_cell(const Box& box, Int band, Int margin, F&& f) {
  Box g = box.inflate(margin);
  for (Int a = g.a_lo; a <= g.a_hi; ++a)
    for (Int b = std::max(g.b_lo, a - band - 2); b <= std::min(g.b_hi, a + band + 2); ++b) f(a, b);
}

inline Int effective_band(const SlipfaceData& s) { return std::max(s.band, iabs(s.chi)); }

inline std::vector<SlipfaceViolation> sf_validate(const SlipfaceData& s) {
  std::vector<SlipfaceViolation> out;
  if (s.period < 1 || s.band < 0 || s.box.width() < 1 || s.box.height() < 1 ||
      static_cast<Int>(s.values.size()) != s.box.width() * s.box.height()) {
    out.push_back({"shape", {}, "period, band or box dimensions inconsistent with stored values"});
    return out;
  }
  for (Int d = -s.band + 1; d < s.band; ++d) {
    auto [bs, be] = diagonal_range(s.box, d);
    if (be - bs + 1 < s.period) {
      out.push_back({"coverage", {bs + d, bs},
                     "diagonal " + std::to_string(d) + " holds fewer cells than one period"});
      return out;
    }
  }
  for (Int a = s.box.a_lo; a <= s.box.a_hi; ++a)
    for (Int b = s.box.b_lo; b <= s.box.b_hi; ++b) {
      if (s.at(a, b) < 0) out.push_back({"S2", {a, b}, "negative value"});
      if (iabs(a - b) >= s.band && s.at(a, b) != asymptote(s.chi, a, b))
        out.push_back({"band", {a, b}, "stored value differs from asymptote beyond band"});
      if (out.size() > 16) return out;
    }
  for_each_frame_cell(s.box, effective_band(s), s.period + 2, [&](Int a, Int b) {
    if (out.size() > 16) return;
    Int v = raw_eval(s, a, b);
    Int right = raw_eval(s, a + 1, b) - v;
    Int down = v - raw_eval(s, a, b + 1);
    if (right < 0 || right > 1 || down < 0 || down > 1)
      out.push_back({"S1", {a, b}, "step out of [0, 1]"});
    if (v < asymptote(s.chi, a, b)) out.push_back({"S2", {a, b}, "below asymptote"});
  });
  return out;
}

class Slipface {
 public:
  Slipface() : Slipface(SlipfaceData{0, 1, 0, {0, 0, 0, 0}, {0}}) {}

  explicit Slipface(SlipfaceData d) : d_(std::move(d)) {
    auto v = sf_validate(d_);
    if (!v.empty())
      throw Error(Errc::not_a_slipface, v.front().kind + " at (" + std::to_string(v.front().where.a) + "," +
                                            std::to_string(v.front().where.b) + "): " + v.front().detail,
                  v.front().where);
  }

  Int operator()(Int a, Int b) const { return raw_eval(d_, a, b); }
  Int chi() const { return d_.chi; }
  Int period() const { return d_.period; }
  Int band() const { return d_.band; }
  // Band that also bounds |chi|; all sizing uses this one.
  Int reach() const { return effective_band(d_); }
  const Box& box() const { return d_.box; }
  const SlipfaceData& data() const { return d_; }

 private:
  SlipfaceData d_;
};

inline Int sf_eval(const Slipface& s, Int a, Int b) { return s(a, b); }

inline Int sf_delta(const Slipface& s, Int a, Int b) { return s(a + 1, b) - s(a, b) - s(a + 1, b + 1) + s(a, b + 1); }

inline Slipface sf_from_perm(const Permutation& p) {
  const Int k = p.period(), M = p.diff_bound();
  const Int band = M + 1;
  const Int pad = band + k + 1;
  SlipfaceData d{p.shift(), k, band, {p.lo() - pad, p.hi() + pad, p.lo() - pad, p.hi() + pad}, {}};
  d.values.resize(static_cast<std::size_t>(d.box.width() * d.box.height()));
  for (Int a = d.box.a_lo; a <= d.box.a_hi; ++a)
    for (Int b = d.box.b_lo; b <= d.box.b_hi; ++b) d.at(a, b) = eval_s(p, a, b);
  return Slipface(std::move(d));
}

// s_dual(a, b) = s(b, a) - chi - b + a.
inline Slipface sf_dual(const Slipface& s) {
  const auto& src = s.data();
  SlipfaceData d{-src.chi, src.period, src.band, {src.box.b_lo, src.box.b_hi, src.box.a_lo, src.box.a_hi}, {}};
  d.values.resize(src.values.size());
  for (Int a = d.box.a_lo; a <= d.box.a_hi; ++a)
    for (Int b = d.box.b_lo; b <= d.box.b_hi; ++b) d.at(a, b) = src.at(b, a) - src.chi - b + a;
  return Slipface(std::move(d));
}

// Cells on which two slipfaces must be compared: every other cell is either
// governed by both asymptotes or a common-period translate of one of these.
template <class F>
void for_each_compare_cell(const Slipface& s, const Slipface& t, F&& f) {
  const Int K = lcm(s.period(), t.period());
  const Int band = std::max(s.reach(), t.reach());
  Box region = square_hull(s.box(), t.box());
  for_each_frame_cell(region, band, K + 1, f);
}

inline bool sf_equal(const Slipface& s, const Slipface& t) {
  if (s.chi() != t.chi()) return false;
  bool eq = true;
  for_each_compare_cell(s, t, [&](Int a, Int b) {
    if (eq && s(a, b) != t(a, b)) eq = false;
  });
  return eq;
}

inline bool operator==(const Slipface& s, const Slipface& t) { return sf_equal(s, t); }

struct SubmodularResult {
  bool holds = true;
  std::optional<Cell> witness;
  explicit operator bool() const { return holds; }
};

inline SubmodularResult sf_is_submodular(const Slipface& s) {
  SubmodularResult r;
  for_each_frame_cell(s.box(), s.reach(), s.period() + 2, [&](Int a, Int b) {
    if (r.holds && sf_delta(s, a, b) < 0) r = {false, Cell{a, b}};
  });
  return r;
}

// Recover the permutation whose graph is the support of the mixed difference.
inline Permutation sf_to_perm(const Slipface& s, const Limits& lim = {}) {
  auto sub = sf_is_submodular(s);
  if (!sub)
    throw Error(Errc::not_a_permutation,
                "mixed difference negative at (" + std::to_string(sub.witness->a) + "," +
                    std::to_string(sub.witness->b) + ")",
                sub.witness);
  const Int K = s.period(), R = s.reach();
  const Int lo = s.box().b_lo - R - K - 2, hi = s.box().b_hi + R + K + 2;
  if (hi - lo + 1 > static_cast<Int>(lim.max_window)) throw Error(Errc::resource_limit, "window exceeds cap");
  RawPermutation raw{K, lo, {}};
  for (Int b = lo; b <= hi; ++b) {
    Int found = 0, img = 0;
    for (Int a = b - R - 2; a <= b + R + 2; ++a) {
      Int d = sf_delta(s, a, b);
      if (d == 1) {
        ++found;
        img = a;
      } else if (d != 0) {
        found = 2;
      }
    }
    if (found != 1)
      throw Error(Errc::inconsistent_slipface, "column " + std::to_string(b) + " has no unique unit", Cell{img, b});
    raw.vals.push_back(img);
  }
  Permutation p;
  try {
    p = Permutation::from_raw(std::move(raw), lim);
  } catch (const Error& e) {
    if (e.code() == Errc::resource_limit) throw;
    throw Error(Errc::inconsistent_slipface, std::string("unit cells do not form a bijection: ") + e.what());
  }
  if (!sf_equal(sf_from_perm(p), s))
    throw Error(Errc::inconsistent_slipface, "reconstructed permutation does not reproduce the slipface");
  return canonicalize(p);
}

// ---- rank grids ---------------------------------------------------------

// A table indexed like a slipface.  The table must be 0 at a - b <= -band and
// chi + a - b at a - b >= band wherever it has entries.
inline Slipface sf_from_rank_grid(const SlipfaceData& grid) {
  for (Int a = grid.box.a_lo; a <= grid.box.a_hi; ++a)
    for (Int b = grid.box.b_lo; b <= grid.box.b_hi; ++b) {
      Int d = a - b, v = grid.at(a, b);
      if ((d <= -grid.band && v != 0) || (d >= grid.band && v != grid.chi + d))
        throw Error(Errc::asymptote_mismatch,
                    "entry at (" + std::to_string(a) + "," + std::to_string(b) + ") off its asymptote", Cell{a, b});
    }
  auto v = sf_validate(grid);
  if (!v.empty())
    throw Error(Errc::not_a_slipface, v.front().kind + ": " + v.front().detail, v.front().where);
  return Slipface(grid);
}

// ---- essential sets -----------------------------------------------------

struct EssPoint {
  Int a = 0, b = 0, value = 0;
  friend bool operator==(const EssPoint&, const EssPoint&) = default;
};

struct EssSet {
  std::vector<EssPoint> points;
  bool periodic = false;  // points beyond the box repeat with the period
  Int period = 1;
};

inline bool is_essential(const Slipface& s, Int a, Int b) {
  Int v = s(a, b);
  return s(a - 1, b) < v && v == s(a + 1, b) && s(a, b + 1) < v && v == s(a, b - 1);
}

template <class F>
void for_each_essential(const Slipface& s, const Box& region, F&& f) {
  for_each_frame_cell(region, s.reach(), 0, [&](Int a, Int b) {
    if (is_essential(s, a, b)) f(EssPoint{a, b, s(a, b)});
  });
}

inline EssSet ess_set(const Slipface& s) {
  EssSet out;
  out.period = s.period();
  for_each_essential(s, s.box().inflate(s.period()), [&](const EssPoint& e) {
    out.points.push_back(e);
    if (!s.box().contains(e.a, e.b)) out.periodic = true;
  });
  return out;
}

// Essential points read directly off the permutation.
inline std::vector<EssPoint> ess_of_perm(const Permutation& p, const Box& region) {
  Permutation q = inverse(p);
  std::vector<EssPoint> out;
  for (Int a = region.a_lo; a <= region.a_hi; ++a)
    for (Int b = region.b_lo; b <= region.b_hi; ++b)
      if (q(a - 1) >= b && b > q(a) && p(b - 1) >= a && a > p(b)) out.push_back({a, b, eval_s(p, a, b)});
  return out;
}

// ---- comparison ---------------------------------------------------------

struct Comparison {
  bool holds = true;
  std::optional<Cell> witness;  // a cell with s(a,b) > t(a,b) when !holds
  explicit operator bool() const { return holds; }
};

// When chi_s > chi_t the asymptotes already disagree far below the diagonal.
inline Comparison asymptotic_witness(const Slipface& s, const Slipface& t) {
  Int d = std::max(s.reach(), t.reach()) + 1;
  return {false, Cell{d, 0}};
}

inline Comparison sf_leq_brute(const Slipface& s, const Slipface& t) {
  if (s.chi() > t.chi()) return asymptotic_witness(s, t);
  Comparison r;
  for_each_compare_cell(s, t, [&](Int a, Int b) {
    if (r.holds && s(a, b) > t(a, b)) r = {false, Cell{a, b}};
  });
  return r;
}

// Pointwise comparison checked only at essential points of s.
inline Comparison sf_leq(const Slipface& s, const Slipface& t) {
  if (s.chi() > t.chi()) return asymptotic_witness(s, t);
  const Int K = lcm(s.period(), t.period());
  Comparison r;
  for_each_essential(s, square_hull(s.box(), t.box()).inflate(K + 1), [&](const EssPoint& e) {
    if (r.holds && e.value > t(e.a, e.b)) r = {false, Cell{e.a, e.b}};
  });
  return r;
}

// ---- Demazure operations on slipfaces -------------------------------------

namespace detail {

// Positions l with u(l-1) = u(l) < u(l+1): where the optimum over l can sit.
template <class U>
std::vector<Int> corner_set(U&& u, Int centre, Int reach) {
  std::vector<Int> out;
  Int prev = u(centre - reach - 3), cur = u(centre - reach - 2);
  for (Int l = centre - reach - 2; l <= centre + reach + 2; ++l) {
    Int next = u(l + 1);
    if (prev == cur && cur < next) out.push_back(l);
    prev = cur;
    cur = next;
  }
  return out;
}

enum class Op { star, tll, tlr };

inline Int combine(Op op, const Slipface& s, const Slipface& t, Int a, Int b, const std::vector<Int>& ls) {
  if (ls.empty()) throw Error(Errc::internal_inconsistency, "no candidate positions for the optimum");
  Int best = 0;
  bool first = true;
  for (Int l : ls) {
    Int v = 0;
    switch (op) {
      case Op::star: v = s(a, l) + t(l, b); break;
      case Op::tll: v = s(a, l) - t(l, b) + t.chi() + l - b; break;
      case Op::tlr: v = t(l, b) - s(a, l) + s.chi() + a - l; break;
    }
    if (first || (op == Op::star ? v < best : v > best)) best = v;
    first = false;
  }
  return best;
}

inline Int exact_value(Op op, const Slipface& s, const Slipface& t, Int a, Int b) {
  std::vector<Int> ls;
  if (op == Op::tlr)
    ls = corner_set([&](Int l) { return s(a, l) - s.chi() - a + l; }, a, s.reach());
  else
    ls = corner_set([&](Int l) { return t(l, b); }, b, t.reach());
  return combine(op, s, t, a, b, ls);
}

inline Slipface apply_op(Op op, const Slipface& s, const Slipface& t, const Limits& lim) {
  const Int K = lcm(s.period(), t.period());
  const Int N = s.reach() + t.reach();
  const Int chi = s.chi() + t.chi();
  Box box = square_hull(s.box(), t.box()).inflate(K + N);
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (static_cast<std::size_t>(box.width()) * static_cast<std::size_t>(box.height()) > lim.max_window * 4)
      throw Error(Errc::resource_limit, "result box exceeds cap");
    SlipfaceData d{chi, K, N, box, {}};
    d.values.resize(static_cast<std::size_t>(box.width() * box.height()));
    if (op == Op::tlr) {
      for (Int a = box.a_lo; a <= box.a_hi; ++a) {
        auto ls = corner_set([&](Int l) { return s(a, l) - s.chi() - a + l; }, a, s.reach());
        for (Int b = box.b_lo; b <= box.b_hi; ++b)
          d.at(a, b) = iabs(a - b) > N + 2 ? asymptote(chi, a, b) : combine(op, s, t, a, b, ls);
      }
    } else {
      for (Int b = box.b_lo; b <= box.b_hi; ++b) {
        auto ls = corner_set([&](Int l) { return t(l, b); }, b, t.reach());
        for (Int a = box.a_lo; a <= box.a_hi; ++a)
          d.at(a, b) = iabs(a - b) > N + 2 ? asymptote(chi, a, b) : combine(op, s, t, a, b, ls);
      }
    }
    bool ok = sf_validate(d).empty();
    if (ok) {
      for_each_frame_cell(box, N, K + 2, [&](Int a, Int b) {
        if (ok && !box.contains(a, b) && raw_eval(d, a, b) != exact_value(op, s, t, a, b)) ok = false;
      });
    }
    if (ok) return Slipface(std::move(d));
    box = box.inflate((box.width() + 1) / 2);
  }
  throw Error(Errc::closure_verification, "result could not be certified on any tried box");
}

}  // namespace detail

// (s * t)(a, b) = min_l s(a, l) + t(l, b)
inline Slipface sf_star(const Slipface& s, const Slipface& t, const Limits& lim = {}) {
  return detail::apply_op(detail::Op::star, s, t, lim);
}

// (s <| t)(a, b) = max_l s(a, l) - t_dual(b, l)
inline Slipface sf_tll(const Slipface& s, const Slipface& t, const Limits& lim = {}) {
  return detail::apply_op(detail::Op::tll, s, t, lim);
}

// (s |> t)(a, b) = max_l t(l, b) - s_dual(l, a)
inline Slipface sf_tlr(const Slipface& s, const Slipface& t, const Limits& lim = {}) {
  return detail::apply_op(detail::Op::tlr, s, t, lim);
}

}  // namespace demaz
