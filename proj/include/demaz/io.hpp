#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "demaz/permutation.hpp"
#include "demaz/slipface.hpp"

namespace demaz {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : s_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse, what + " at position " + std::to_string(pos_), std::nullopt, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  // Whitespace separated integers up to (not including) `close`.
  std::vector<Int> integers_until(char close) {
    std::vector<Int> out;
    while (!peek(close)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + close + "'");
      out.push_back(integer());
    }
    return out;
  }

  void key(const char* name) {
    std::size_t at = (skip_ws(), pos_);
    if (word() != name) {
      pos_ = at;
      fail(std::string("expected '") + name + "'");
    }
    expect('=');
  }

  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Raw fields for any expression; `ep(...)` is returned unvalidated.
inline RawPermutation parse_raw(std::string_view text) {
  detail::Scanner sc(text);
  std::size_t head = (sc.skip_ws(), sc.pos());
  std::string name = sc.word();
  sc.expect('(');
  auto wrap = [&](auto&& make) -> RawPermutation {
    try {
      return make().raw();
    } catch (const Error& e) {
      if (e.code() == Errc::parse) throw;
      throw Error(e.code(), std::string(e.what()) + " (expression at position " + std::to_string(head) + ")");
    }
  };
  RawPermutation out;
  if (name == "sym") {
    Int off = sc.integer();
    sc.expect(';');
    auto vals = sc.integers_until(')');
    sc.expect(')');
    out = wrap([&] { return make_one_line(vals, off); });
  } else if (name == "aff") {
    Int k = sc.integer();
    sc.expect(';');
    auto vals = sc.integers_until(')');
    sc.expect(')');
    out = wrap([&] { return make_affine(vals, k); });
  } else if (name == "shift") {
    Int chi = sc.integer();
    sc.expect(')');
    out = make_shift(chi).raw();
  } else if (name == "sigma") {
    std::vector<Int> elems;
    if (!sc.peek(')')) {
      elems.push_back(sc.integer());
      while (sc.peek(',')) {
        sc.expect(',');
        elems.push_back(sc.integer());
      }
    }
    sc.expect(')');
    out = wrap([&] { return make_sigma_set(GeneratorSet::finite(elems)); });
  } else if (name == "sigma_mod") {
    Int n = sc.integer();
    sc.expect(',');
    Int k = sc.integer();
    sc.expect(')');
    out = wrap([&] { return make_sigma_set(GeneratorSet::residue(n, k)); });
  } else if (name == "gamma") {
    Int m = sc.integer();
    sc.expect(',');
    Int n = sc.integer();
    sc.expect(')');
    out = wrap([&] { return make_gamma(m, n); });
  } else if (name == "ep") {
    sc.key("k");
    out.period = sc.integer();
    sc.expect(',');
    sc.key("lo");
    out.lo = sc.integer();
    sc.expect(';');
    out.vals = sc.integers_until(')');
    sc.expect(')');
  } else {
    sc.set_pos(head);
    sc.fail("unknown constructor '" + name + "'");
  }
  sc.finish();
  return out;
}

inline Permutation parse_permutation(std::string_view text, const Limits& lim = {}) {
  return Permutation::from_raw(parse_raw(text), lim);
}

inline std::string format_raw(const RawPermutation& r) {
  std::ostringstream os;
  os << "ep(k=" << r.period << ", lo=" << r.lo << ";";
  for (Int v : r.vals) os << ' ' << v;
  os << ')';
  return os.str();
}

// Canonical textual form.
inline std::string format_permutation(const Permutation& p) { return format_raw(canonicalize(p).raw()); }

// ---- slipface files -------------------------------------------------------

struct SlipfaceFile {
  std::string kind = "slipface";  // or "rankgrid"
  SlipfaceData data;
};

inline std::string write_slipface(const SlipfaceData& d, const std::string& kind = "slipface") {
  std::ostringstream os;
  os << kind << " chi=" << d.chi << " k=" << d.period << " band=" << d.band << " box=" << d.box.a_lo << ".."
     << d.box.a_hi << 'x' << d.box.b_lo << ".." << d.box.b_hi << '\n';
  for (Int a = d.box.a_lo; a <= d.box.a_hi; ++a) {
    for (Int b = d.box.b_lo; b <= d.box.b_hi; ++b) os << (b == d.box.b_lo ? "" : " ") << d.at(a, b);
    os << '\n';
  }
  return os.str();
}

inline SlipfaceFile read_slipface(std::string_view text) {
  detail::Scanner sc(text);
  SlipfaceFile f;
  f.kind = sc.word();
  if (f.kind != "slipface" && f.kind != "rankgrid") {
    sc.set_pos(0);
    sc.fail("expected header word 'slipface' or 'rankgrid'");
  }
  auto& d = f.data;
  sc.key("chi");
  d.chi = sc.integer();
  sc.key("k");
  d.period = sc.integer();
  sc.key("band");
  d.band = sc.integer();
  sc.key("box");
  d.box.a_lo = sc.integer();
  sc.expect('.');
  sc.expect('.');
  d.box.a_hi = sc.integer();
  sc.expect('x');
  d.box.b_lo = sc.integer();
  sc.expect('.');
  sc.expect('.');
  d.box.b_hi = sc.integer();
  if (d.box.width() < 1 || d.box.height() < 1) sc.fail("empty box");
  const Int cells = d.box.width() * d.box.height();
  if (cells > 50'000'000) sc.fail("box too large");
  d.values.reserve(static_cast<std::size_t>(cells));
  for (Int i = 0; i < cells; ++i) d.values.push_back(sc.integer());
  sc.finish();
  return f;
}

}  // namespace demaz
