#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace demaz {

using Int = std::int64_t;

struct Cell {
  Int a = 0;
  Int b = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Errc {
  parse,
  invalid_argument,
  invalid_one_line,
  not_a_bijection,
  invalid_generator_set,
  resource_limit,
  infinite_inversions,
  not_a_permutation,
  inconsistent_slipface,
  asymptote_mismatch,
  not_a_slipface,
  closure_verification,
  not_dominated,
  theorem_violation,
  internal_inconsistency,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::parse: return "parse-error";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_one_line: return "invalid-one-line";
    case Errc::not_a_bijection: return "not-a-bijection";
    case Errc::invalid_generator_set: return "invalid-generator-set";
    case Errc::resource_limit: return "resource-limit";
    case Errc::infinite_inversions: return "infinite-inversions";
    case Errc::not_a_permutation: return "not-a-permutation";
    case Errc::inconsistent_slipface: return "inconsistent-slipface";
    case Errc::asymptote_mismatch: return "asymptote-mismatch";
    case Errc::not_a_slipface: return "not-a-slipface";
    case Errc::closure_verification: return "closure-verification";
    case Errc::not_dominated: return "not-dominated";
    case Errc::theorem_violation: return "theorem-violation";
    case Errc::internal_inconsistency: return "internal-inconsistency";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, std::optional<Cell> witness = std::nullopt,
        std::size_t position = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        witness_(witness),
        position_(position) {}

  Errc code() const { return code_; }
  const std::optional<Cell>& witness() const { return witness_; }
  // Byte offset into the parsed text; meaningful for Errc::parse only.
  std::size_t position() const { return position_; }

 private:
  Errc code_;
  std::optional<Cell> witness_;
  std::size_t position_;
};

// Process exit status used by the command line tool.
inline int exit_code(Errc e) {
  switch (e) {
    case Errc::parse: return 2;
    case Errc::resource_limit: return 4;
    default: return 3;
  }
}

struct Limits {
  std::size_t max_window = 1'000'000;
};

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

inline Int mod_pos(Int a, Int b) { return a - b * floor_div(a, b); }

inline Int lcm(Int a, Int b) { return std::lcm(a, b); }

inline Int iabs(Int a) { return a < 0 ? -a : a; }

}  // namespace demaz
