#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "demaz/core.hpp"

namespace demaz {

enum class RenderFormat { ascii, svg, pgm };
enum class RenderMode { heatmap, profiles };

struct RenderSpec {
  Int a_lo = -10, a_hi = 10, b_lo = -10, b_hi = 10;
  RenderFormat format = RenderFormat::ascii;
  RenderMode mode = RenderMode::heatmap;
};

namespace detail {

inline int digits(Int v) { return static_cast<int>(std::to_string(v).size()); }

inline std::string pad_left(const std::string& s, int w) {
  return std::string(static_cast<std::size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') + s;
}

}  // namespace detail

// Draws a slipface-like function on a rectangle.  Heatmaps have one row per b;
// profiles overlay the curves a -> f(a, b), one per b.
template <class F>
std::string render(F&& f, const RenderSpec& spec) {
  if (spec.a_lo > spec.a_hi || spec.b_lo > spec.b_hi) throw Error(Errc::invalid_argument, "empty render range");
  const Int W = spec.a_hi - spec.a_lo + 1, H = spec.b_hi - spec.b_lo + 1;
  std::vector<Int> v(static_cast<std::size_t>(W * H));
  Int vmax = 0;
  for (Int b = 0; b < H; ++b)
    for (Int a = 0; a < W; ++a) {
      Int x = f(spec.a_lo + a, spec.b_lo + b);
      v[static_cast<std::size_t>(b * W + a)] = x;
      vmax = std::max(vmax, x);
    }
  auto at = [&](Int a, Int b) { return v[static_cast<std::size_t>(b * W + a)]; };
  auto hit = [&](Int a, Int y) {
    for (Int b = 0; b < H; ++b)
      if (at(a, b) == y) return true;
    return false;
  };

  std::ostringstream os;
  const bool heat = spec.mode == RenderMode::heatmap;
  switch (spec.format) {
    case RenderFormat::ascii: {
      os << (heat ? "heatmap" : "profiles") << " a=" << spec.a_lo << ".." << spec.a_hi << " b=" << spec.b_lo << ".."
         << spec.b_hi << '\n';
      if (heat) {
        int lw = std::max(detail::digits(spec.b_lo), detail::digits(spec.b_hi));
        int cw = detail::digits(vmax);
        for (Int b = 0; b < H; ++b) {
          os << detail::pad_left(std::to_string(spec.b_lo + b), lw) << " |";
          for (Int a = 0; a < W; ++a) os << ' ' << detail::pad_left(std::to_string(at(a, b)), cw);
          os << '\n';
        }
      } else {
        int lw = detail::digits(vmax);
        for (Int y = vmax; y >= 0; --y) {
          os << detail::pad_left(std::to_string(y), lw) << " |";
          for (Int a = 0; a < W; ++a) os << (hit(a, y) ? '*' : '.');
          os << '\n';
        }
      }
      break;
    }
    case RenderFormat::svg: {
      const Int cell = heat ? 10 : 20, m = 10;
      const Int width = 2 * m + cell * (heat ? W : W - 1);
      const Int height = 2 * m + cell * (heat ? H : vmax);
      os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
      if (heat) {
        for (Int b = 0; b < H; ++b)
          for (Int a = 0; a < W; ++a) {
            Int g = vmax == 0 ? 255 : 255 - (255 * at(a, b)) / vmax;
            os << "<rect x=\"" << m + cell * a << "\" y=\"" << m + cell * b << "\" width=\"" << cell
               << "\" height=\"" << cell << "\" fill=\"rgb(" << g << ',' << g << ',' << g << ")\"/>\n";
          }
      } else {
        for (Int b = 0; b < H; ++b) {
          os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
          for (Int a = 0; a < W; ++a)
            os << (a ? " " : "") << m + cell * a << ',' << m + cell * (vmax - at(a, b));
          os << "\"/>\n";
        }
      }
      os << "</svg>\n";
      break;
    }
    case RenderFormat::pgm: {
      const Int rows = heat ? H : vmax + 1;
      os << "P2\n" << W << ' ' << rows << "\n255\n";
      for (Int r = 0; r < rows; ++r) {
        for (Int a = 0; a < W; ++a) {
          Int g;
          if (heat)
            g = vmax == 0 ? 255 : 255 - (255 * at(a, r)) / vmax;
          else
            g = hit(a, vmax - r) ? 0 : 255;
          os << (a ? " " : "") << g;
        }
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

}  // namespace demaz
