#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "support.hpp"

using namespace demaz;
using namespace demaz::testing;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(DEMAZ_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Parse, Constructors) {
  EXPECT_EQ(parse_permutation("sym(1; 5 6 2 8 3 9 7 4 1)"), sym({5, 6, 2, 8, 3, 9, 7, 4, 1}));
  EXPECT_EQ(parse_permutation("aff(2; 1 0)"), make_affine({1, 0}, 2));
  EXPECT_EQ(parse_permutation(" shift( -3 ) "), make_shift(-3));
  EXPECT_EQ(parse_permutation("sigma(1,3)"), sym({2, 1, 4, 3}));
  EXPECT_EQ(parse_permutation("sigma()"), identity());
  EXPECT_EQ(parse_permutation("sigma_mod(0,2)"), make_affine({1, 0}, 2));
  EXPECT_EQ(parse_permutation("gamma(3,5)"), make_gamma(3, 5));
  EXPECT_EQ(parse_permutation("ep(k=2, lo=0; 1 0)"), make_affine({1, 0}, 2));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_permutation("sym(1; 2 1 x)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse);
    EXPECT_EQ(e.position(), 11u);
  }
  try {
    parse_permutation("perm(1)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    parse_permutation("ep(k=1, lo=0; 0 1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse);
  }
  try {
    parse_permutation("sigma(1,2)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_generator_set);
  }
  EXPECT_THROW(parse_permutation("ep(k=1, lo=0; 0 0)"), Error);
}

TEST(Parse, FormatRoundTrip) {
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    auto p = random_mixed(rng);
    auto text = format_permutation(p);
    EXPECT_EQ(parse_permutation(text), p);
    EXPECT_EQ(format_permutation(parse_permutation(text)), text);
  }
}

TEST(SlipfaceFile, RoundTrip) {
  auto s = sf_from_perm(make_gamma(2, 3));
  auto text = write_slipface(s.data());
  auto f = read_slipface(text);
  EXPECT_EQ(f.kind, "slipface");
  EXPECT_EQ(f.data.box, s.box());
  EXPECT_EQ(f.data.values, s.data().values);
  EXPECT_EQ(write_slipface(f.data), text);
  EXPECT_THROW(read_slipface("slipface chi=0 k=1 band=2 box=0..1x0..1\n0 0 1"), Error);
  EXPECT_THROW(read_slipface("grid chi=0"), Error);
}

TEST(Render, ShiftHeatmapIsARamp) {
  RenderSpec spec{0, 3, 0, 2, RenderFormat::ascii, RenderMode::heatmap};
  auto id = identity();
  auto text = render([&](Int a, Int b) { return eval_s(id, a, b); }, spec);
  EXPECT_EQ(text, "heatmap a=0..3 b=0..2\n0 | 0 1 2 3\n1 | 0 0 1 2\n2 | 0 0 0 1\n");
}

TEST(Render, FormatsAreDeterministic) {
  auto p = sym({2, 3, 1});
  auto f = [&](Int a, Int b) { return eval_s(p, a, b); };
  for (auto fmt : {RenderFormat::ascii, RenderFormat::svg, RenderFormat::pgm})
    for (auto mode : {RenderMode::heatmap, RenderMode::profiles}) {
      RenderSpec spec{-2, 5, 0, 4, fmt, mode};
      EXPECT_EQ(render(f, spec), render(f, spec));
    }
  RenderSpec svg{-2, 5, 0, 4, RenderFormat::svg, RenderMode::profiles};
  EXPECT_FALSE(std::regex_search(render(f, svg), std::regex("[0-9]\\.[0-9]")));
  RenderSpec pgm{-2, 5, 0, 4, RenderFormat::pgm, RenderMode::heatmap};
  EXPECT_EQ(render(f, pgm).substr(0, 3), "P2\n");
}

// The golden profile drawings must mark exactly the attained values.
TEST(Render, GoldenProfilesMatchCounting) {
  for (std::string w : {"123456789", "562839741", "987654321"}) {
    std::vector<Int> vals;
    for (char c : w) vals.push_back(c - '0');
    auto p = sym(vals);
    std::istringstream in(slurp(std::string(DEMAZ_GOLDEN_DIR) + "/profiles_" + w + ".txt"));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "profiles a=-10..12 b=0..20");
    int rows = 0;
    while (std::getline(in, line)) {
      auto bar = line.find('|');
      Int y = std::stoll(line.substr(0, bar));
      std::string cells = line.substr(bar + 1);
      ASSERT_EQ(cells.size(), 23u);
      for (Int x = -10; x <= 12; ++x) {
        bool hit = false;
        for (Int b = 0; b <= 20; ++b) hit = hit || oracle::oracle_eval_s(p, x, b, 64) == y;
        EXPECT_EQ(cells[static_cast<std::size_t>(x + 10)] == '*', hit) << w << " x=" << x << " y=" << y;
      }
      ++rows;
    }
    EXPECT_GT(rows, 0);
  }
}

TEST(Cli, GoldenRenders) {
  for (std::string w : {"123456789", "562839741", "987654321"}) {
    std::string expr = "'sym(1; " + std::string(1, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) expr += std::string(" ") + w[i];
    expr += ")'";
    auto r = run_cli("render " + expr + " --mode profiles --a=-10..12 --b=0..20");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, slurp(std::string(DEMAZ_GOLDEN_DIR) + "/profiles_" + w + ".txt"));
  }
}

TEST(Cli, ComputesAndCompares) {
  EXPECT_EQ(run_cli("star 'sym(1; 2 1 3)' 'sym(1; 1 3 2)'").out, "ep(k=1, lo=0; 0 2 3 1 4)\n");
  EXPECT_EQ(run_cli("tll 'sym(1; 3 2 1)' 'sym(1; 2 1 3)' --extended-checks").out, "ep(k=1, lo=0; 0 2 3 1 4)\n");
  auto j = run_cli("--json inverse 'gamma(3,5)'");
  EXPECT_EQ(j.status, 0);
  EXPECT_NE(j.out.find("\"chi\":-1"), std::string::npos);
  EXPECT_EQ(run_cli("compare leq 'sym(1; 2 1 3)' 'sym(1; 3 2 1)'").status, 0);
  auto f = run_cli("compare leq 'sym(1; 3 2 1)' 'sym(1; 2 1 3)'");
  EXPECT_EQ(f.status, 1);
  EXPECT_NE(f.out.find("witness"), std::string::npos);
  EXPECT_EQ(run_cli("ess 'gamma(3,5)'").out, "(1,0) value=5\n");
  EXPECT_EQ(run_cli("validate 'ep(k=1, lo=0; 0 0)'").status, 1);
  EXPECT_EQ(run_cli("validate 'ep(k=2, lo=0; 1 0)'").out, "ok\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("star 'sym(1; 2 1' 'shift(0)'").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
  EXPECT_EQ(run_cli("star 'sigma(1,2)' 'shift(0)'").status, 3);
  EXPECT_EQ(run_cli("inv 'aff(2; 1 0)'").status, 0);
  EXPECT_EQ(run_cli("rankgrid dim --genus 4 --perm 'aff(2; 1 0)'").status, 3);
  EXPECT_EQ(run_cli("--max-window=3 compose 'sym(1; 5 6 2 8 3 9 7 4 1)' 'shift(1)'").status, 4);
}

TEST(Cli, RankGrid) {
  auto grid = run_cli("rankgrid from-perm 'gamma(1,2)'");
  ASSERT_EQ(grid.status, 0);
  std::string path = ::testing::TempDir() + "/gamma12.grid";
  std::ofstream(path) << grid.out;
  EXPECT_EQ(run_cli("rankgrid to-perm " + path).out, format_permutation(make_gamma(1, 2)) + "\n");
  EXPECT_EQ(run_cli("rankgrid dim " + path + " --genus 4").out, "inversions 2\ndimension 2\n");
}
