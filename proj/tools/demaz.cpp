#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "demaz/demaz.hpp"
#include "demaz/oracle.hpp"

using namespace demaz;
using nlohmann::json;

namespace {

struct Globals {
  bool as_json = false;
  bool extended = false;
  std::size_t max_window = Limits{}.max_window;
  Limits limits() const { return Limits{max_window}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_perm(const Permutation& p, const Globals& g) {
  Permutation c = canonicalize(p);
  if (g.as_json) {
    json j;
    j["version"] = 1;
    j["period"] = c.period();
    j["lo"] = c.lo();
    j["vals"] = std::vector<Int>(c.values().begin(), c.values().end());
    j["chi"] = c.shift();
    j["diff_bound"] = c.diff_bound();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_permutation(c) << '\n';
  }
}

std::pair<Int, Int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(Errc::parse, "range must look like lo..hi: " + text);
  try {
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::parse, "bad range " + text);
  }
}

Permutation checked_op(const std::string& verb, const Permutation& x, const Permutation& y, const Globals& g) {
  const Limits lim = g.limits();
  Permutation r;
  if (verb == "star") r = star(x, y, lim);
  if (verb == "tll") r = tll(x, y, lim);
  if (verb == "tlr") r = tlr(x, y, lim);
  if (verb == "compose") r = compose(x, y, lim);
  if (g.extended) {
    Permutation xi = inverse(x, lim), yi = inverse(y, lim), alt;
    if (verb == "star") alt = inverse(star(yi, xi, lim), lim);
    if (verb == "tll") alt = inverse(tlr(yi, xi, lim), lim);
    if (verb == "tlr") alt = inverse(tll(yi, xi, lim), lim);
    if (verb == "compose") alt = inverse(compose(yi, xi, lim), lim);
    if (!(alt == r)) throw Error(Errc::internal_inconsistency, "result disagrees with the inverse route");
  }
  return r;
}

Slipface load_slipface(const std::string& path) {
  auto f = read_file(path);
  auto file = read_slipface(f);
  return file.kind == "rankgrid" ? sf_from_rank_grid(file.data) : Slipface(file.data);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure products of permutations of the integers"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.as_json, "print permutations as JSON");
  app.add_flag("--extended-checks", g.extended, "cross-check results through an independent route");
  app.add_option("--max-window", g.max_window, "cap on window and box sizes");

  std::string a_expr, b_expr, relation;
  for (const char* verb : {"star", "tll", "tlr", "compose"}) {
    auto* sub = app.add_subcommand(verb, std::string("compute ") + verb + " of two permutations");
    sub->fallthrough();
    sub->add_option("A", a_expr)->required();
    sub->add_option("B", b_expr)->required();
  }
  auto* inv_cmd = app.add_subcommand("inverse", "inverse permutation")->fallthrough();
  inv_cmd->add_option("A", a_expr)->required();

  auto* cmp = app.add_subcommand("compare", "compare two permutations")->fallthrough();
  cmp->add_option("relation", relation, "leq | leq_chi | wleft | wright")
      ->required()
      ->check(CLI::IsMember({"leq", "leq_chi", "wleft", "wright"}));
  cmp->add_option("A", a_expr)->required();
  cmp->add_option("B", b_expr)->required();

  std::string sf_path;
  auto* ess = app.add_subcommand("ess", "essential set")->fallthrough();
  ess->add_option("A", a_expr);
  ess->add_option("--slipface", sf_path);

  bool list_inv = false;
  auto* invs = app.add_subcommand("inv", "inversion data")->fallthrough();
  invs->add_option("A", a_expr)->required();
  invs->add_flag("--list", list_inv, "list inversions near the window");

  std::string a_range = "-10..10", b_range = "-10..10", fmt = "ascii", mode = "heatmap", out_path;
  auto* rnd = app.add_subcommand("render", "draw a slipface")->fallthrough();
  rnd->add_option("A", a_expr);
  rnd->add_option("--slipface", sf_path);
  rnd->add_option("--a", a_range);
  rnd->add_option("--b", b_range);
  rnd->add_option("--format", fmt)->check(CLI::IsMember({"ascii", "svg", "pgm"}));
  rnd->add_option("--mode", mode)->check(CLI::IsMember({"heatmap", "profiles"}));
  rnd->add_option("-o,--output", out_path);

  std::string action, file1, file2, perm_expr;
  Int genus = 0;
  auto* rg = app.add_subcommand("rankgrid", "rank grid import and gluing")->fallthrough();
  rg->add_option("action", action, "to-perm | from-perm | glue | dim")
      ->required()
      ->check(CLI::IsMember({"to-perm", "from-perm", "glue", "dim"}));
  rg->add_option("file", file1);
  rg->add_option("file2", file2);
  rg->add_option("--perm", perm_expr);
  rg->add_option("--genus", genus);

  auto* val = app.add_subcommand("validate", "check a representation")->fallthrough();
  val->add_option("A", a_expr);
  val->add_option("--slipface", sf_path);

  std::string which;
  std::vector<std::string> rest;
  int degree = 0;
  auto* orc = app.add_subcommand("oracle", "brute-force reference computations")->fallthrough();
  orc->add_option("which", which, "star | greedy | stingy | word | eval")
      ->required()
      ->check(CLI::IsMember({"star", "greedy", "stingy", "word", "eval"}));
  orc->add_option("args", rest)->required();
  orc->add_option("--d", degree, "size of the symmetric group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Limits lim = g.limits();
    auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();

    if (verb == "star" || verb == "tll" || verb == "tlr" || verb == "compose") {
      print_perm(checked_op(verb, parse_permutation(a_expr, lim), parse_permutation(b_expr, lim), g), g);
    } else if (verb == "inverse") {
      print_perm(inverse(parse_permutation(a_expr, lim), lim), g);
    } else if (verb == "compare") {
      auto x = parse_permutation(a_expr, lim), y = parse_permutation(b_expr, lim);
      if (relation == "leq" || relation == "leq_chi") {
        auto r = relation == "leq" ? bruhat_leq(x, y) : leq_chi(x, y);
        if (r) {
          std::cout << "true\n";
          return 0;
        }
        std::cout << "false";
        if (r.witness) std::cout << " witness=(" << r.witness->a << "," << r.witness->b << ")";
        else std::cout << " shifts differ";
        std::cout << '\n';
        return 1;
      }
      auto r = relation == "wleft" ? weak_left_leq(x, y) : weak_right_leq(x, y);
      if (r) {
        std::cout << "true\n";
        return 0;
      }
      std::cout << "false inversion=(" << r.witness->first << "," << r.witness->second << ")\n";
      return 1;
    } else if (verb == "ess") {
      Slipface s = sf_path.empty() ? sf_from_perm(parse_permutation(a_expr, lim)) : load_slipface(sf_path);
      auto e = ess_set(s);
      for (auto& p : e.points) std::cout << "(" << p.a << "," << p.b << ") value=" << p.value << '\n';
      if (e.periodic) std::cout << "periodic period=" << e.period << '\n';
    } else if (verb == "inv") {
      auto x = parse_permutation(a_expr, lim);
      if (is_finitary(x)) std::cout << "finitary inversions=" << inv_count(x) << '\n';
      else std::cout << "infinite inversions period=" << canonicalize(x).period() << '\n';
      if (list_inv) {
        auto c = canonicalize(x);
        for_each_inversion(c, c.lo(), c.hi(), 2 * c.diff_bound(),
                           [](Int u, Int v) { std::cout << "(" << u << "," << v << ")\n"; });
      }
    } else if (verb == "render") {
      RenderSpec spec;
      std::tie(spec.a_lo, spec.a_hi) = parse_range(a_range);
      std::tie(spec.b_lo, spec.b_hi) = parse_range(b_range);
      spec.format = fmt == "svg" ? RenderFormat::svg : fmt == "pgm" ? RenderFormat::pgm : RenderFormat::ascii;
      spec.mode = mode == "profiles" ? RenderMode::profiles : RenderMode::heatmap;
      std::string text;
      if (!sf_path.empty()) {
        Slipface s = load_slipface(sf_path);
        text = render([&](Int a, Int b) { return s(a, b); }, spec);
      } else {
        auto x = parse_permutation(a_expr, lim);
        text = render([&](Int a, Int b) { return eval_s(x, a, b); }, spec);
      }
      if (out_path.empty()) std::cout << text;
      else std::ofstream(out_path) << text;
    } else if (verb == "rankgrid") {
      if (action == "to-perm") {
        print_perm(sf_to_perm(load_slipface(file1), lim), g);
      } else if (action == "from-perm") {
        const std::string& expr = perm_expr.empty() ? file1 : perm_expr;
        std::cout << write_slipface(sf_from_perm(parse_permutation(expr, lim)).data(), "rankgrid");
      } else if (action == "glue") {
        std::cout << write_slipface(sf_star(load_slipface(file1), load_slipface(file2), lim).data(), "rankgrid");
      } else {
        Permutation t = perm_expr.empty() ? sf_to_perm(load_slipface(file1), lim) : parse_permutation(perm_expr, lim);
        Int n = inv_count(t);
        std::cout << "inversions " << n << "\ndimension " << genus - n << '\n';
      }
    } else if (verb == "validate") {
      if (!sf_path.empty()) {
        auto file = read_slipface(read_file(sf_path));
        auto v = sf_validate(file.data);
        if (v.empty()) {
          std::cout << "ok\n";
          return 0;
        }
        for (auto& e : v) std::cout << e.kind << " (" << e.where.a << "," << e.where.b << ") " << e.detail << '\n';
        return 1;
      }
      auto v = validate(parse_raw(a_expr));
      if (v.empty()) {
        std::cout << "ok\n";
        return 0;
      }
      for (auto& e : v) std::cout << violation_name(e.kind) << " " << e.where << " " << e.detail << '\n';
      return 1;
    } else if (verb == "oracle") {
      if (which == "eval") {
        if (rest.size() != 3) throw Error(Errc::invalid_argument, "oracle eval needs A a b");
        auto x = parse_permutation(rest[0], lim);
        Int a = std::stoll(rest[1]), b = std::stoll(rest[2]);
        std::cout << oracle::oracle_eval_s(x, a, b, 4 * x.diff_bound() + 4 * x.period() + 64) << '\n';
      } else if (which == "word") {
        auto x = parse_permutation(rest.at(0), lim);
        std::vector<Int> word;
        for (std::size_t i = 1; i < rest.size(); ++i) word.push_back(std::stoll(rest[i]));
        print_perm(oracle::oracle_star_word(x, word), g);
      } else {
        if (rest.size() != 2 || degree < 1) throw Error(Errc::invalid_argument, "oracle needs A B and --d");
        auto x = parse_permutation(rest[0], lim), y = parse_permutation(rest[1], lim);
        if (which == "star") print_perm(oracle::oracle_star_sd(x, y, degree), g);
        if (which == "greedy") print_perm(oracle::oracle_greedy_max(x, y, degree), g);
        if (which == "stingy") print_perm(oracle::oracle_stingy_min(x, y, degree), g);
      }
    }
  } catch (const Error& e) {
    std::cerr << "demaz: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "demaz: parse-error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "demaz: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
