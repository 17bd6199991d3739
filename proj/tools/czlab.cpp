// Command-line workbench: expression evaluation, named property checks with
// JSON reports, isolation listings, shift-continuity witnesses, and symbolic
// equation solving. Exit codes: 0 success / all PASS, 1 check FAIL or
// UNRESOLVED, 2 usage or input error, 3 resource cap.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "czlab/expr.hpp"
#include "czlab/report_json.hpp"
#include "czlab/verify.hpp"

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

czlab::Coord parse_coord(const std::string& s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
  if (k == s.size() || s.find_first_not_of("0123456789", k) != std::string::npos)
    throw usage_error("not an integer: '" + s + "'");
  if (s.size() - k > 13)
    throw usage_error("integer exceeds the 2^40 input bound: '" + s + "'");
  czlab::Coord v = std::stoll(s);
  if (v > czlab::kMaxLiteral || v < -czlab::kMaxLiteral)
    throw usage_error("integer exceeds the 2^40 input bound: '" + s + "'");
  return v;
}

// "XLO..XHI,YLO..YHI"
czlab::Window parse_window(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw usage_error("window must be XLO..XHI,YLO..YHI");
  auto parse_range = [](const std::string& part) {
    auto dots = part.find("..");
    if (dots == std::string::npos)
      throw usage_error("window range must be LO..HI");
    return std::pair<czlab::Coord, czlab::Coord>{
        parse_coord(part.substr(0, dots)), parse_coord(part.substr(dots + 2))};
  };
  auto [xlo, xhi] = parse_range(s.substr(0, comma));
  auto [ylo, yhi] = parse_range(s.substr(comma + 1));
  czlab::Window w{xlo, xhi, ylo, yhi};
  if (!w.valid()) throw usage_error("window is empty (LO > HI)");
  return w;
}

czlab::Element parse_element_arg(const std::string& s) {
  czlab::Value v = czlab::eval_text(s);
  if (const czlab::Element* e = std::get_if<czlab::Element>(&v)) return *e;
  throw usage_error("expected an element, got '" + s + "'");
}

unsigned __int128 max_points_from_env() {
  const char* env = std::getenv("CZLAB_MAX_POINTS");
  if (!env) return czlab::kDefaultMaxPoints;
  std::string s = env;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
      s.size() > 18)
    throw usage_error("CZLAB_MAX_POINTS must be a positive integer");
  unsigned long long v = std::stoull(s);
  if (v == 0) throw usage_error("CZLAB_MAX_POINTS must be a positive integer");
  return v;
}

void apply_param(czlab::RunConfig& cfg, const std::string& check,
                 const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos)
    throw usage_error("malformed parameter '" + kv + "' (expected k=v)");
  std::string key = kv.substr(0, eq);
  std::string val_s = kv.substr(eq + 1);
  if (key == "seed") {
    if (val_s.empty() ||
        val_s.find_first_not_of("0123456789") != std::string::npos ||
        val_s.size() > 18)
      throw usage_error("seed must be a nonnegative integer");
    cfg.seed = std::stoull(val_s);
    return;
  }
  czlab::Coord val = parse_coord(val_s);
  if (key == "mutate") {
    cfg.corrupt_multiply = val != 0;
    return;
  }
  if (val < 0) throw usage_error("parameter '" + key + "' must be >= 0");
  auto as_int = [&] { return static_cast<int>(val); };
  bool ok = false;
  if (check == "axioms") {
    if (key == "window") cfg.axioms_window = val, ok = true;
  } else if (check == "order") {
    if (key == "window") cfg.order_window = val, ok = true;
    if (key == "region_window") cfg.order_region_window = val, ok = true;
  } else if (check == "tau1-cont" || check == "tau2-cont") {
    if (key == "n_max") cfg.cont_n_max = val, ok = true;
    if (key == "coord_max") cfg.cont_coord_max = val, ok = true;
  } else if (check == "lemma-2-7") {
    if (key == "coord_max") cfg.lemma27_coord_max = val, ok = true;
    if (key == "random_cases") cfg.lemma27_random = as_int(), ok = true;
    if (key == "random_range") cfg.lemma27_range = val, ok = true;
  } else if (check == "prop-2-9") {
    if (key == "p_max") cfg.prop29_p_max = val, ok = true;
    if (key == "coord_max") cfg.prop29_coord_max = val, ok = true;
  } else if (check == "subcover") {
    if (key == "cases") cfg.subcover_cases = as_int(), ok = true;
    if (key == "max_size" && val >= 1)
      cfg.subcover_max_size = as_int(), ok = true;
    if (key == "range") cfg.subcover_range = val, ok = true;
  } else if (check == "lemma-3-1") {
    if (key == "coord_max") cfg.lemma31_coord_max = val, ok = true;
    if (key == "brute_window") cfg.lemma31_brute_window = val, ok = true;
    if (key == "random_cases") cfg.lemma31_random = as_int(), ok = true;
    if (key == "random_range") cfg.lemma31_range = val, ok = true;
  } else if (check == "prop-3-1") {
    if (key == "coord_max") cfg.prop31_coord_max = val, ok = true;
    if (key == "k_max") cfg.prop31_k_max = val, ok = true;
  } else if (check == "isolated") {
    if (key == "window") cfg.isolated_window = val, ok = true;
    if (key == "t1_window") cfg.isolated_t1_window = val, ok = true;
  } else if (check == "shifts") {
    if (key == "coord_max") cfg.shifts_coord_max = val, ok = true;
    if (key == "K" && val >= 1) cfg.shifts_K = as_int(), ok = true;
  } else if (check == "density") {
    if (key == "window") cfg.density_window = val, ok = true;
  } else if (check == "lemma-3-5") {
    if (key == "coord_max") cfg.lemma35_coord_max = val, ok = true;
    if (key == "window") cfg.lemma35_window = val, ok = true;
  }
  if (!ok)
    throw usage_error("unknown parameter '" + key + "' for check '" + check +
                      "'");
}

void print_reports(const std::vector<czlab::CheckReport>& reports) {
  for (const czlab::CheckReport& r : reports) {
    std::string compact;
    std::vector<std::pair<std::string, std::string>> long_params;
    for (const auto& [k, v] : r.params) {
      if (v.find(' ') != std::string::npos) {
        long_params.emplace_back(k, v);
        continue;
      }
      if (!compact.empty()) compact += ' ';
      compact += k + "=" + v;
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    std::cout << r.check_id << ": " << czlab::verdict_name(r.verdict);
    if (!compact.empty()) std::cout << " (" << compact << ")";
    std::cout << " " << ms << "ms\n";
    for (const auto& [k, v] : long_params)
      std::cout << "  " << k << ": " << v << "\n";
    if (r.witness) std::cout << "  witness: " << *r.witness << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "czlab: exact workbench for the two-branch integer pair semigroup, "
      "its order regions, and its neighborhood families"};
  app.require_subcommand(1);

  std::string expr_text, eval_window;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate an expression; regions print in "
                                 "canonical cell form");
  eval_cmd->add_option("expr", expr_text, "expression text")->required();
  CLI::Option* eval_window_opt =
      eval_cmd
          ->add_option("--window", eval_window,
                       "also enumerate region points in XLO..XHI,YLO..YHI "
                       "(bare flag: -8..8,-8..8)")
          ->expected(0, 1);

  std::string check_name, json_path;
  std::vector<std::string> check_params;
  std::uint64_t seed = 0xC2;
  int jobs = 1;
  bool mutate = false;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "run one named check, or 'all' for the full suite");
  check_cmd->add_option("name", check_name, "check name or 'all'")->required();
  check_cmd->add_option("--params", check_params,
                        "per-check parameters as k=v (single checks only)");
  check_cmd->add_option("--json", json_path,
                        "write the machine-readable report to this path");
  check_cmd->add_option("--seed", seed, "seed for randomized cases");
  check_cmd->add_option("--jobs", jobs, "parallel workers for 'all'");
  check_cmd->add_flag("--mutate", mutate,
                      "run against the deliberately corrupted product "
                      "(harness self-test; expects FAIL)");

  std::string iso_family, iso_window;
  CLI::App* iso_cmd =
      app.add_subcommand("isolated", "list isolated points in a window");
  iso_cmd->add_option("family", iso_family, "tau1|tau2|tauB|tauBd")
      ->required();
  iso_cmd->add_option("--window", iso_window, "XLO..XHI,YLO..YHI")
      ->required();

  std::string shift_family, shift_side, at_str, by_str;
  int shift_k = 6;
  CLI::App* witness_cmd =
      app.add_subcommand("witness", "produce verdicts with witnesses");
  witness_cmd->require_subcommand(1);
  CLI::App* shift_cmd = witness_cmd->add_subcommand(
      "shift", "shift-continuity verdict with certificate");
  shift_cmd->add_option("family", shift_family, "tau1|tau2|tauB|tauBd")
      ->required();
  shift_cmd->add_option("side", shift_side, "LEFT or RIGHT")->required();
  shift_cmd->add_option("--at", at_str, "base point \"(i,j)\"")->required();
  shift_cmd->add_option("--by", by_str, "shift factor \"(k,l)\"")->required();
  shift_cmd->add_option("--k", shift_k, "target levels to examine");

  std::string left_str, right_str, target_str;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "solution region of left*z*right = target");
  solve_cmd->add_option("--left", left_str, "left factor \"(a,b)\"");
  solve_cmd->add_option("--right", right_str, "right factor \"(c,d)\"");
  solve_cmd->add_option("--target", target_str, "target \"(p,q)\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  unsigned __int128 max_points = max_points_from_env();

  if (eval_cmd->parsed()) {
    czlab::Value v = czlab::eval_text(expr_text);
    std::cout << czlab::value_str(v) << "\n";
    if (eval_window_opt->count() > 0) {
      if (const czlab::Region* reg = std::get_if<czlab::Region>(&v)) {
        czlab::Window w = eval_window.empty() ? czlab::Window{-8, 8, -8, 8}
                                              : parse_window(eval_window);
        std::vector<czlab::Element> pts = enumerate(*reg, w, max_points);
        std::cout << "points in " << w.xlo << ".." << w.xhi << "," << w.ylo
                  << ".." << w.yhi << " (" << pts.size() << "):\n";
        for (czlab::Element p : pts) std::cout << p.str() << "\n";
      }
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    czlab::RunConfig cfg;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.corrupt_multiply = mutate;
    bool all = check_name == "all";
    if (!all) {
      const auto& names = czlab::check_names();
      if (std::find(names.begin(), names.end(), check_name) == names.end())
        throw usage_error("unknown check '" + check_name + "'");
    } else if (!check_params.empty()) {
      throw usage_error("--params requires a single named check");
    }
    for (const std::string& kv : check_params)
      apply_param(cfg, check_name, kv);
    std::vector<czlab::CheckReport> reports =
        all ? czlab::run_all(cfg)
            : std::vector<czlab::CheckReport>{czlab::run_named(check_name,
                                                               cfg)};
    print_reports(reports);
    int passed = 0;
    for (const czlab::CheckReport& r : reports)
      if (r.verdict == czlab::Verdict::Pass) ++passed;
    std::cout << passed << "/" << reports.size() << " checks passed\n";
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw usage_error("cannot write '" + json_path + "'");
      out << czlab::reports_to_json_text(reports, cfg.seed);
    }
    return passed == static_cast<int>(reports.size()) ? 0 : 1;
  }

  if (iso_cmd->parsed()) {
    auto fam = czlab::family_from_name(iso_family);
    if (!fam) throw usage_error("unknown family '" + iso_family + "'");
    czlab::Window w = parse_window(iso_window);
    if (w.count() > max_points)
      throw czlab::cap_exceeded("window exceeds the point cap");
    std::vector<czlab::Element> pts = isolated_in_window(*fam, w);
    for (czlab::Element p : pts) std::cout << p.str() << "\n";
    std::cout << "count: " << pts.size() << "\n";
    return 0;
  }

  if (shift_cmd->parsed()) {
    auto fam = czlab::family_from_name(shift_family);
    if (!fam) throw usage_error("unknown family '" + shift_family + "'");
    czlab::Side side;
    if (shift_side == "LEFT") side = czlab::Side::Left;
    else if (shift_side == "RIGHT") side = czlab::Side::Right;
    else throw usage_error("side must be LEFT or RIGHT");
    if (shift_k < 1) throw usage_error("--k must be >= 1");
    czlab::Element at = parse_element_arg(at_str);
    czlab::Element by = parse_element_arg(by_str);
    czlab::ContinuityVerdict v =
        czlab::shift_continuity(*fam, side, by, at, shift_k);
    std::cout << "family: " << czlab::family_name(*fam) << "\n"
              << "side: " << shift_side << "\n"
              << "at: " << at.str() << "\n"
              << "by: " << by.str() << "\n";
    switch (v.kind) {
      case czlab::ContinuityVerdict::Kind::ContinuousUpTo: {
        std::cout << "verdict: continuous-up-to " << v.bound << "\n";
        std::string ns;
        for (auto [k, n] : v.witnesses) {
          if (!ns.empty()) ns += ' ';
          ns += "n(" + std::to_string(k) + ")=" + std::to_string(n);
        }
        std::cout << "witness: " << ns << "\n";
        return 0;
      }
      case czlab::ContinuityVerdict::Kind::Discontinuous:
        std::cout << "verdict: discontinuous\n"
                  << "first failing level: " << v.bound << "\n"
                  << "certificate: " << to_string(v.certificate) << "\n"
                  << "(every basic neighborhood of " << at.str()
                  << " meets the certificate, whose image misses the level-"
                  << v.bound << " neighborhood of the translated point)\n";
        return 0;
      case czlab::ContinuityVerdict::Kind::Unresolved:
        std::cout << "verdict: unresolved\n";
        return 1;
    }
    return 1;
  }

  if (solve_cmd->parsed()) {
    czlab::Element t = parse_element_arg(target_str);
    czlab::Region sol;
    bool has_l = !left_str.empty(), has_r = !right_str.empty();
    if (has_l && has_r)
      sol = czlab::solve_two_sided(parse_element_arg(left_str),
                                   parse_element_arg(right_str), t);
    else if (has_l)
      sol = czlab::solve_left(parse_element_arg(left_str), t);
    else if (has_r)
      sol = czlab::solve_right(parse_element_arg(right_str), t);
    else
      sol = czlab::Region::point(t);
    std::cout << to_string(sol) << "\n";
    return 0;
  }

  throw usage_error("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const czlab::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const czlab::ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
