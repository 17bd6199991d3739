// Acceptance gate: one line per criterion, "[PASS]" or "[FAIL]", exit 0 only
// if every criterion holds. All comparisons are exact; there are no numeric
// tolerances anywhere in the suite.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "czlab/report_json.hpp"
#include "czlab/topology.hpp"
#include "czlab/verify.hpp"

using namespace czlab;

namespace {

constexpr std::uint64_t kSeed = 0xC2;

// ---- plumbing --------------------------------------------------------------

bool from_report(const CheckReport& r, std::string& detail) {
  if (r.verdict == Verdict::Pass) return true;
  detail = r.witness.value_or("no witness recorded");
  return false;
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += CZLAB_BIN;
  cmd += " " + args;
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// ---- random material for the region-algebra battery ------------------------

struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}
  Coord pick(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(eng() %
                                   static_cast<std::uint64_t>(hi - lo + 1));
  }
  IntervalZ interval(Coord m) {
    switch (pick(0, 3)) {
      case 0: return IntervalZ::all();
      case 1: return IntervalZ::at_least(pick(-m, m));
      case 2: return IntervalZ::at_most(pick(-m, m));
      default: {
        Coord a = pick(-m, m), b = pick(-m, m);
        return IntervalZ::of(std::min(a, b), std::max(a, b));
      }
    }
  }
  Region region(Coord m, int max_cells = 3) {
    Region r;
    int n = static_cast<int>(pick(1, max_cells));
    for (int k = 0; k < n; ++k) r.push({interval(m), interval(m), interval(m)});
    return r;
  }
  Element element(Coord m) { return {pick(-m, m), pick(-m, m)}; }
};

Coord max_constant(const Region& r) {
  Coord m = 0;
  auto upd = [&m](const IntervalZ& v) {
    if (v.lo.is_finite()) m = std::max(m, std::abs(v.lo.value()));
    if (v.hi.is_finite()) m = std::max(m, std::abs(v.hi.value()));
  };
  for (const Cell& c : r.cells()) {
    upd(c.x);
    upd(c.y);
    upd(c.d);
  }
  return m;
}

// Criterion 3: exact boolean algebra, emptiness-vs-enumeration, pointwise
// translations/preimages, product soundness, and finite-factor products,
// over 1000 random regions.
bool region_algebra_battery(std::string& detail) {
  Gen g(kSeed);
  auto fail = [&detail](const std::string& what) {
    detail = what;
    return false;
  };
  for (int t = 0; t < 1000; ++t) {
    Region a = g.region(6), b = g.region(6);
    if (!equals(complement(complement(a)), a))
      return fail("double complement broke at case " + std::to_string(t));
    if (!equals(complement(unite(a, b)),
                intersect(complement(a), complement(b))) ||
        !equals(complement(intersect(a, b)),
                unite(complement(a), complement(b))))
      return fail("de Morgan broke at case " + std::to_string(t));
    if (is_subset(a, b) != is_empty(intersect(a, complement(b))))
      return fail("subset/emptiness mismatch at case " + std::to_string(t));
    Coord m = 3 * max_constant(a) + 3;
    bool has = !enumerate(a, Window{-m, m, -m, m}).empty();
    if (is_empty(a) == has)
      return fail("emptiness vs enumeration at case " + std::to_string(t));

    Element sh = g.element(6), z = g.element(10);
    if (member(preimage_right(a, sh), z) != member(a, multiply(z, sh)) ||
        member(preimage_left(sh, a), z) != member(a, multiply(sh, z)))
      return fail("preimage pointwise at case " + std::to_string(t));
    Region tr = translate_right(a, sh), tl = translate_left(sh, a);
    Element q = g.element(8);
    if (member(tr, q) !=
        !is_empty(intersect(a, preimage_right(Region::point(q), sh))))
      return fail("right translate fiber at case " + std::to_string(t));
    if (member(tl, q) !=
        !is_empty(intersect(a, preimage_left(sh, Region::point(q)))))
      return fail("left translate fiber at case " + std::to_string(t));
  }
  // Product soundness on windows.
  for (int t = 0; t < 300; ++t) {
    Region a = g.region(4, 2), b = g.region(4, 2);
    Region p = product(a, b);
    for (Element x : enumerate(a, Window::square(5)))
      for (Element y : enumerate(b, Window::square(5)))
        if (!member(p, multiply(x, y)))
          return fail("product soundness at case " + std::to_string(t));
  }
  // Finite factors expand into unions of translations, on both sides.
  for (int t = 0; t < 300; ++t) {
    Region r = g.region(5);
    Region f = Region::empty();
    std::vector<Element> members;
    for (Coord k = 0, n = g.pick(1, 5); k < n; ++k) {
      Element p = g.element(5);
      members.push_back(p);
      f = unite(f, Region::point(p));
    }
    Region lhs = product(f, r), rhs = Region::empty();
    for (Element p : members) rhs = unite(rhs, translate_left(p, r));
    if (!equals(lhs, rhs))
      return fail("finite left factor at case " + std::to_string(t));
    Region lhs2 = product(r, f), rhs2 = Region::empty();
    for (Element p : members) rhs2 = unite(rhs2, translate_right(r, p));
    if (!equals(lhs2, rhs2))
      return fail("finite right factor at case " + std::to_string(t));
  }
  detail = "1000 regions, 300 products, 300 finite factors";
  return true;
}

// Criterion 9: isolation inventories plus minimal separation witnesses.
bool topology_profiles(std::string& detail) {
  if (!isolated_in_window(Family::Tau1, Window::square(5)).empty() ||
      !isolated_in_window(Family::Tau2, Window::square(5)).empty()) {
    detail = "diagonal family reported an isolated point";
    return false;
  }
  auto wb = isolated_in_window(Family::TauB, Window::square(2));
  auto wd = isolated_in_window(Family::TauBd, Window::square(2));
  if (wb.size() != 15 || wd.size() != 15) {
    detail = "wedge family counts " + std::to_string(wb.size()) + "/" +
             std::to_string(wd.size()) + ", want 15/15";
    return false;
  }
  for (Element p : wb)
    if (p.i > 0) {
      detail = "non-left point " + p.str() + " listed as isolated";
      return false;
    }
  for (Element p : wd)
    if (p.j > 0) {
      detail = "dual point " + p.str() + " listed as isolated";
      return false;
    }
  for (Family f : {Family::Tau1, Family::Tau2, Family::TauB, Family::TauBd})
    for (Coord pi = -4; pi <= 4; ++pi)
      for (Coord pj = -4; pj <= 4; ++pj)
        for (Coord qi = -4; qi <= 4; ++qi)
          for (Coord qj = -4; qj <= 4; ++qj) {
            Element p{pi, pj}, q{qi, qj};
            if (p == q) continue;
            Coord n = separates(f, p, q);
            if (member(basic(f, p, n), q) ||
                (n > 1 && !member(basic(f, p, n - 1), q))) {
              detail = std::string("separation not minimal for ") +
                       family_name(f) + " at p=" + p.str() + " q=" + q.str();
              return false;
            }
          }
  CheckReport r = check_isolated_profiles(5, 4);
  return from_report(r, detail);
}

// Criterion 10: the continuity/discontinuity story across the families.
bool shift_story(std::string& detail) {
  auto fail_at = [&detail](const std::string& what) {
    detail = what;
    return false;
  };
  // Wedge family, right shifts: continuous with the uniform schedule.
  for (Coord gi = -3; gi <= 3; ++gi)
    for (Coord gj = -3; gj <= 3; ++gj)
      for (Coord pi = -3; pi <= 3; ++pi)
        for (Coord pj = -3; pj <= 3; ++pj) {
          Element gg{gi, gj}, pp{pi, pj};
          auto v = shift_continuity(Family::TauB, Side::Right, gg, pp, 6);
          if (v.kind != ContinuityVerdict::Kind::ContinuousUpTo)
            return fail_at("right shift by " + gg.str() + " at " + pp.str() +
                           " is not continuous");
          for (auto [k, n] : v.witnesses) {
            Coord want = pp.i >= 1 ? k : 1;
            if (n != want)
              return fail_at("schedule n(" + std::to_string(k) +
                             ")=" + std::to_string(n) + " at " + pp.str() +
                             " by " + gg.str());
          }
          // Dual family, left shifts, mirrored through inversion.
          auto vd = shift_continuity(Family::TauBd, Side::Left,
                                     invert(gg), invert(pp), 6);
          if (vd.kind != ContinuityVerdict::Kind::ContinuousUpTo)
            return fail_at("dual left shift mirror failed at " + pp.str());
        }
  // Wedge family, the documented left discontinuity, with its exact tail
  // certificate.
  auto bad = shift_continuity(Family::TauB, Side::Left, {0, 1}, {1, 1}, 6);
  if (bad.kind != ContinuityVerdict::Kind::Discontinuous || bad.bound != 1)
    return fail_at("left shift by (0,1) at (1,1) not flagged at level 1");
  Region target = basic(Family::TauB, multiply({0, 1}, {1, 1}), 1);
  if (!equals(bad.certificate, preimage_left({0, 1}, complement(target))))
    return fail_at("left discontinuity certificate is not the exact tail");
  if (!forall_n_meets(Family::TauB, {1, 1}, bad.certificate))
    return fail_at("left discontinuity certificate does not meet every "
                   "neighborhood");
  auto badd = shift_continuity(Family::TauBd, Side::Right, {1, 0}, {1, 1}, 6);
  if (badd.kind != ContinuityVerdict::Kind::Discontinuous || badd.bound != 1)
    return fail_at("dual right shift by (1,0) at (1,1) not flagged");
  if (!forall_n_meets(Family::TauBd, {1, 1}, badd.certificate))
    return fail_at("dual discontinuity certificate does not meet every "
                   "neighborhood");
  // Diagonal families: two-sided continuity everywhere on the grid.
  for (Family f : {Family::Tau1, Family::Tau2})
    for (Side side : {Side::Left, Side::Right})
      for (Coord gi = -3; gi <= 3; ++gi)
        for (Coord gj = -3; gj <= 3; ++gj)
          for (Coord pi = -3; pi <= 3; ++pi)
            for (Coord pj = -3; pj <= 3; ++pj) {
              auto v = shift_continuity(f, side, {gi, gj}, {pi, pj}, 6);
              if (v.kind != ContinuityVerdict::Kind::ContinuousUpTo)
                return fail_at(std::string(family_name(f)) +
                               " shift not continuous at (" +
                               std::to_string(pi) + "," + std::to_string(pj) +
                               ")");
            }
  CheckReport r = check_shift_witnesses(3, 6);
  return from_report(r, detail);
}

// Criterion 14: CLI determinism, golden bytes across job counts, and the
// mutation self-test with a replayable witness.
bool tooling_determinism(std::string& detail) {
  auto fail_at = [&detail](const std::string& what) {
    detail = what;
    return false;
  };
  CliResult all = run_cli("check all");
  if (all.status != 0) return fail_at("'check all' exited nonzero");
  std::string base = "/tmp/czlab_acc_" + std::to_string(getpid());
  CliResult j1 = run_cli("check all --jobs 1 --json " + base + "_1.json");
  CliResult j8 = run_cli("check all --jobs 8 --json " + base + "_8.json");
  if (j1.status != 0 || j8.status != 0)
    return fail_at("json-producing runs exited nonzero");
  auto slurp = [](const std::string& p) {
    std::ostringstream ss;
    std::ifstream in(p, std::ios::binary);
    ss << in.rdbuf();
    return ss.str();
  };
  std::string t1 = slurp(base + "_1.json"), t8 = slurp(base + "_8.json");
  std::remove((base + "_1.json").c_str());
  std::remove((base + "_8.json").c_str());
  if (t1.empty() || t1 != t8)
    return fail_at("JSON reports differ between --jobs 1 and --jobs 8");

  RunConfig cfg;
  cfg.corrupt_multiply = true;
  auto reports = run_all(cfg);
  int failures = 0;
  for (const CheckReport& r : reports)
    if (r.verdict == Verdict::Fail) ++failures;
  if (failures < 1) return fail_at("mutation produced no failing check");
  CheckReport ax = run_named("axioms", cfg);
  if (ax.verdict != Verdict::Fail || !ax.witness)
    return fail_at("mutated axioms check did not fail with a witness");
  long long wi = 0, wj = 0;
  if (std::sscanf(ax.witness->c_str(), "%*[^(](%lld,%lld)", &wi, &wj) != 2)
    return fail_at("mutation witness '" + *ax.witness + "' not parseable");
  Element a{wi, wj}, ai = invert(a);
  bool replays = corrupted_multiply(corrupted_multiply(a, ai), a) != a ||
                 corrupted_multiply(corrupted_multiply(ai, a), ai) != ai ||
                 corrupted_multiply(a, ai) != Element{a.i, a.i} ||
                 corrupted_multiply(ai, a) != Element{a.j, a.j};
  if (!replays)
    return fail_at("mutation witness " + a.str() + " does not replay");
  CliResult mut = run_cli("check axioms --mutate 2>/dev/null");
  if (mut.status != 1) return fail_at("--mutate did not exit 1");
  detail = "json " + std::to_string(t1.size()) + " bytes, " +
           std::to_string(failures) + " mutated check(s) failing";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"semigroup axioms exhaustive on [-6,6]^2",
       [](std::string& d) {
         return from_report(check_semigroup_axioms(6), d);
       }},
      {"order characterizations on [-5,5]^2, order regions on [-10,10]^2",
       [](std::string& d) {
         return from_report(check_order_characterization(5, 10), d);
       }},
      {"region algebra laws on 1000 random regions, exact",
       region_algebra_battery},
      {"translation inclusions on the full grid <=5 plus 100 random tuples "
       "in [-50,50]^4",
       [](std::string& d) {
         return from_report(check_lemma_2_7(5, 100, 50, kSeed), d);
       }},
      {"quadrant and down-ray continuity inclusions with m-bounds, n<=3, "
       "coords<=3, inversion included",
       [](std::string& d) {
         if (!from_report(check_continuity_inclusions_tau1(3, 3), d))
           return false;
         return from_report(check_continuity_inclusions_tau2(3, 3), d);
       }},
      {"wedge right-translation inclusions, p<=3, coords<=3, isolated "
       "subcases recorded",
       [](std::string& d) {
         CheckReport r = check_prop_2_9(3, 3);
         if (!from_report(r, d)) return false;
         for (auto& [k, v] : r.params)
           if (k == "isolated_target_subcases") d = k + "=" + v;
         return true;
       }},
      {"equation solution regions: symbolic grid coords<=3, brute on "
       "[-12,12]^2",
       [](std::string& d) {
         return from_report(check_lemma_3_1_solutions(3, 12, 200, 8, kSeed),
                            d);
       }},
      {"fiber preimage identities and singleton extraction, coords<=3, k<=4",
       [](std::string& d) {
         return from_report(check_prop_3_1_identities(3, 4), d);
       }},
      {"isolation profiles and minimal T1 separation on [-4,4]^2",
       topology_profiles},
      {"shift continuity story: uniform right schedule, exact left "
       "discontinuity certificates, duals, diagonal families",
       shift_story},
      {"no finite subcover: 50 random families, explicit uncovered points",
       [](std::string& d) {
         return from_report(check_no_finite_subcover(50, 20, 30, kSeed), d);
       }},
      {"left half-plane density under the wedge family on [-4,4]^2",
       [](std::string& d) {
         return from_report(check_density_and_quasiregularity(4), d);
       }},
      {"direction-preserving bijections: shift identity and round trip, "
       "coords<=3, window 12",
       [](std::string& d) {
         return from_report(check_lemma_3_5_maps(3, 12), d);
       }},
      {"tooling: clean exit, byte-identical JSON across jobs, replayable "
       "mutation witness",
       tooling_determinism},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[k].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %02zu: %s%s%s\n", ok ? "PASS" : "FAIL", k + 1,
                criteria[k].title, detail.empty() ? "" : " -- ",
                detail.c_str());
  }
  if (failed) std::printf("%d criteria failed\n", failed);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failed == 0 ? 0 : 1;
}
