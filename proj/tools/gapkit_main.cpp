// gapkit -- analyze finite functions A^n -> B: essential arity, arity gap,
// group-based decompositions, exact counts, and brute-force verification.
//
// Exit codes: 0 success (verify: all checks passed), 2 unreadable or
// malformed input file, 3 inessential variables without --normalize,
// 4 decomposition precondition violated, 5 unsupported count parameters,
// 6 function space exceeds the budget and no --samples given.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gapkit/counting.hpp"
#include "gapkit/decompose.hpp"
#include "gapkit/enumerate.hpp"
#include "gapkit/gap.hpp"
#include "gapkit/group.hpp"

using nlohmann::json;
using namespace gapkit;

namespace {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct Options {
  std::string format = "text";
  bool normalize = false;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 12345;
};

std::uint64_t env_budget() {
  if (const char* env = std::getenv("GAPKIT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed GAPKIT_BUDGET\n";
    }
  }
  return kDefaultBudget;
}

json report_to_json(const FnTable& f, const std::vector<int>& essvars, const GapReport* rep) {
  json doc;
  doc["k"] = f.k;
  doc["ell"] = f.ell;
  doc["n"] = f.n;
  doc["values"] = f.values;
  doc["ess"] = essvars.size();
  doc["essential_variables"] = essvars;
  if (rep) {
    doc["qa"] = rep->qa;
    doc["essl"] = rep->essl;
    doc["gap"] = rep->gap;
    doc["case"] = gap_case_name(rep->kase);
    json witness = json::object();
    if (rep->ternary) {
      witness["h"] = rep->ternary->h;
      witness["i"] = {rep->ternary->i1, rep->ternary->i2, rep->ternary->i3};
    }
    if (rep->oddsupp_factor) {
      json factor = json::array();
      for (const auto& [mask, v] : rep->oddsupp_factor->values)
        factor.push_back({{"set", oddsupp_elements(mask)}, {"value", v}});
      witness["oddsupp_factor"] = factor;
    }
    if (rep->diag_constant) witness["diag_constant"] = *rep->diag_constant;
    doc["witness"] = witness;
  } else {
    doc["gap"] = nullptr;
    doc["case"] = "undefined";
  }
  return doc;
}

void print_report_text(const FnTable& f, const std::vector<int>& essvars, const GapReport* rep) {
  std::cout << "k=" << f.k << " ell=" << f.ell << " n=" << f.n << "\n";
  std::cout << "ess = " << essvars.size() << "  (essential variables:";
  for (int v : essvars) std::cout << " x" << v;
  std::cout << ")\n";
  if (!rep) {
    std::cout << "gap undefined: needs at least two essential variables\n";
    return;
  }
  std::cout << "qa = " << rep->qa << "\n";
  std::cout << "ess_drop = " << rep->essl << "\n";
  std::cout << "gap = " << rep->gap << "\n";
  std::cout << "case = " << gap_case_name(rep->kase);
  if (rep->ternary) {
    std::cout << "  h = [";
    for (std::size_t i = 0; i < rep->ternary->h.size(); ++i)
      std::cout << (i ? " " : "") << rep->ternary->h[i];
    std::cout << "]  pattern = (" << rep->ternary->i1 << "," << rep->ternary->i2 << ","
              << rep->ternary->i3 << ")";
  }
  if (rep->diag_constant) std::cout << "  diagonal constant = " << *rep->diag_constant;
  std::cout << "\n";
}

int cmd_analyze(const Options& opt, const std::string& path) {
  FnTable f;
  try {
    f = read_fn_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<int> essvars = essential_variables(f);
  if (static_cast<int>(essvars.size()) < f.n) {
    if (!opt.normalize) {
      std::cerr << "error: " << (f.n - static_cast<int>(essvars.size()))
                << " inessential variable(s) present; re-run with --normalize\n";
      return 3;
    }
    f = drop_inessential(f);
    essvars = essential_variables(f);
  }

  if (static_cast<int>(essvars.size()) < 2) {
    if (opt.format == "json")
      std::cout << report_to_json(f, essvars, nullptr).dump(2) << "\n";
    else
      print_report_text(f, essvars, nullptr);
    return 0;
  }

  const GapReport rep = classify(f);
  if (opt.format == "json")
    std::cout << report_to_json(f, essvars, &rep).dump(2) << "\n";
  else
    print_report_text(f, essvars, &rep);
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& path, const std::string& group_spec,
                  const std::string& outdir, bool want_formal_sum) {
  FnTable f;
  try {
    f = read_fn_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  AbelianGroup grp;
  try {
    grp = parse_group_spec(group_spec);
  } catch (const std::exception& e) {
    std::cerr << "error: group spec: " << e.what() << "\n";
    return 4;
  }
  if (grp.order != f.ell) {
    std::cerr << "error: group order " << grp.order << " does not match ell " << f.ell << "\n";
    return 4;
  }

  if (essential_arity(f) < f.n) {
    if (!opt.normalize) {
      std::cerr << "error: inessential variable(s) present; re-run with --normalize\n";
      return 3;
    }
    f = drop_inessential(f);
  }

  Decomposition d;
  try {
    const int qa = quasi_arity(f);
    d = (qa < f.n) ? decompose_quasi(f, grp) : decompose_gap2(f, grp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }

  if (fn_add(d.h, d.g, grp) != f) {
    std::cerr << "internal error: decomposition does not recombine\n";
    return 1;
  }

  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  const std::string h_path = outdir + "/h.txt";
  const std::string g_path = outdir + "/g.txt";
  try {
    write_fn_file(h_path, d.h);
    write_fn_file(g_path, d.g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string fs_path;
  if (want_formal_sum) {
    try {
      const FormalSum fs = formal_sum_support(f, grp);
      fs_path = outdir + "/formal_sum.txt";
      std::ofstream out(fs_path);
      out << fs.k << ' ' << fs.ell << ' ' << fs.n << '\n';
      for (const FormalTerm& term : fs.terms) {
        out << "I:";
        for (int v : term.vars) out << ' ' << v;
        out << " ; table:";
        for (int v : term.values) out << ' ' << v;
        out << '\n';
      }
    } catch (const std::exception& e) {
      std::cerr << "error: formal sum: " << e.what() << "\n";
      return 4;
    }
  }

  if (opt.format == "json") {
    json doc;
    doc["k"] = f.k;
    doc["ell"] = f.ell;
    doc["n"] = f.n;
    doc["case"] = decomp_case_name(d.kase);
    doc["p"] = d.p;
    doc["h_file"] = h_path;
    doc["g_file"] = g_path;
    if (!fs_path.empty()) doc["formal_sum_file"] = fs_path;
    doc["verified"] = true;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "case = " << decomp_case_name(d.kase) << "  p = " << d.p << "\n";
    std::cout << "h -> " << h_path << "\n";
    std::cout << "g -> " << g_path << "\n";
    if (!fs_path.empty()) std::cout << "formal sum -> " << fs_path << "\n";
    std::cout << "recombination verified\n";
  }
  return 0;
}

int cmd_count(const Options& opt, int k, int ell, int n, int p, int r, int m, bool exact) {
  const int given = (p >= 0) + (r >= 0) + (m >= 0);
  if (given != 1) {
    std::cerr << "error: give exactly one of --p, --r, --m\n";
    return 5;
  }
  mpz_class value;
  std::string which;
  try {
    if (p >= 0) {
      value = count_G(k, ell, n, p);
      which = "G";
    } else if (r >= 0) {
      value = count_U(k, ell, n, r);
      which = "U";
    } else {
      value = count_Q(k, ell, n, m);
      which = "Q";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  if (opt.format == "json") {
    json doc;
    doc["k"] = k;
    doc["ell"] = ell;
    doc["n"] = n;
    if (p >= 0) doc["p"] = p;
    if (r >= 0) doc["r"] = r;
    if (m >= 0) doc["m"] = m;
    doc["kind"] = which;
    doc["value"] = value.get_str();
    doc["sci"] = format_sci2(value);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << format_count(value, exact) << "\n";
  }
  return 0;
}

int cmd_table(const Options& opt, int k, int ell, int nmax, bool exact) {
  std::vector<GapCountRow> rows;
  try {
    rows = count_table(k, ell, nmax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  if (opt.format == "json") {
    json out;
    out["k"] = k;
    out["ell"] = ell;
    json jrows = json::array();
    for (const GapCountRow& row : rows) {
      json jr;
      jr["n"] = row.n;
      jr["u"] = row.u.get_str();
      json g = json::array();
      for (const mpz_class& v : row.g) g.push_back(v.get_str());
      jr["g"] = g;
      jrows.push_back(jr);
    }
    out["rows"] = jrows;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"n", "U_nn"};
  for (int p = 1; p <= nmax; ++p) header.push_back("G_n" + std::to_string(p));
  grid.push_back(header);
  for (const GapCountRow& row : rows) {
    std::vector<std::string> line = {std::to_string(row.n), format_count(row.u, exact)};
    for (const mpz_class& v : row.g) line.push_back(format_count(v, exact));
    for (int p = row.n + 1; p <= nmax; ++p) line.push_back("-");
    grid.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : grid)
    for (std::size_t col = 0; col < line.size(); ++col)
      width[col] = std::max(width[col], line[col].size());
  std::cout << "k=" << k << " ell=" << ell << "\n";
  for (const auto& line : grid) {
    for (std::size_t col = 0; col < line.size(); ++col) {
      std::cout << std::string(width[col] - line[col].size(), ' ') << line[col]
                << (col + 1 < line.size() ? "  " : "");
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, int k, int ell, int n, std::uint64_t samples, int threads) {
  const bool sampled = samples > 0;
  if (!sampled) {
    mpz_class space;
    try {
      space = function_space_size(k, ell, n);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 6;
    }
    if (space > mpz_class(static_cast<unsigned long>(opt.budget))) {
      std::cerr << "error: " << space.get_str() << " tables exceed budget " << opt.budget
                << "; use --samples or raise --budget\n";
      return 6;
    }
  }

  try {
    if (!sampled) {
      const Census c = census_exhaustive(k, ell, n, opt.budget, threads);
      const CensusComparison cmp = compare_census(c);
      if (opt.format == "json") {
        json doc;
        doc["k"] = k;
        doc["ell"] = ell;
        doc["n"] = n;
        doc["mode"] = "exhaustive";
        doc["total"] = c.total;
        doc["ess_below"] = c.ess_below;
        doc["gap_count"] = c.gap_count;
        doc["mismatches"] = cmp.mismatches;
        doc["ok"] = cmp.all_match;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "exhaustive census of " << c.total << " tables (k=" << k << " ell=" << ell
                  << " n=" << n << ")\n";
        for (const std::string& line : cmp.lines) std::cout << "  " << line << "\n";
        std::cout << (cmp.all_match ? "all tallies match" : "MISMATCH") << "\n";
      }
      return cmp.all_match ? 0 : 1;
    }

    const Census c = census_sampled(k, ell, n, samples, opt.seed, threads);
    const SampledCheck check = sampled_property_check(k, ell, n, samples, opt.seed, threads);
    if (opt.format == "json") {
      json doc;
      doc["k"] = k;
      doc["ell"] = ell;
      doc["n"] = n;
      doc["mode"] = "sampled";
      doc["samples"] = check.samples;
      doc["seed"] = opt.seed;
      doc["gap_count"] = c.gap_count;
      doc["ess_below"] = c.ess_below;
      doc["ess_full_seen"] = check.ess_full;
      doc["violations"] = check.violations;
      doc["details"] = check.details;
      doc["ok"] = check.violations == 0;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "sampled sweep of " << check.samples << " tables (k=" << k << " ell=" << ell
                << " n=" << n << ", seed " << opt.seed << ")\n";
      std::cout << "  fully essential: " << check.ess_full << "\n";
      std::cout << "  violations: " << check.violations << "\n";
      for (const std::string& d : check.details) std::cout << "  " << d << "\n";
    }
    return check.violations == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  }
}

int cmd_selftest() {
  int failures = 0;
  auto step = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  const FnTable xor2(2, 2, 2, {0, 1, 1, 0});
  step("xor has gap 2", classify(xor2).gap == 2 && arity_gap(xor2) == 2);
  const FnTable and2(2, 2, 2, {0, 0, 0, 1});
  step("and has gap 1", classify(and2).gap == 1);

  step("reference count row (2,2,3)",
       count_U(2, 2, 3, 3) == 218 && count_G(2, 2, 3, 1) == 208 && count_G(2, 2, 3, 2) == 10);
  step("reference count row (3,3,3)", count_G(3, 3, 3, 2) == 139896);

  bool census_ok = true;
  for (const auto& [ck, cl, cn] :
       std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}}) {
    census_ok =
        census_ok && compare_census(census_exhaustive(ck, cl, cn, kDefaultBudget)).all_match;
  }
  step("exhaustive censuses match the formulas", census_ok);

  const AbelianGroup z2 = make_cyclic(2);
  const SynthInstance inst = synth_gap_instance(5, 2, 4, 2, z2, 7);
  const Decomposition d = decompose_gap2(inst.f, z2);
  step("gap-2 decomposition round trip",
       fn_add(d.h, d.g, z2) == inst.f && d.g == inst.g && d.h == inst.h);

  std::vector<int> sum4(16);
  for (int t = 0; t < 16; ++t) sum4[static_cast<std::size_t>(t)] = __builtin_popcount(t) % 2;
  step("phi_tilde lifts the binary sum to arity 4",
       phi_tilde(FnTable(2, 2, 2, {0, 1, 1, 0}), z2, 4) == FnTable(2, 2, 4, sum4));

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gapkit: essential arity, arity gap, decompositions, and exact counts of finite functions"};
  app.require_subcommand(1);
  // global flags may follow the subcommand
  app.fallthrough();

  Options opt;
  opt.budget = env_budget();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--normalize", opt.normalize, "Drop inessential variables before analysis");
  app.add_option("--budget", opt.budget, "Exhaustive sweep budget (tables)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled sweeps")->capture_default_str();
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = auto)");

  std::string fnfile, group_spec, outdir = ".";
  bool want_formal_sum = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Classify a function file by arity gap");
  analyze->add_option("fnfile", fnfile, "Function file")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "Write the unique h + g decomposition");
  decompose->add_option("fnfile", fnfile, "Function file")->required();
  decompose
      ->add_option("--group", group_spec, "Group spec: cyclic:m1xm2..., boolean:d, table:<path>")
      ->required();
  decompose->add_option("--outdir", outdir, "Output directory")->capture_default_str();
  decompose->add_flag("--formal-sum", want_formal_sum,
                      "Also write the low-arity formal sum support");

  int k = 2, ell = 2, n = 2, nmax = 2;
  int p = -1, r = -1, m = -1;
  bool exact = false;
  CLI::App* count = app.add_subcommand("count", "Evaluate a counting formula");
  count->add_option("--k", k, "Domain size")->required();
  count->add_option("--l", ell, "Codomain size")->required();
  count->add_option("--n", n, "Arity")->required();
  count->add_option("--p", p, "Arity gap (selects G)");
  count->add_option("--r", r, "Exact essential arity (selects U)");
  count->add_option("--m", m, "Quasi-arity (selects Q)");
  count->add_flag("--exact", exact, "Print full integers");

  CLI::App* table = app.add_subcommand("table", "Print the count table for n = 2..nmax");
  table->add_option("--k", k, "Domain size")->required();
  table->add_option("--l", ell, "Codomain size")->required();
  table->add_option("--nmax", nmax, "Largest arity")->required();
  table->add_flag("--exact", exact, "Print full integers");

  std::uint64_t samples = 0;
  CLI::App* verify = app.add_subcommand("verify", "Census the function space against the formulas");
  verify->add_option("--k", k, "Domain size")->required();
  verify->add_option("--l", ell, "Codomain size")->required();
  verify->add_option("--n", n, "Arity")->required();
  verify->add_option("--samples", samples, "Sample count (0 = exhaustive)");

  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in quick checks");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return cmd_analyze(opt, fnfile);
  if (decompose->parsed()) return cmd_decompose(opt, fnfile, group_spec, outdir, want_formal_sum);
  if (count->parsed()) return cmd_count(opt, k, ell, n, p, r, m, exact);
  if (table->parsed()) return cmd_table(opt, k, ell, nmax, exact);
  if (verify->parsed()) return cmd_verify(opt, k, ell, n, samples, threads);
  if (selftest->parsed()) return cmd_selftest();
  return 0;
}
