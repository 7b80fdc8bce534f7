#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "kperm/certifier.hpp"
#include "kperm/error.hpp"
#include "kperm/mahonian.hpp"
#include "kperm/numtheory.hpp"
#include "kperm/oracle.hpp"

namespace kperm::cli {

namespace {

struct CliConfig {
  std::string format;  // empty: the command's default
  unsigned jobs = 1;
  std::uint64_t factor_budget = kDefaultFactorBudget;
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::uint32_t table_cap = kDefaultTableCap;

  CertifyOptions certify_options() const {
    CertifyOptions o;
    o.factor_budget = factor_budget;
    o.table_cap = table_cap;
    return o;
  }
  bool pretty() const { return format == "pretty"; }
};

int cmd_sphere(const CliConfig& cfg, std::uint32_t n, std::int64_t i, std::ostream& out) {
  BigInt value = 0;
  if (i >= 0) {
    const auto row = sphere_row(n, static_cast<std::uint64_t>(i), cfg.table_cap);
    if (static_cast<std::uint64_t>(i) < row.size()) value = row[i];
  } else {
    sphere_row(n, 0, cfg.table_cap);  // validates n
  }
  if (cfg.pretty()) out << "S(" << n << ',' << i << ") = ";
  out << to_decimal(value) << '\n';
  return kOk;
}

int cmd_ball(const CliConfig& cfg, std::uint32_t n, std::uint64_t r, std::ostream& out) {
  const BigInt value = ball_size_for(n, r, cfg.table_cap);
  if (cfg.pretty()) out << "B(" << n << ',' << r << ") = ";
  out << to_decimal(value) << '\n';
  return kOk;
}

int cmd_certify(const CliConfig& cfg, std::uint32_t n, std::uint64_t t, std::ostream& out) {
  const Certificate c = certify(n, t, cfg.certify_options());
  out << (cfg.pretty() ? to_pretty(c) : to_record(c)) << '\n';
  return c.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
}

int cmd_scan(const CliConfig& cfg, std::uint64_t t, std::uint32_t from, std::uint32_t to,
             std::ostream& out) {
  const auto entries = scan(t, from, to, cfg.certify_options(), cfg.jobs);
  bool any_error = false, any_budget = false, any_inconclusive = false;
  for (const auto& e : entries) {
    if (cfg.pretty()) {
      out << "n=" << e.n << ": " << (e.certificate ? to_pretty(*e.certificate) : "error: " + e.error)
          << '\n';
    } else {
      out << to_record(e) << '\n';
    }
    if (!e.certificate) {
      (e.budget_exhausted ? any_budget : any_error) = true;
    } else if (e.certificate->verdict == Verdict::Inconclusive) {
      any_inconclusive = true;
    }
  }
  if (any_error) return kValidationError;
  if (any_budget) return kBudgetExhausted;
  return any_inconclusive ? kInconclusive : kOk;
}

int cmd_table(const CliConfig& cfg, std::uint32_t max_n, std::optional<std::uint64_t> max_r,
              std::ostream& out) {
  write_table_tsv(out, build_table(max_n, cfg.table_cap), max_r);
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::uint32_t n, std::ostream& out) {
  const auto histogram = inversion_histogram(n);  // enforces the enumeration cap
  const auto table = build_table(std::max<std::uint32_t>(n, 2), cfg.table_cap);
  const auto row = table.row(n);
  bool all_pass = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all_pass = all_pass && ok;
  };

  bool same = histogram.counts.size() == row.size();
  for (std::size_t i = 0; same && i < row.size(); ++i) same = row[i] == histogram.counts[i];
  report("histogram matches recurrence row " + std::to_string(n), same);

  BigInt sum = 0;
  for (const auto& s : row) sum += s;
  report("row sum equals " + std::to_string(n) + "!", sum == factorial(n));

  report("row symmetry", std::equal(row.begin(), row.end(), row.rbegin()));

  bool closed = true;
  for (int i = 0; i <= 5; ++i) {
    if (n >= sphere_closed_form_min_n(i)) closed = closed && sphere_closed_form(n, i) == row[i];
    if (n >= ball_closed_form_min_n(i)) {
      closed = closed && ball_closed_form(n, i) == ball_size(table, n, i).value;
    }
  }
  report("closed forms for radii 0..5", closed);

  if (n >= 4) {
    bool ok = true;
    for (std::int64_t i = 4; i <= static_cast<std::int64_t>(n) - 1; ++i) {
      ok = ok && sphere_size_below_n(table, n, i) == row[i];
    }
    report("piecewise recursion for 4 <= i <= n-1", ok);
  }
  if (n >= 5) {
    const auto top = static_cast<std::int64_t>(max_inversions(n) / 2);
    const auto wide = build_table(std::max<std::uint32_t>(n, static_cast<std::uint32_t>(top)),
                                  std::max(cfg.table_cap, static_cast<std::uint32_t>(top)));
    bool ok = true;
    for (std::int64_t i = n; i <= top; ++i) ok = ok && sphere_size_from_n(wide, n, i) == row[i];
    report("piecewise recursion for n <= i <= C(n,2)/2", ok);
  }

  if (n <= kMaxCensusSize) {
    bool ok = true;
    const std::uint64_t max_r = std::min<std::uint64_t>(4, max_inversions(n));
    for (const auto& center : {identity(n), reverse(identity(n))}) {
      for (std::uint64_t r = 0; r <= max_r; ++r) {
        ok = ok && ball_census(n, r, center) == ball_size(table, n, r).value;
      }
    }
    report("ball census is center independent and matches", ok);
  } else {
    out << "SKIP ball census (n > " << kMaxCensusSize << ")\n";
  }

  bool aborted = false;
  if (n <= 5) {
    SearchOptions search;
    search.node_budget = cfg.search_budget;
    const auto result = search_perfect_code(n, 1, search);
    out << "INFO perfect 1-error-correcting code search: " << to_string(result.outcome)
        << " nodes=" << result.nodes_explored << '\n';
    if (result.outcome == SearchOutcome::Found) {
      const bool ok = verify_min_distance(result.code, 3) &&
                      BigInt(static_cast<unsigned long>(result.code.size())) * ball_size(table, n, 1).value ==
                          factorial(n);
      report("found code is perfect", ok);
    }
    aborted = result.outcome == SearchOutcome::AbortedBudget;
  }

  out << (all_pass ? "PASS" : "FAIL") << '\n';
  if (!all_pass) return kCheckFailed;
  return aborted ? kBudgetExhausted : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kendall tau sphere/ball sizes and perfect-code nonexistence certificates",
               "kperm"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"tsv", "records", "pretty"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for scan")->check(CLI::PositiveNumber);
  app.add_option("--factor-budget", cfg.factor_budget, "Pollard rho iteration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-budget", cfg.search_budget, "Exact-cover node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--table-cap", cfg.table_cap, "Largest n for explicit sphere rows")
      ->check(CLI::PositiveNumber);

  std::uint32_t n = 0, max_n = 0, from = 0, to = 0;
  std::int64_t i = 0;
  std::uint64_t r = 0, t = 0;
  std::optional<std::uint64_t> max_r;

  std::function<int()> action;

  auto* sphere = app.add_subcommand("sphere", "Print S_K^n(i)");
  sphere->add_option("--n", n)->required();
  sphere->add_option("--i", i)->required();
  sphere->callback([&] { action = [&] { return cmd_sphere(cfg, n, i, out); }; });

  auto* ball = app.add_subcommand("ball", "Print B_K^n(r)");
  ball->add_option("--n", n)->required();
  ball->add_option("--r", r)->required();
  ball->callback([&] { action = [&] { return cmd_ball(cfg, n, r, out); }; });

  auto* cert = app.add_subcommand("certify", "Certificate for a perfect t-error-correcting code");
  cert->add_option("--n", n)->required();
  cert->add_option("--t", t)->required();
  cert->callback([&] { action = [&] { return cmd_certify(cfg, n, t, out); }; });

  auto* sc = app.add_subcommand("scan", "Certificates for a range of n");
  sc->add_option("--t", t)->required();
  sc->add_option("--from", from)->required();
  sc->add_option("--to", to)->required();
  sc->callback([&] { action = [&] { return cmd_scan(cfg, t, from, to, out); }; });

  auto* table = app.add_subcommand("table", "Sphere and ball table as TSV");
  table->add_option("--max-n", max_n)->required();
  table->add_option("--max-r", max_r);
  table->callback([&] { action = [&] { return cmd_table(cfg, max_n, max_r, out); }; });

  auto* verify = app.add_subcommand("verify", "Check formulas against enumeration of S_n");
  verify->add_option("--n", n)->required();
  verify->callback([&] { action = [&] { return cmd_verify(cfg, n, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  }
}

}  // namespace kperm::cli
