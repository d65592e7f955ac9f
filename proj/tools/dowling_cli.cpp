// Command-line front end: number-family tables, exact evaluation, identity
// sweeps, generating-function cross-checks and certified series sums.
//
// Exit codes: 0 success / all outcomes as expected, 1 unexpected verdict,
// 2 usage or domain error.

#include "dowling/fps.hpp"
#include "dowling/identities.hpp"
#include "dowling/polynomials.hpp"
#include "dowling/rational.hpp"
#include "dowling/series_sum.hpp"
#include "dowling/triangles.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using dowling::Rational;
namespace ident = dowling::identities;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_or_usage(const std::string& text, const std::string& flag) {
  try {
    return dowling::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<Rational> parse_set(const std::string& csv,
                                const std::string& flag) {
  std::vector<Rational> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    values.push_back(parse_or_usage(item, flag));
  if (values.empty()) throw UsageError(flag + ": empty set");
  return values;
}

// ---- table ----------------------------------------------------------------

struct TableOptions {
  std::string family;
  std::string m_text, a_text;
  bool has_m = false, has_a = false;
  unsigned n_max = 0;
  std::string format = "csv";
};

int run_table(const TableOptions& opt) {
  const bool needs_m = opt.family != "stirling2";
  const bool needs_a = opt.family == "ncwhitney";
  if (needs_m && !opt.has_m)
    throw UsageError("table " + opt.family + " requires --m");
  if (needs_a && !opt.has_a)
    throw UsageError("table " + opt.family + " requires --a");

  Rational m = opt.has_m ? parse_or_usage(opt.m_text, "--m") : Rational(0);
  Rational a = opt.has_a ? parse_or_usage(opt.a_text, "--a") : Rational(0);

  auto entry = [&](unsigned n, unsigned k) -> std::string {
    if (opt.family == "stirling2")
      return dowling::stirling2(n, k).str();
    if (opt.family == "twhitney")
      return dowling::to_string(dowling::translated_whitney(m, n, k));
    if (opt.family == "whitney")
      return dowling::to_string(dowling::whitney(m, n, k));
    if (opt.family == "ncwhitney")
      return dowling::to_string(dowling::noncentral_whitney(m, a, n, k));
    throw UsageError("unknown family '" + opt.family +
                     "' (expected stirling2|twhitney|whitney|ncwhitney)");
  };

  if (opt.format == "csv") {
    std::cout << "n,k,value\n";
    for (unsigned n = 0; n <= opt.n_max; ++n)
      for (unsigned k = 0; k <= n; ++k)
        std::cout << n << ',' << k << ',' << entry(n, k) << '\n';
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = 0; n <= opt.n_max; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (unsigned k = 0; k <= n; ++k) row.push_back(entry(n, k));
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(2) << '\n';
  }
  return 0;
}

// ---- eval -----------------------------------------------------------------

struct EvalOptions {
  std::string family;
  std::string m_text = "1", a_text = "0", r_text = "0", x_text = "1";
  bool has_m = false, has_a = false, has_r = false;
  unsigned n = 0;
};

int run_eval(const EvalOptions& opt) {
  const Rational x = parse_or_usage(opt.x_text, "--x");
  Rational value;
  if (opt.family == "geometric") {
    value = dowling::geometric_polynomial(opt.n)(x);
  } else if (opt.family == "geometric2") {
    if (!opt.has_r) throw UsageError("eval geometric2 requires --r");
    value = dowling::geometric_two_variable(
        parse_or_usage(opt.r_text, "--r"), opt.n)(x);
  } else if (opt.family == "td1" || opt.family == "td2") {
    if (!opt.has_m) throw UsageError("eval " + opt.family + " requires --m");
    value = dowling::tanny_dowling(opt.family == "td1" ? 1 : 2,
                                   parse_or_usage(opt.m_text, "--m"), opt.n)(x);
  } else if (opt.family == "ftilde") {
    if (!opt.has_m || !opt.has_a)
      throw UsageError("eval ftilde requires --m and --a");
    value = dowling::noncentral_td(parse_or_usage(opt.m_text, "--m"),
                                   parse_or_usage(opt.a_text, "--a"), opt.n)(x);
  } else {
    throw UsageError("unknown family '" + opt.family +
                     "' (expected geometric|geometric2|td1|td2|ftilde)");
  }
  std::cout << dowling::to_string(value) << '\n';
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> ids;
  std::string m_set = "1,2,3";
  std::string a_set = "-2,-1,0,1,2";
  std::string x_set = "-1/2,1/2,1,2,5/3";
  unsigned n_max = 10;
  std::string variant = "both";
  std::string out;
};

int run_verify(const VerifyOptions& opt) {
  ident::ParameterGrid grid;
  grid.m_set = parse_set(opt.m_set, "--m-set");
  grid.a_set = parse_set(opt.a_set, "--a-set");
  grid.x_set = parse_set(opt.x_set, "--x-set");
  grid.n_max = opt.n_max;

  std::optional<ident::Variant> only_variant;
  if (opt.variant != "both") {
    only_variant = ident::variant_from_string(opt.variant);
    if (!only_variant)
      throw UsageError("--variant must be as-printed, corrected or both");
  }

  std::vector<std::string> ids;
  for (const auto& id : opt.ids) {
    if (id == "all") {
      ids = ident::identity_tags();
      break;
    }
    if (ident::find_identity(id) == nullptr)
      throw UsageError("unknown identity id '" + id + "'");
    ids.push_back(id);
  }

  const ident::SuiteSummary summary = ident::run_suite(ids, grid, only_variant);

  if (!opt.out.empty()) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (opt.out != "-") {
      file.open(opt.out);
      if (!file) throw UsageError("cannot open '" + opt.out + "' for writing");
      os = &file;
    }
    for (const auto& report : summary.reports)
      *os << ident::to_json_line(report) << '\n';
  }

  unsigned holds = 0, fails = 0, skipped = 0;
  for (const auto& [key, stats] : summary.stats) {
    std::cout << key.first << " [" << ident::to_string(key.second) << "]: "
              << stats.holds << " holds, " << stats.fails << " fails, "
              << stats.skipped << " skipped\n";
    holds += stats.holds;
    fails += stats.fails;
    skipped += stats.skipped;
  }
  std::cout << "total: " << (holds + fails + skipped) << " instances, "
            << holds << " holds, " << fails << " fails, " << skipped
            << " skipped\n";
  if (summary.ok()) {
    std::cout << "result: OK (all outcomes match the expectation table)\n";
    return 0;
  }
  for (const auto& line : summary.unexpected)
    std::cout << "unexpected: " << line << '\n';
  std::cout << "result: UNEXPECTED (" << summary.unexpected.size()
            << " deviations)\n";
  return 1;
}

// ---- egf ------------------------------------------------------------------

struct EgfOptions {
  std::string m_text, a_text = "0", x_text;
  unsigned order = 12;
};

int run_egf(const EgfOptions& opt) {
  const Rational m = parse_or_usage(opt.m_text, "--m");
  const Rational a = parse_or_usage(opt.a_text, "--a");
  const Rational x = parse_or_usage(opt.x_text, "--x");
  const auto values = dowling::ftilde_egf(m, a, x, opt.order);
  for (unsigned n = 0; n < values.size(); ++n)
    std::cout << (n ? "," : "") << dowling::to_string(values[n]);
  std::cout << '\n';

  bool match = true;
  for (unsigned n = 0; n < values.size(); ++n)
    if (dowling::noncentral_td(m, a, n)(x) != values[n]) match = false;
  std::cout << "definition-match: " << (match ? "holds" : "FAILS") << '\n';
  return match ? 0 : 1;
}

// ---- series ---------------------------------------------------------------

struct SeriesOptions {
  std::string m_text, a_text = "0", x_text;
  unsigned n = 0;
  std::string eps = "1e-20";
  unsigned max_terms = 10000;
};

int run_series(const SeriesOptions& opt) {
  const Rational m = parse_or_usage(opt.m_text, "--m");
  const Rational a = parse_or_usage(opt.a_text, "--a");
  const Rational x = parse_or_usage(opt.x_text, "--x");
  const Rational eps = parse_or_usage(opt.eps, "--eps");

  const dowling::Enclosure enc =
      dowling::ftilde_series(m, a, opt.n, x, eps, opt.max_terms);
  const Rational reference = dowling::noncentral_td(m, a, opt.n)(x);
  std::cout << "lo = " << dowling::to_string(enc.lo) << '\n'
            << "hi = " << dowling::to_string(enc.hi) << '\n'
            << "terms_used = " << enc.terms_used << '\n'
            << "reference = " << dowling::to_string(reference) << '\n';
  const bool contained = enc.contains(reference);
  std::cout << "contains: " << (contained ? "yes" : "NO") << '\n';
  return contained ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact toolkit for geometric, Whitney and Tanny-Dowling number "
      "families"};
  app.require_subcommand(1);

  TableOptions table;
  auto* table_cmd =
      app.add_subcommand("table", "print a number-family triangle");
  table_cmd->add_option("family", table.family,
                        "stirling2|twhitney|whitney|ncwhitney")
      ->required();
  table_cmd->add_option("--m", table.m_text, "family parameter m");
  table_cmd->add_option("--a", table.a_text, "family parameter a");
  table_cmd->add_option("--n-max", table.n_max, "last row to print")
      ->required();
  table_cmd->add_option("--format", table.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  EvalOptions eval;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a polynomial family exactly");
  eval_cmd->add_option("family", eval.family,
                       "geometric|geometric2|td1|td2|ftilde")
      ->required();
  eval_cmd->add_option("--m", eval.m_text, "parameter m");
  eval_cmd->add_option("--a", eval.a_text, "parameter a");
  eval_cmd->add_option("--r", eval.r_text, "parameter r");
  eval_cmd->add_option("--n", eval.n, "index n")->required();
  eval_cmd->add_option("--x", eval.x_text, "evaluation point")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "sweep identities over a parameter grid and report verdicts");
  verify_cmd->add_option("ids", verify.ids, "identity ids, or 'all'")
      ->required();
  verify_cmd->add_option("--m-set", verify.m_set, "comma-separated m values");
  verify_cmd->add_option("--a-set", verify.a_set,
                         "comma-separated a values (also feeds a1/a2 and r)");
  verify_cmd->add_option("--x-set", verify.x_set,
                         "comma-separated x values (also feeds x1/x2 pairs)");
  verify_cmd->add_option("--n-max", verify.n_max, "largest n");
  verify_cmd->add_option("--variant", verify.variant,
                         "as-printed|corrected|both");
  verify_cmd->add_option("--out", verify.out,
                         "write the JSONL report here ('-' for stdout)");

  EgfOptions egf;
  auto* egf_cmd = app.add_subcommand(
      "egf", "generating-function values with a definition cross-check");
  egf_cmd->add_option("--m", egf.m_text, "parameter m")->required();
  egf_cmd->add_option("--a", egf.a_text, "parameter a");
  egf_cmd->add_option("--x", egf.x_text, "evaluation point")->required();
  egf_cmd->add_option("--order", egf.order, "number of values (default 12)");

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand(
      "series", "certified enclosure of the infinite-series formula");
  series_cmd->add_option("--m", series.m_text, "parameter m (> 0)")
      ->required();
  series_cmd->add_option("--a", series.a_text, "parameter a");
  series_cmd->add_option("--n", series.n, "index n")->required();
  series_cmd->add_option("--x", series.x_text, "evaluation point")->required();
  series_cmd->add_option("--eps", series.eps, "target enclosure width");
  series_cmd->add_option("--max-terms", series.max_terms, "term budget");

  bool list_tags = false;
  verify_cmd->add_flag("--list", list_tags, "list identity ids and exit");
  verify_cmd->get_option("ids")->required(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table_cmd->parsed()) {
      table.has_m = table_cmd->count("--m") > 0;
      table.has_a = table_cmd->count("--a") > 0;
      return run_table(table);
    }
    if (eval_cmd->parsed()) {
      eval.has_m = eval_cmd->count("--m") > 0;
      eval.has_a = eval_cmd->count("--a") > 0;
      eval.has_r = eval_cmd->count("--r") > 0;
      return run_eval(eval);
    }
    if (verify_cmd->parsed()) {
      if (list_tags) {
        for (const auto& info : ident::identity_catalog())
          std::cout << info.id << "  " << info.statement << '\n';
        return 0;
      }
      if (verify.ids.empty())
        throw UsageError("verify needs identity ids (or 'all')");
      return run_verify(verify);
    }
    if (egf_cmd->parsed()) return run_egf(egf);
    if (series_cmd->parsed()) return run_series(series);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const dowling::UnconvergedError& e) {
    std::cerr << "error: " << e.what() << '\n'
              << "partial sum in [" << dowling::to_string(e.partial().lo)
              << ", " << dowling::to_string(e.partial().hi) << "] after "
              << e.partial().terms_used << " terms"
              << (e.certified() ? "" : " (tail not yet certified)") << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
