#include "ineq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ineq/composite_index.hpp"
#include "ineq/csv.hpp"
#include "ineq/micro_measures.hpp"
#include "ineq/panel.hpp"
#include "ineq/ranking.hpp"
#include "ineq/welfare_indices.hpp"

namespace ineq::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string input;
  std::string expected;
  std::string schema;
  std::string gini_unit = "decimal";
  std::string share_unit = "decimal";
  double weight = 0.25;
  std::optional<int> year;
  std::optional<std::string> source;
  std::string indicator;
  std::string against = "index";
  std::string country;
  bool strict = false;
  std::string output;
  double epsilon = 1.0;
  double ge_alpha = 2.0;
  double tolerance = 0.001;
  std::optional<int> expect_changed;
  std::optional<int> expect_unchanged;
  int rank_slack = 2;
};

/// Failure that maps to the input-error exit code.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_panel_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.inputs, "Panel CSV file; repeat to merge several panels")->required();
  cmd->add_option("--schema", o.schema, "Column overrides, e.g. gini=SI.POV.GINI,top10=T10");
  cmd->add_option("--gini-unit", o.gini_unit, "decimal or percent");
  cmd->add_option("--share-unit", o.share_unit, "decimal or percent");
  cmd->add_option("--year", o.year, "Keep only this year");
  cmd->add_option("--source", o.source, "WB, OECD or OTHER; also the source of rows without a source column");
  cmd->add_flag("--strict", o.strict, "Treat any row diagnostic as an input error");
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--weight", o.weight, "Weight alpha of the H term")->capture_default_str();
  cmd->add_option("--output", o.output, "Write the report here instead of standard output");
}

// Loads, filters and sorts the panel named by --input. Diagnostics are
// printed; with --strict they abort the run.
Panel load_panel(const Options& o, std::ostream& err) {
  SchemaConfig schema;
  schema.apply_overrides(o.schema);
  schema.gini_unit = parse_unit(o.gini_unit);
  schema.share_unit = parse_unit(o.share_unit);
  std::optional<Source> source;
  if (o.source) {
    source = parse_source(*o.source);
    schema.default_source = *source;
  }
  std::vector<CountryYearRecord> records;
  std::size_t invalid = 0;
  for (const auto& path : o.inputs) {
    const auto parsed = parse_panel(read_file(path), schema, path);
    for (const auto& d : parsed.diagnostics) err << path << ":" << d.line << ": " << d.reason << '\n';
    invalid += parsed.diagnostics.size();
    records.insert(records.end(), parsed.panel.begin(), parsed.panel.end());
  }
  if (o.strict && invalid > 0) throw InputError(std::to_string(invalid) + " invalid row(s) under --strict");
  return slice(Panel(std::move(records), o.inputs.front()), o.year, source);
}

int run_compute(const Options& o, std::ostream& out, std::ostream& err) {
  const Weight<double> weight(o.weight);
  const Panel panel = load_panel(o, err);
  out << "country,year,source,gini,t_over_b,h,index_i,alt_index\n";
  for (const auto& r : panel) {
    const auto res = composite(r.gini(), ratio_of(r), weight);
    out << csv::join({csv::quote(r.country()), std::to_string(r.year()), to_string(r.source()),
                      csv::fixed(r.gini(), 6), csv::fixed(r.t_over_b(), 6), csv::fixed(res.h, 6),
                      csv::fixed(res.index_i, 6), csv::fixed(res.alt_index, 6)})
        << '\n';
  }
  return kOk;
}

IncomeSample<double> load_micro(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<double> values;
  const auto lines = csv::lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (csv::trim(lines[i]).empty()) continue;
    double v = 0;
    if (!csv::parse_number(lines[i], v) || !std::isfinite(v))
      throw InputError(path + ":" + std::to_string(i + 1) + ": not a number: '" + std::string(lines[i]) + "'");
    values.push_back(v);
  }
  if (values.empty()) throw InputError(path + ": no values");
  return IncomeSample<double>(values);
}

int run_micro(const Options& o, std::ostream& out) {
  const Weight<double> weight(o.weight);
  const AversionParam<double> aversion(o.epsilon);
  const EntropyOrder<double> order(o.ge_alpha);
  const auto sample = load_micro(o.input);

  std::vector<std::pair<std::string, std::string>> rows;
  const auto put = [&](std::string name, double v) { rows.emplace_back(std::move(name), csv::fixed(v, 6)); };
  const auto try_put = [&](std::string name, const std::function<double()>& f) {
    try {
      put(std::move(name), f());
    } catch (const Error&) {
      rows.emplace_back(std::move(name), "undefined");
    }
  };

  const double g = gini(sample);
  rows.emplace_back("n", std::to_string(sample.size()));
  put("mean", sample.mean());
  put("gini", g);
  try_put("palma", [&] { return palma_ratio(sample); });
  put("epsilon", aversion.value());
  put("atkinson", atkinson(sample, aversion));
  put("ge_alpha", order.value());
  try_put("ge", [&] { return ge_index(sample, order); });
  put("theil", theil(sample));
  try_put("mld", [&] { return ge_zero(sample); });

  const std::array<double, 5> percents = {10, 20, 30, 40, 50};
  for (double x : percents) {
    const std::string tag = std::to_string(static_cast<int>(x));
    const double b = bottom_share(sample, x);
    const double t = top_share(sample, x);
    const auto ratio = ShareRatio<double>::from_b_over_t(ratio_b_over_t(sample, x));
    put("bottom" + tag, b);
    put("top" + tag, t);
    put("b_over_t_" + tag, ratio.value());
    put("t_over_b_" + tag, ratio.t_over_b());
  }

  const auto b10 = ShareRatio<double>::from_b_over_t(ratio_b_over_t(sample, 10.0));
  const auto res = composite(g, b10, weight);
  put("weight", weight.value());
  put("h", res.h);
  put("index_i", res.index_i);
  put("alt_index", res.alt_index);
  const auto ratios = percentile_ratios(sample, std::span<const double>(percents));
  const std::vector<Weight<double>> weights(ratios.size(), weight);
  put("generalized_index",
      generalized_composite(g, std::span<const PercentileRatio<double>>(ratios), std::span<const Weight<double>>(weights)));

  out << "measure,value\n";
  for (const auto& [name, value] : rows) out << name << ',' << value << '\n';
  return kOk;
}

int run_calibrate(const Options& o, std::ostream& out, std::ostream& err) {
  const Panel panel = load_panel(o, err);
  if (panel.empty()) throw EmptyInputError("no records to calibrate on");
  const auto rows = calibrate_panel(panel);
  std::vector<Weight<double>> alphas;
  out << "source,year,countries,avg_gini,avg_b_over_t,alpha\n";
  for (const auto& r : rows) {
    alphas.push_back(r.alpha);
    out << to_string(r.source) << ',' << r.year << ',' << r.countries << ',' << csv::fixed(r.avg_gini, 6) << ','
        << csv::fixed(r.avg_b_over_t, 6) << ',' << csv::fixed(r.alpha.value(), 6) << '\n';
  }
  out << "ALL,," << rows.size() << ",,," << csv::fixed(mean_alpha(alphas).value(), 6) << '\n';
  return kOk;
}

int run_rank(const Options& o, std::ostream& out, std::ostream& err) {
  const Weight<double> weight(o.weight);
  const Indicator indicator = parse_indicator(o.indicator.empty() ? "index" : o.indicator);
  write_rank_table(out, rank(load_panel(o, err), indicator, weight));
  return kOk;
}

int run_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Weight<double> weight(o.weight);
  const Panel panel = load_panel(o, err);
  const auto a = rank(panel, parse_indicator(o.indicator.empty() ? "gini" : o.indicator), weight);
  const auto b = rank(panel, parse_indicator(o.against), weight);
  const auto cmp = compare_rankings(a, b);
  write_comparison(out, cmp);
  out << "# changed=" << cmp.changed << " unchanged=" << cmp.unchanged << '\n';
  return kOk;
}

int run_series(const Options& o, std::ostream& out, std::ostream& err) {
  const Weight<double> weight(o.weight);
  write_series(out, series(load_panel(o, err), o.country, weight));
  return kOk;
}

struct ExpectedRow {
  double h;
  double index_i;
};

std::map<std::string, ExpectedRow> load_expected(const std::string& path) {
  const std::string text = read_file(path);
  const auto lines = csv::lines(text);
  if (lines.empty()) throw SchemaError(path + ": empty file");
  const auto header = csv::split_record(lines[0]);
  const auto col = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (csv::trim(header[i]) == name) return i;
    throw SchemaError(path + ": missing column '" + name + "'");
  };
  const std::size_t c_country = col("country"), c_h = col("h"), c_i = col("index_i");
  std::map<std::string, ExpectedRow> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (csv::trim(lines[li]).empty()) continue;
    const auto f = csv::split_record(lines[li]);
    ExpectedRow row{};
    if (f.size() != header.size() || !csv::parse_number(f[c_h], row.h) || !csv::parse_number(f[c_i], row.index_i))
      throw InputError(path + ":" + std::to_string(li + 1) + ": malformed expected row");
    if (!rows.emplace(std::string(csv::trim(f[c_country])), row).second)
      throw InputError(path + ":" + std::to_string(li + 1) + ": duplicate country");
  }
  return rows;
}

int run_replicate(const Options& o, std::ostream& out, std::ostream& err) {
  const Weight<double> weight(o.weight);
  const Panel panel = load_panel(o, err);
  const auto expected = load_expected(o.expected);

  std::set<std::string> in_panel;
  for (const auto& r : panel) in_panel.insert(r.country());
  std::string mismatch;
  for (const auto& c : in_panel)
    if (!expected.count(c)) mismatch += " '" + c + "' (missing from expected)";
  for (const auto& [c, row] : expected)
    if (!in_panel.count(c)) mismatch += " '" + c + "' (missing from input)";
  if (!mismatch.empty()) throw JoinError("country sets differ:" + mismatch);

  out << "country,gini,t_over_b,h,h_expected,index_i,index_i_expected,abs_dh,abs_di,within\n";
  double max_dh = 0, max_di = 0;
  bool ok = true;
  for (const auto& r : panel) {
    const auto res = composite(r.gini(), ratio_of(r), weight);
    const auto& e = expected.at(r.country());
    const double dh = std::abs(res.h - e.h);
    const double di = std::abs(res.index_i - e.index_i);
    const bool within = dh <= o.tolerance && di <= o.tolerance;
    max_dh = std::max(max_dh, dh);
    max_di = std::max(max_di, di);
    if (!within) {
      ok = false;
      err << "tolerance exceeded for " << r.country() << ": |dH|=" << csv::fixed(dh, 6)
          << " |dI|=" << csv::fixed(di, 6) << '\n';
    }
    out << csv::join({csv::quote(r.country()), csv::fixed(r.gini(), 3), csv::fixed(r.t_over_b(), 3),
                      csv::fixed(res.h, 3), csv::fixed(e.h, 3), csv::fixed(res.index_i, 3),
                      csv::fixed(e.index_i, 3), csv::fixed(dh, 6), csv::fixed(di, 6), within ? "1" : "0"})
        << '\n';
  }

  const auto cmp = compare_rankings(rank(panel, Indicator::Gini, weight), rank(panel, Indicator::IndexI, weight));
  const auto check_count = [&](const char* name, int got, std::optional<int> want) {
    if (want && std::abs(got - *want) > o.rank_slack) {
      ok = false;
      err << name << " count " << got << " differs from expected " << *want << " by more than " << o.rank_slack
          << '\n';
    }
  };
  check_count("changed", cmp.changed, o.expect_changed);
  check_count("unchanged", cmp.unchanged, o.expect_unchanged);

  out << "# max_abs_dh=" << csv::fixed(max_dh, 6) << " max_abs_di=" << csv::fixed(max_di, 6)
      << " tolerance=" << csv::fixed(o.tolerance, 6) << '\n';
  out << "# changed=" << cmp.changed << " unchanged=" << cmp.unchanged << '\n';
  out << "# result=" << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kToleranceFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Inequality measures and the composite inequality index"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "H, I and the alternative index for every panel record");
  add_panel_options(compute, o);
  add_common_options(compute, o);

  auto* micro = app.add_subcommand("micro", "All measures of a micro-data file (one value per line)");
  micro->add_option("--input", o.input, "Values file")->required();
  micro->add_option("--epsilon", o.epsilon, "Atkinson inequality aversion")->capture_default_str();
  micro->add_option("--ge-alpha", o.ge_alpha, "Generalized-entropy order")->capture_default_str();
  add_common_options(micro, o);

  auto* calibrate = app.add_subcommand("calibrate", "Calibrate alpha per (source, year) and average it");
  add_panel_options(calibrate, o);
  add_common_options(calibrate, o);

  auto* rank_cmd = app.add_subcommand("rank", "Competition ranking under one indicator");
  add_panel_options(rank_cmd, o);
  add_common_options(rank_cmd, o);
  rank_cmd->add_option("--indicator", o.indicator, "gini, index, ratio or alt (default index)");

  auto* compare = app.add_subcommand("compare", "Compare two rankings of the same panel");
  add_panel_options(compare, o);
  add_common_options(compare, o);
  compare->add_option("--indicator", o.indicator, "First indicator (default gini)");
  compare->add_option("--against", o.against, "Second indicator")->capture_default_str();

  auto* series_cmd = app.add_subcommand("series", "Year-by-year trajectory of one country");
  add_panel_options(series_cmd, o);
  add_common_options(series_cmd, o);
  series_cmd->add_option("--country", o.country, "Country identifier as written in the panel")->required();

  auto* replicate = app.add_subcommand("replicate", "Recompute a published table and diff it");
  add_panel_options(replicate, o);
  add_common_options(replicate, o);
  replicate->add_option("--expected", o.expected, "CSV with country,h,index_i columns")->required();
  replicate->add_option("--tolerance", o.tolerance, "Max absolute deviation of H and I")->capture_default_str();
  replicate->add_option("--expect-changed", o.expect_changed, "Expected count of countries whose rank moves");
  replicate->add_option("--expect-unchanged", o.expect_unchanged, "Expected count of countries whose rank holds");
  replicate->add_option("--rank-slack", o.rank_slack, "Allowed deviation of the rank-change counts")
      ->capture_default_str();

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kInputError;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;

  // Nothing reaches the sink unless the subcommand completes.
  std::ostringstream report;
  int code = kOk;
  try {
    if (*compute) code = run_compute(o, report, err);
    else if (*micro) code = run_micro(o, report);
    else if (*calibrate) code = run_calibrate(o, report, err);
    else if (*rank_cmd) code = run_rank(o, report, err);
    else if (*compare) code = run_compare(o, report, err);
    else if (*series_cmd) code = run_series(o, report, err);
    else if (*replicate) code = run_replicate(o, report, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  sink << report.str();
  return code;
}

}  // namespace ineq::cli
