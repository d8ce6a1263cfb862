#include "ineq/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "ineq/csv.hpp"

namespace ineq {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool finite_in(double v, double lo, double hi, bool lo_open, bool hi_open) {
  if (!std::isfinite(v)) return false;
  if (lo_open ? v <= lo : v < lo) return false;
  if (hi_open ? v >= hi : v > hi) return false;
  return true;
}

void check_common(const std::string& country, double gini) {
  if (country.empty()) throw DomainError("empty country identifier");
  if (!finite_in(gini, 0.0, 1.0, true, true)) throw DomainError("gini outside (0, 1)");
}

double scale(double value, Unit unit) { return unit == Unit::Percent ? value / 100.0 : value; }

}  // namespace

std::string to_string(Source source) {
  switch (source) {
    case Source::WB:
      return "WB";
    case Source::OECD:
      return "OECD";
    case Source::OTHER:
      break;
  }
  return "OTHER";
}

Source parse_source(std::string_view text) {
  const std::string s = lowercase(csv::trim(text));
  if (s == "wb" || s == "worldbank" || s == "world bank") return Source::WB;
  if (s == "oecd") return Source::OECD;
  if (s == "other") return Source::OTHER;
  throw DomainError("unknown source '" + std::string(text) + "'");
}

Unit parse_unit(std::string_view text) {
  const std::string s = lowercase(csv::trim(text));
  if (s == "decimal") return Unit::Decimal;
  if (s == "percent") return Unit::Percent;
  throw DomainError("unknown unit '" + std::string(text) + "' (expected decimal or percent)");
}

CountryYearRecord CountryYearRecord::from_shares(std::string country, int year, Source source,
                                                 double gini, double top10, double bottom10) {
  check_common(country, gini);
  if (!finite_in(top10, 0.0, 1.0, true, false)) throw DomainError("top10 share outside (0, 1]");
  if (!finite_in(bottom10, 0.0, 1.0, false, true)) throw DomainError("bottom10 share outside [0, 1)");
  if (bottom10 > top10) throw DomainError("share ordering violated");
  CountryYearRecord r;
  r.country_ = std::move(country);
  r.year_ = year;
  r.source_ = source;
  r.gini_ = gini;
  r.top10_ = top10;
  r.bottom10_ = bottom10;
  return r;
}

CountryYearRecord CountryYearRecord::from_ratio(std::string country, int year, Source source,
                                                double gini, double t_over_b) {
  check_common(country, gini);
  if (std::isnan(t_over_b) || t_over_b < 1.0) throw DomainError("T/B ratio below 1");
  CountryYearRecord r;
  r.country_ = std::move(country);
  r.year_ = year;
  r.source_ = source;
  r.gini_ = gini;
  r.t_over_b_ = t_over_b;
  return r;
}

double CountryYearRecord::b_over_t() const {
  if (t_over_b_) return std::isinf(*t_over_b_) ? 0.0 : 1.0 / *t_over_b_;
  if (*bottom10_ == 0.0) return 0.0;
  return *bottom10_ / *top10_;
}

double CountryYearRecord::t_over_b() const {
  if (t_over_b_) return *t_over_b_;
  if (*bottom10_ == 0.0) return INFINITY;
  return *top10_ / *bottom10_;
}

ShareRatio<double> ratio_of(const CountryYearRecord& record) {
  return ShareRatio<double>::from_b_over_t(record.b_over_t());
}

Panel::Panel(std::vector<CountryYearRecord> records, std::string label)
    : records_(std::move(records)), label_(std::move(label)) {
  std::set<std::tuple<std::string, int, Source>> seen;
  for (const auto& r : records_) {
    if (!seen.emplace(r.country(), r.year(), r.source()).second)
      throw DomainError("duplicate record for " + r.country() + " " + std::to_string(r.year()) +
                        " " + to_string(r.source()));
  }
}

void SchemaConfig::apply_overrides(std::string_view overrides) {
  const std::map<std::string, std::string*> fields = {
      {"country", &country}, {"year", &year},         {"source", &source},
      {"gini", &gini},       {"top10", &top10},       {"bottom10", &bottom10},
      {"t_over_b", &t_over_b},
  };
  for (const auto& item : csv::split_record(overrides)) {
    const std::string_view entry = csv::trim(item);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) throw SchemaError("schema entry '" + std::string(entry) + "' lacks '='");
    const std::string key = lowercase(csv::trim(entry.substr(0, eq)));
    const auto it = fields.find(key);
    if (it == fields.end()) throw SchemaError("unknown schema key '" + key + "'");
    *it->second = std::string(csv::trim(entry.substr(eq + 1)));
  }
}

ParseResult parse_panel(std::string_view csv_text, const SchemaConfig& schema, std::string label) {
  const auto all_lines = csv::lines(csv_text);
  std::size_t header_at = 0;
  while (header_at < all_lines.size() && csv::trim(all_lines[header_at]).empty()) ++header_at;
  if (header_at == all_lines.size()) throw SchemaError("input has no header row");

  const auto header = csv::split_record(all_lines[header_at]);
  const auto find = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (csv::trim(header[i]) == name) return i;
    return std::nullopt;
  };

  const auto country_col = find(schema.country);
  const auto year_col = find(schema.year);
  const auto gini_col = find(schema.gini);
  const auto top_col = find(schema.top10);
  const auto bottom_col = find(schema.bottom10);
  const auto ratio_col = find(schema.t_over_b);
  const auto source_col = find(schema.source);

  std::vector<std::string> missing;
  if (!country_col) missing.push_back(schema.country);
  if (!year_col) missing.push_back(schema.year);
  if (!gini_col) missing.push_back(schema.gini);
  const bool has_shares = top_col && bottom_col;
  if (!has_shares && !ratio_col) {
    if (!top_col) missing.push_back(schema.top10);
    if (!bottom_col) missing.push_back(schema.bottom10);
    missing.push_back(schema.t_over_b + " (or both share columns)");
  }
  if (!missing.empty()) {
    std::string msg = "missing column(s):";
    for (const auto& m : missing) msg += " '" + m + "'";
    throw SchemaError(msg);
  }

  ParseResult result;
  std::vector<CountryYearRecord> records;
  std::set<std::tuple<std::string, int, Source>> seen;

  for (std::size_t li = header_at + 1; li < all_lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (csv::trim(all_lines[li]).empty()) continue;
    const auto fields = csv::split_record(all_lines[li]);
    const auto report = [&](std::string reason) {
      result.diagnostics.push_back({line_no, std::move(reason)});
    };
    if (fields.size() != header.size()) {
      report("expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
      continue;
    }
    const auto field = [&](std::size_t col) { return csv::trim(fields[col]); };
    const auto number = [&](std::size_t col, const std::string& name, double& out) {
      if (csv::parse_number(field(col), out)) return true;
      report("unparseable " + name + " '" + std::string(field(col)) + "'");
      return false;
    };

    const std::string country(field(*country_col));
    int year = 0;
    {
      const auto y = field(*year_col);
      const auto res = std::from_chars(y.data(), y.data() + y.size(), year);
      if (y.empty() || res.ec != std::errc() || res.ptr != y.data() + y.size()) {
        report("unparseable year '" + std::string(y) + "'");
        continue;
      }
    }
    double gini = 0;
    if (!number(*gini_col, "gini", gini)) continue;
    gini = scale(gini, schema.gini_unit);

    Source source = schema.default_source;
    if (source_col) {
      try {
        source = parse_source(field(*source_col));
      } catch (const DomainError& e) {
        report(e.what());
        continue;
      }
    }

    try {
      std::optional<CountryYearRecord> record;
      if (has_shares && !field(*top_col).empty() && !field(*bottom_col).empty()) {
        double top = 0, bottom = 0;
        if (!number(*top_col, "top10", top) || !number(*bottom_col, "bottom10", bottom)) continue;
        record = CountryYearRecord::from_shares(country, year, source, gini, scale(top, schema.share_unit),
                                                scale(bottom, schema.share_unit));
      } else if (ratio_col && !field(*ratio_col).empty()) {
        double ratio = 0;
        if (!number(*ratio_col, "t_over_b", ratio)) continue;
        record = CountryYearRecord::from_ratio(country, year, source, gini, ratio);
      } else {
        report("missing share values");
        continue;
      }
      if (!seen.emplace(record->country(), record->year(), record->source()).second) {
        report("duplicate record for " + country + " " + std::to_string(year) + " " + to_string(source));
        continue;
      }
      records.push_back(std::move(*record));
    } catch (const DomainError& e) {
      report(e.what());
    }
  }

  result.panel = Panel(std::move(records), std::move(label));
  return result;
}

std::string serialize_panel(const Panel& panel) {
  std::string out = "country,year,source,gini,top10,bottom10,t_over_b\n";
  for (const auto& r : panel) {
    std::vector<std::string> row = {csv::quote(r.country()), std::to_string(r.year()), to_string(r.source()),
                                    csv::exact(r.gini())};
    if (r.has_shares()) {
      row.push_back(csv::exact(*r.top10()));
      row.push_back(csv::exact(*r.bottom10()));
      row.emplace_back();
    } else {
      row.emplace_back();
      row.emplace_back();
      row.push_back(csv::exact(r.t_over_b()));
    }
    out += csv::join(row);
    out.push_back('\n');
  }
  return out;
}

Panel slice(const Panel& panel, std::optional<int> year, std::optional<Source> source) {
  std::vector<CountryYearRecord> kept;
  for (const auto& r : panel) {
    if (year && r.year() != *year) continue;
    if (source && r.source() != *source) continue;
    kept.push_back(r);
  }
  const auto key = [](const CountryYearRecord& r) {
    return std::tuple<const std::string&, int, Source>(r.country(), r.year(), r.source());
  };
  std::stable_sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return Panel(std::move(kept), panel.label());
}

}  // namespace ineq
