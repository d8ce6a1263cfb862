#include "ineq/ranking.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "ineq/csv.hpp"

namespace ineq {

std::string to_string(Indicator indicator) {
  switch (indicator) {
    case Indicator::Gini:
      return "gini";
    case Indicator::IndexI:
      return "index";
    case Indicator::RatioTB:
      return "ratio";
    case Indicator::Alt:
      break;
  }
  return "alt";
}

Indicator parse_indicator(std::string_view text) {
  std::string s(csv::trim(text));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "gini") return Indicator::Gini;
  if (s == "index" || s == "i" || s == "index_i") return Indicator::IndexI;
  if (s == "ratio" || s == "t_over_b" || s == "ratio_tb") return Indicator::RatioTB;
  if (s == "alt" || s == "alt_index") return Indicator::Alt;
  throw DomainError("unknown indicator '" + std::string(text) + "'");
}

double indicator_value(const CountryYearRecord& record, Indicator indicator, Weight<double> weight) {
  switch (indicator) {
    case Indicator::Gini:
      return record.gini();
    case Indicator::IndexI:
      return composite(record.gini(), ratio_of(record), weight).index_i;
    case Indicator::RatioTB:
      return record.t_over_b();
    case Indicator::Alt:
      break;
  }
  return alternative_index(record.gini(), record.t_over_b());
}

double round3(double value) {
  if (!std::isfinite(value)) return value;
  return std::round(value * 1000.0) / 1000.0;
}

RankTable rank(const Panel& panel, Indicator indicator, Weight<double> weight) {
  if (panel.empty()) throw EmptyInputError("cannot rank an empty panel");
  const auto& first = panel.records().front();
  std::set<std::string> countries;
  RankTable table{indicator, {}};
  for (const auto& r : panel) {
    if (r.year() != first.year() || r.source() != first.source())
      throw DomainError("ranking needs a single-year, single-source panel");
    if (!countries.insert(r.country()).second) throw DomainError("country listed twice: " + r.country());
    table.entries.push_back({0, r.country(), round3(indicator_value(r, indicator, weight))});
  }
  std::sort(table.entries.begin(), table.entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.country < b.country;
  });
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const bool tied = i > 0 && table.entries[i].value == table.entries[i - 1].value;
    table.entries[i].rank = tied ? table.entries[i - 1].rank : static_cast<int>(i) + 1;
  }
  return table;
}

RankComparison compare_rankings(const RankTable& a, const RankTable& b) {
  std::map<std::string, int> ranks_b;
  for (const auto& e : b.entries) ranks_b[e.country] = e.rank;

  std::vector<std::string> only_a, only_b;
  std::set<std::string> in_a;
  for (const auto& e : a.entries) {
    in_a.insert(e.country);
    if (!ranks_b.count(e.country)) only_a.push_back(e.country);
  }
  for (const auto& e : b.entries)
    if (!in_a.count(e.country)) only_b.push_back(e.country);
  if (!only_a.empty() || !only_b.empty()) {
    std::string msg = "ranking tables cover different countries;";
    for (const auto& c : only_a) msg += " only in first: " + c + ";";
    for (const auto& c : only_b) msg += " only in second: " + c + ";";
    throw JoinError(msg);
  }

  RankComparison cmp;
  for (const auto& e : a.entries) {
    const int rb = ranks_b.at(e.country);
    cmp.per_country[e.country] = {e.rank, rb};
    (e.rank == rb ? cmp.unchanged : cmp.changed) += 1;
  }
  return cmp;
}

std::vector<SeriesPoint> series(const Panel& panel, const std::string& country, Weight<double> weight) {
  std::vector<SeriesPoint> points;
  for (const auto& r : panel) {
    if (r.country() != country) continue;
    const auto result = composite(r.gini(), ratio_of(r), weight);
    points.push_back({r.year(), r.gini(), r.t_over_b(), result.index_i});
  }
  if (points.empty()) throw NotFoundError("country '" + country + "' not in panel");
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.year < b.year; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].year == points[i - 1].year)
      throw DomainError("year " + std::to_string(points[i].year) + " appears twice for " + country);
  return points;
}

std::vector<CalibrationRow> calibrate_panel(const Panel& panel) {
  struct Sums {
    std::size_t n = 0;
    double gini = 0;
    double ratio = 0;
  };
  std::map<std::pair<Source, int>, Sums> groups;
  for (const auto& r : panel) {
    auto& g = groups[{r.source(), r.year()}];
    ++g.n;
    g.gini += r.gini();
    g.ratio += r.b_over_t();
  }
  std::vector<CalibrationRow> rows;
  for (const auto& [key, g] : groups) {
    const double avg_gini = g.gini / static_cast<double>(g.n);
    const double avg_ratio = g.ratio / static_cast<double>(g.n);
    rows.push_back({key.second, key.first, g.n, avg_gini, avg_ratio, calibrate_alpha(avg_gini, avg_ratio)});
  }
  return rows;
}

void write_rank_table(std::ostream& os, const RankTable& table) {
  os << "rank,country," << to_string(table.indicator) << '\n';
  for (const auto& e : table.entries)
    os << e.rank << ',' << csv::quote(e.country) << ',' << csv::fixed(e.value, 3) << '\n';
}

void write_comparison(std::ostream& os, const RankComparison& cmp) {
  os << "country,rank_a,rank_b,changed\n";
  for (const auto& [country, ranks] : cmp.per_country)
    os << csv::quote(country) << ',' << ranks.first << ',' << ranks.second << ','
       << (ranks.first != ranks.second ? 1 : 0) << '\n';
}

void write_series(std::ostream& os, const std::vector<SeriesPoint>& points) {
  os << "year,gini,t_over_b,index_i\n";
  for (const auto& p : points)
    os << p.year << ',' << csv::fixed(p.gini, 6) << ',' << csv::fixed(p.t_over_b, 6) << ','
       << csv::fixed(p.index_i, 6) << '\n';
}

}  // namespace ineq
