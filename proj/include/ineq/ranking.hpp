#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ineq/composite_index.hpp"
#include "ineq/panel.hpp"

namespace ineq {

enum class Indicator { Gini, IndexI, RatioTB, Alt };

std::string to_string(Indicator indicator);
/// Accepts gini, index (or i, index_i), ratio (or t_over_b), alt.
Indicator parse_indicator(std::string_view text);

/// Value of an indicator for one record; lower means more equal.
double indicator_value(const CountryYearRecord& record, Indicator indicator, Weight<double> weight);

/// Rounds half away from zero to three decimals; infinities pass through.
double round3(double value);

struct RankEntry {
  int rank;
  std::string country;
  double value;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Entries in ascending value order (ties listed by country id) with
/// competition ranks: rank = 1 + number of strictly smaller values.
struct RankTable {
  Indicator indicator;
  std::vector<RankEntry> entries;

  friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Ranks a single-year, single-source panel on values rounded to three
/// decimals. Throws EmptyInputError on an empty panel and DomainError when
/// the panel mixes years or sources.
RankTable rank(const Panel& panel, Indicator indicator, Weight<double> weight = Weight<double>::quarter());

struct RankComparison {
  int changed = 0;
  int unchanged = 0;
  std::map<std::string, std::pair<int, int>> per_country;
};

/// Throws JoinError naming the symmetric difference when the tables cover
/// different countries.
RankComparison compare_rankings(const RankTable& a, const RankTable& b);

struct SeriesPoint {
  int year;
  double gini;
  double t_over_b;
  double index_i;
};

/// Year-ascending trajectory of one country. Throws NotFoundError when the
/// country is absent and DomainError when a year appears twice (mixed
/// sources; slice first).
std::vector<SeriesPoint> series(const Panel& panel, const std::string& country,
                                Weight<double> weight = Weight<double>::quarter());

struct CalibrationRow {
  int year;
  Source source;
  std::size_t countries;
  double avg_gini;
  double avg_b_over_t;
  Weight<double> alpha;
};

/// Calibrates alpha on the column averages of every (source, year) group,
/// ordered by source then year.
std::vector<CalibrationRow> calibrate_panel(const Panel& panel);

void write_rank_table(std::ostream& os, const RankTable& table);
void write_comparison(std::ostream& os, const RankComparison& cmp);
void write_series(std::ostream& os, const std::vector<SeriesPoint>& points);

}  // namespace ineq
