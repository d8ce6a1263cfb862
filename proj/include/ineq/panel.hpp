#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineq/composite_index.hpp"

namespace ineq {

enum class Source { WB, OECD, OTHER };

std::string to_string(Source source);
/// Case-insensitive; throws DomainError on an unknown name.
Source parse_source(std::string_view text);

/// One published country-year observation, stored in decimal units.
///
/// A record carries either the two decile shares or, for tables that only
/// publish the T10/B10 ratio, that ratio alone. Use the factory functions;
/// they enforce the record invariants and throw DomainError with a short
/// reason when one is violated.
class CountryYearRecord {
 public:
  static CountryYearRecord from_shares(std::string country, int year, Source source, double gini,
                                       double top10, double bottom10);
  static CountryYearRecord from_ratio(std::string country, int year, Source source, double gini,
                                      double t_over_b);

  const std::string& country() const { return country_; }
  int year() const { return year_; }
  Source source() const { return source_; }
  double gini() const { return gini_; }
  std::optional<double> top10() const { return top10_; }
  std::optional<double> bottom10() const { return bottom10_; }
  bool has_shares() const { return top10_.has_value(); }

  double b_over_t() const;
  double t_over_b() const;

  friend bool operator==(const CountryYearRecord&, const CountryYearRecord&) = default;

 private:
  CountryYearRecord() = default;

  std::string country_;
  int year_ = 0;
  Source source_ = Source::OTHER;
  double gini_ = 0;
  std::optional<double> top10_;
  std::optional<double> bottom10_;
  std::optional<double> t_over_b_;
};

/// B10/T10 of a record; zero when the bottom share is zero.
ShareRatio<double> ratio_of(const CountryYearRecord& record);

/// Immutable collection of records, unique by (country, year, source).
class Panel {
 public:
  Panel() = default;
  /// Throws DomainError on a duplicate (country, year, source).
  explicit Panel(std::vector<CountryYearRecord> records, std::string label = {});

  const std::vector<CountryYearRecord>& records() const { return records_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  friend bool operator==(const Panel&, const Panel&) = default;

 private:
  std::vector<CountryYearRecord> records_;
  std::string label_;
};

enum class Unit { Decimal, Percent };

Unit parse_unit(std::string_view text);

/// Column-name driven description of an input CSV.
///
/// The share columns take precedence: a row with both top10 and bottom10
/// filled becomes a share record; otherwise a filled t_over_b column makes
/// it a ratio record. The source column is optional; rows fall back to
/// `default_source` when the header lacks it.
struct SchemaConfig {
  std::string country = "country";
  std::string year = "year";
  std::string source = "source";
  std::string gini = "gini";
  std::string top10 = "top10";
  std::string bottom10 = "bottom10";
  std::string t_over_b = "t_over_b";
  Unit gini_unit = Unit::Decimal;
  Unit share_unit = Unit::Decimal;
  Source default_source = Source::OTHER;

  /// Applies "key=column,key=column" overrides; keys are the field names
  /// above (country, year, source, gini, top10, bottom10, t_over_b).
  void apply_overrides(std::string_view overrides);
};

struct RowDiagnostic {
  std::size_t line;  // 1-based line number in the input text
  std::string reason;
};

struct ParseResult {
  Panel panel;
  std::vector<RowDiagnostic> diagnostics;
};

/// Parses a header-first CSV. Rows that fail validation are dropped and
/// reported; a missing declared column throws SchemaError.
ParseResult parse_panel(std::string_view csv_text, const SchemaConfig& schema,
                        std::string label = {});

/// Canonical CSV: country,year,source,gini,top10,bottom10,t_over_b in
/// decimal units. Numbers are written with round-trip precision; unused
/// columns are left empty.
std::string serialize_panel(const Panel& panel);

/// Records matching the filters, ordered by country, then year, then source.
Panel slice(const Panel& panel, std::optional<int> year, std::optional<Source> source);

}  // namespace ineq
