#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ineq::csv {

/// Splits one CSV record. Double-quoted fields may contain commas and
/// doubled quotes; embedded newlines are not supported.
std::vector<std::string> split_record(std::string_view line);

/// Quotes a field when it contains a comma, quote, or leading/trailing space.
std::string quote(std::string_view field);

std::string join(const std::vector<std::string>& fields);

/// Fixed-point rendering; infinities print as "inf".
std::string fixed(double value, int decimals);

/// Shortest text that parses back to exactly `value`.
std::string exact(double value);

/// Strict decimal parse of a whole field (surrounding blanks allowed).
/// Accepts "inf"/"infinity" case-insensitively. Returns false on failure.
bool parse_number(std::string_view text, double& out);

std::vector<std::string_view> lines(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace ineq::csv
