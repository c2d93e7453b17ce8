#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tabgen {

// lowercase (ASCII), trim outer whitespace, collapse inner runs to one space
std::string normalize_text(const std::string& s);

std::string trim(const std::string& s);

// Numeric parse used for entity matching, SQL value comparison and
// denotation scoring. Accepts optional sign, thousands commas between
// digit groups, decimal point, exponent. Rejects anything with leftover
// characters.
std::optional<double> parse_number(const std::string& s);

struct IsoDate {
  int year, month, day;
  bool operator==(const IsoDate&) const = default;
};

// Strict YYYY-MM-DD.
std::optional<IsoDate> parse_iso_date(const std::string& s);

// "6", "6.5", "-2"; integral doubles print without a decimal point.
std::string format_number(double v);

std::vector<std::string> split_ws(const std::string& s);

}  // namespace tabgen
