#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "garside/closed_forms.hpp"
#include "garside/incidence.hpp"

namespace garside {

enum class Format { Plain, Csv, Json };

/// "plain", "csv" or "json"; throws std::invalid_argument.
Format parse_format(std::string_view text);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

/// JSON: {"n", "kind", "labels", "rows"} with entries as decimal strings.
/// CSV: a header row of labels, then one labelled row per matrix row.
/// Plain: right-aligned columns.
std::string render(const CountMatrix& m, Format format);

/// One line (or record) per point; informational points are marked
/// "paper-discrepancy".
std::string render(const std::vector<FormulaReport>& reports, Format format);

}  // namespace garside
