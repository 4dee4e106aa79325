// Tabular output shared by the CLI commands: JSON, CSV and TSV renderings
// of one result table. Exact values travel as decimal strings.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mvoyce {

enum class OutputFormat { json, csv, tsv };

OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

/// A string cell holds exact text (integer or "p/q"); a list cell is an
/// array of such strings.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string, std::vector<std::string>>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

std::string render_delimited(const Table& table, char separator);
nlohmann::json rows_to_json(const Table& table);

/// x rounded to `digits` significant digits, as "d.de-01" style text.
std::string round_significant(double x, int digits);

/// Two-significant-digit display used by the published local-limit table:
/// round to three significant digits, then drop the third.
std::string guarded_two_digit(double x);

}  // namespace mvoyce
