#pragma once

#include "schottky/certify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace schottky {

enum class OutputFormat { JSON, CSV, PlainTable };

// "json", "csv" or "table"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

// One output row. Values are numbers, strings, booleans, null, flat arrays
// or (for JSON only) nested objects.
using Record = nlohmann::ordered_json;

// %.17g for JSON and CSV, %.12g for tables.
std::string format_number(double x, int digits);

// JSON: array of records. CSV: header from the first record's keys, arrays
// joined with ';'. Table: aligned columns. Nested objects are flattened as
// parent.child in CSV and table output.
std::string render(const std::vector<Record>& rows, OutputFormat format);

Record to_record(const RegionReport& r);
Record to_record(const CertReport& r);
// Flat CSV/table summary row of a report.
Record to_summary(const CertReport& r);

std::string reports_json(const std::vector<CertReport>& reports);
std::string reports_csv(const std::vector<CertReport>& reports);

} // namespace schottky
