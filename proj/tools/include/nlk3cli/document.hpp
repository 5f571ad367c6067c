#pragma once

// Output documents for the command-line tool. Every command builds one
// Document; rendering is deterministic in all three formats (fixed
// ordering, sorted JSON keys, no timestamps or locale dependence).

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace nlk3cli {

enum class Format { table, json, csv };

// Parse "table" / "json" / "csv"; empty optional on anything else.
bool parse_format(const std::string& text, Format& out);
const char* to_string(Format format);

struct CheckRow {
  std::string g;  // genus as text; "-" for checks not tied to one genus
  std::string name;
  bool pass;
  std::string value;     // comma-free
  std::string expected;  // comma-free
  std::string detail;    // free text; omitted from CSV
};

// A command's result: one rectangular row table (rendered under rows_key
// in JSON and as the CSV body), optional scalars, optional check list,
// optional JSON-only structured payload.
//
// CSV is the comma-free projection: row columns listed in csv_omit (label
// and name columns, which contain commas) appear only in JSON and table
// output, and check rows drop their free-text detail. When a command has
// no row table, CSV falls back to the check table, then to a single
// scalar row.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;

  std::string rows_key = "rows";
  std::vector<std::string> columns;
  std::vector<std::string> csv_omit;
  std::vector<std::vector<std::string>> rows;

  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<CheckRow> checks;
  std::string overall;  // "", "PASS" or "FAIL"

  std::vector<std::string> provenance;
  nlohmann::json extra;  // merged into "results" in JSON output only
};

std::string render(const Document& doc, Format format);

}  // namespace nlk3cli
