#include "nlk3cli/document.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nlk3cli {

bool parse_format(const std::string& text, Format& out) {
  if (text == "table") out = Format::table;
  else if (text == "json") out = Format::json;
  else if (text == "csv") out = Format::csv;
  else return false;
  return true;
}

const char* to_string(Format format) {
  switch (format) {
    case Format::table: return "table";
    case Format::json: return "json";
    case Format::csv: return "csv";
  }
  return "table";
}

namespace {

bool csv_keeps(const Document& doc, const std::string& column) {
  return std::find(doc.csv_omit.begin(), doc.csv_omit.end(), column) ==
         doc.csv_omit.end();
}

// The no-quoting CSV contract: every emitted field must be free of commas,
// quotes and newlines. Violations are construction bugs, not data.
void require_bare(const std::string& field) {
  assert(field.find_first_of(",\"\n") == std::string::npos);
  (void)field;
}

std::string render_json(const Document& doc) {
  nlohmann::json root;  // std::map-backed: keys serialize sorted
  root["schema_version"] = "1";
  root["command"] = doc.command;

  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [k, v] : doc.inputs) inputs[k] = v;
  root["inputs"] = inputs;

  nlohmann::json results = nlohmann::json::object();
  if (!doc.columns.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : doc.rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < doc.columns.size(); ++i)
        obj[doc.columns[i]] = row[i];
      rows.push_back(obj);
    }
    results[doc.rows_key] = rows;
  }
  for (const auto& [k, v] : doc.scalars) results[k] = v;
  if (!doc.checks.empty()) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRow& c : doc.checks) {
      nlohmann::json obj = nlohmann::json::object();
      obj["g"] = c.g;
      obj["check"] = c.name;
      obj["pass"] = c.pass;
      obj["value"] = c.value;
      obj["expected"] = c.expected;
      obj["detail"] = c.detail;
      checks.push_back(obj);
    }
    results["checks"] = checks;
  }
  if (!doc.overall.empty()) results["overall"] = doc.overall;
  if (doc.extra.is_object())
    for (const auto& [k, v] : doc.extra.items()) results[k] = v;
  root["results"] = results;

  root["provenance"] = doc.provenance;
  return root.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
  std::ostringstream out;
  auto emit_line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      require_bare(fields[i]);
      if (i) out << ",";
      out << fields[i];
    }
    out << "\n";
  };

  if (!doc.columns.empty()) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
      if (csv_keeps(doc, doc.columns[i])) keep.push_back(i);
    std::vector<std::string> line;
    for (std::size_t i : keep) line.push_back(doc.columns[i]);
    emit_line(line);
    for (const auto& row : doc.rows) {
      line.clear();
      for (std::size_t i : keep) line.push_back(row[i]);
      emit_line(line);
    }
    return out.str();
  }

  if (!doc.checks.empty()) {
    emit_line({"g", "check", "pass", "value", "expected"});
    for (const CheckRow& c : doc.checks)
      emit_line({c.g, c.name, c.pass ? "PASS" : "FAIL", c.value, c.expected});
    return out.str();
  }

  std::vector<std::string> header, values;
  for (const auto& [k, v] : doc.scalars) {
    header.push_back(k);
    values.push_back(v);
  }
  emit_line(header);
  emit_line(values);
  return out.str();
}

std::string render_table(const Document& doc) {
  std::ostringstream out;
  out << "# nlk3 " << doc.command << "\n";
  for (const auto& [k, v] : doc.inputs) out << "# " << k << " = " << v << "\n";

  if (!doc.columns.empty()) {
    std::vector<std::size_t> width(doc.columns.size());
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
      width[i] = doc.columns[i].size();
    for (const auto& row : doc.rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    auto emit = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << "  ";
        out << fields[i];
        if (i + 1 < fields.size())
          out << std::string(width[i] - fields[i].size(), ' ');
      }
      out << "\n";
    };
    out << "\n";
    emit(doc.columns);
    for (const auto& row : doc.rows) emit(row);
  }

  if (!doc.scalars.empty()) {
    out << "\n";
    for (const auto& [k, v] : doc.scalars) out << k << ": " << v << "\n";
  }

  if (!doc.checks.empty()) {
    out << "\n";
    for (const CheckRow& c : doc.checks) {
      out << "[" << (c.pass ? "PASS" : "FAIL") << "] ";
      if (c.g != "-") out << "g=" << c.g << " ";
      out << c.name << ": " << c.value;
      if (!c.expected.empty()) out << " (expected " << c.expected << ")";
      if (!c.detail.empty()) out << " -- " << c.detail;
      out << "\n";
    }
  }

  if (!doc.overall.empty()) out << "\noverall: " << doc.overall << "\n";

  if (!doc.provenance.empty()) {
    out << "\nprovenance:\n";
    for (const std::string& p : doc.provenance) out << "  - " << p << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::json: return render_json(doc);
    case Format::csv: return render_csv(doc);
    case Format::table: return render_table(doc);
  }
  return render_table(doc);
}

}  // namespace nlk3cli
