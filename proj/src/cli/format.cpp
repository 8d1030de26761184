#include "gsc/cli/format.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace gsc::cli {

Json decimal(const Real& x, unsigned decimals) { return to_fixed(x, decimals); }

Json complex_value(const Complex& z, unsigned decimals) {
  Json j;
  j["re"] = to_fixed(z.re, decimals);
  j["im"] = to_fixed(z.im, decimals);
  return j;
}

Json magnitude(const Real& x) { return to_scientific(x, 6); }

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

void flatten(const Json& value, const std::string& prefix, Json& row) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, row);
    return;
  }
  if (value.is_array()) {
    std::string joined;
    for (const auto& v : value) {
      if (!joined.empty()) joined += ' ';
      joined += v.is_string() ? v.get<std::string>() : v.dump();
    }
    row[prefix] = joined;
    return;
  }
  row[prefix] = value.is_string() ? value.get<std::string>() : value.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Json& doc) {
  std::vector<Json> items;
  if (doc.is_array()) {
    for (const auto& v : doc) items.push_back(v);
  } else if (doc.is_object() && doc.contains("reports") && doc["reports"].is_array()) {
    for (const auto& v : doc["reports"]) items.push_back(v);
  } else if (doc.is_object() && doc.contains("records") && doc["records"].is_array()) {
    for (const auto& v : doc["records"]) items.push_back(v);
  } else {
    items.push_back(doc);
  }
  std::vector<Json> rows;
  std::vector<std::string> columns;
  for (const auto& item : items) {
    Json row = Json::object();
    flatten(item, "", row);
    for (const auto& [k, v] : row.items()) {
      bool known = false;
      for (const auto& c : columns) known = known || c == k;
      if (!known) columns.push_back(k);
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_field(columns[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ',';
      if (row.contains(columns[i])) os << csv_field(row[columns[i]].get<std::string>());
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::csv) return render_csv(doc);
  return doc.dump(2) + "\n";
}

}  // namespace gsc::cli
