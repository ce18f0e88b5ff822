#include "output.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "rankmetric/errors.hpp"

namespace rmc {

using rankmetric::BigInt;

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw rankmetric::InvalidArgument("unknown format '" + s + "' (csv, json, text)");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Text: return "text";
  }
  return "?";
}

Json big(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  if (x < 0 && x >= BigInt(std::numeric_limits<std::int64_t>::min())) return static_cast<std::int64_t>(x);
  return rankmetric::to_string(x);
}

Json big(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

Json rat(const rankmetric::Rational& x) {
  if (rankmetric::is_integer(x)) return big(rankmetric::to_integer(x));
  return rankmetric::to_string(x);
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    const bool strings = !v.empty() && v.front().is_string();
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += strings ? " | " : " ";
      s += scalar(x);
    }
    return s;
  }
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

std::string config_line(const Json& config) {
  std::string s;
  for (const auto& [k, v] : config.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + scalar(v);
  }
  return s;
}

void flatten(std::ostream& out, const std::string& prefix, const Json& v, bool csv) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(out, prefix.empty() ? k : prefix + "." + k, x, csv);
    return;
  }
  if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(out, prefix + "." + std::to_string(i), v[i], csv);
    return;
  }
  if (csv)
    out << csv_cell(prefix) << ',' << csv_cell(scalar(v)) << '\n';
  else
    out << prefix << ": " << scalar(v) << '\n';
}

}  // namespace

void emit_record(std::ostream& out, Format f, const std::string& command, const Json& config, const Json& result) {
  switch (f) {
    case Format::Json: {
      Json doc;
      doc["tool"] = "rmc";
      doc["command"] = command;
      doc["format_version"] = kFormatVersion;
      doc["config"] = config;
      doc["result"] = result;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "# rmc " << command << " csv v" << kFormatVersion << '\n';
      out << "# config: " << config_line(config) << '\n';
      out << "key,value\n";
      flatten(out, "", result, true);
      break;
    case Format::Text:
      out << "# rmc " << command << '\n';
      out << "# config: " << config_line(config) << '\n';
      flatten(out, "", result, false);
      break;
  }
}

void emit_table(std::ostream& out, Format f, const std::string& command, const Json& config,
                const std::vector<std::string>& columns, const std::vector<Json>& rows) {
  switch (f) {
    case Format::Json: {
      Json doc;
      doc["tool"] = "rmc";
      doc["command"] = command;
      doc["format_version"] = kFormatVersion;
      doc["config"] = config;
      doc["columns"] = columns;
      doc["rows"] = rows;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "# rmc " << command << " csv v" << kFormatVersion << '\n';
      out << "# config: " << config_line(config) << '\n';
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
      out << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
          out << (i ? "," : "") << csv_cell(r.contains(columns[i]) ? scalar(r[columns[i]]) : "");
        out << '\n';
      }
      break;
    }
    case Format::Text: {
      out << "# rmc " << command << '\n';
      out << "# config: " << config_line(config) << '\n';
      std::vector<std::size_t> w(columns.size());
      std::vector<std::vector<std::string>> cells;
      for (std::size_t i = 0; i < columns.size(); ++i) w[i] = columns[i].size();
      for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < columns.size(); ++i) {
          line.push_back(r.contains(columns[i]) ? scalar(r[columns[i]]) : "");
          w[i] = std::max(w[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      auto print = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) s += "  ";
          s += std::string(w[i] - line[i].size(), ' ') + line[i];
        }
        out << s << '\n';
      };
      print(columns);
      for (const auto& line : cells) print(line);
      break;
    }
  }
}

}  // namespace rmc
