#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <json.hpp>
#include <ostream>

#include "reg/errors.hpp"
#include "reg/evalkit.hpp"

namespace reg::eval {
namespace {

constexpr std::string_view kHeader =
    "document,system,status,rouge2_r,rouge2_p,rouge2_f,su4_r,su4_p,su4_f,warnings";

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

// Reads one CSV record, which may span lines inside quotes.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

double parse_number(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw Error("malformed score in CSV: '" + s + "'");
  return v;
}

std::vector<std::string> split_warnings(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    auto next = s.find("; ", pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 2;
  }
  return out;
}

nlohmann::ordered_json score_json(const RougeScore& s) {
  return {{"recall", s.recall}, {"precision", s.precision}, {"f1", s.f1}};
}

}  // namespace

void ScoreTable::write_csv(std::ostream& out) const {
  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << quote(r.document) << ',' << quote(r.system) << ',' << (r.failed ? "failed" : "ok") << ','
        << fixed4(r.rouge2.recall) << ',' << fixed4(r.rouge2.precision) << ','
        << fixed4(r.rouge2.f1) << ',' << fixed4(r.su4.recall) << ',' << fixed4(r.su4.precision)
        << ',' << fixed4(r.su4.f1) << ',' << quote(join(r.warnings, "; ")) << '\n';
  }
}

ScoreTable ScoreTable::read_csv(std::istream& in) {
  ScoreTable table;
  std::vector<std::string> fields;
  bool header = false;
  while (in.peek() == '#') {
    std::string line;
    std::getline(in, line);
    auto body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
    auto eq = body.find('=');
    if (eq == std::string::npos) throw Error("malformed metadata line: " + line);
    table.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
  }
  while (read_record(in, fields)) {
    if (!header) {
      if (join(fields, ",") != kHeader) throw Error("unexpected score table header");
      header = true;
      continue;
    }
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 10) throw Error("score table row has " + std::to_string(fields.size()) + " fields");
    ScoreRow row;
    row.document = fields[0];
    row.system = fields[1];
    row.failed = fields[2] == "failed";
    row.rouge2 = {parse_number(fields[3]), parse_number(fields[4]), parse_number(fields[5])};
    row.su4 = {parse_number(fields[6]), parse_number(fields[7]), parse_number(fields[8])};
    row.warnings = split_warnings(fields[9]);
    table.rows.push_back(std::move(row));
  }
  if (!header) throw Error("score table has no header");
  return table;
}

void ScoreTable::write_json(std::ostream& out) const {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : metadata) meta[key] = value;
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"document", r.document},
                         {"system", r.system},
                         {"status", r.failed ? "failed" : "ok"},
                         {"rouge2", score_json(r.rouge2)},
                         {"su4", score_json(r.su4)},
                         {"warnings", r.warnings}});
  }
  nlohmann::ordered_json j;
  j["metadata"] = meta;
  j["rows"] = rows_json;
  out << j.dump(2) << '\n';
}

void ScoreTable::write_text(std::ostream& out) const {
  for (const auto& [key, value] : metadata) out << key << ": " << value << '\n';
  std::size_t doc_w = 8, sys_w = 6;
  for (const auto& r : rows) {
    doc_w = std::max(doc_w, r.document.size());
    sys_w = std::max(sys_w, r.system.size());
  }
  out << std::left << std::setw(static_cast<int>(doc_w)) << "document" << "  "
      << std::setw(static_cast<int>(sys_w)) << "system"
      << "  rouge2_r  rouge2_p  rouge2_f  su4_r     su4_p     su4_f\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(doc_w)) << r.document << "  "
        << std::setw(static_cast<int>(sys_w)) << r.system;
    for (double v : {r.rouge2.recall, r.rouge2.precision, r.rouge2.f1, r.su4.recall,
                     r.su4.precision, r.su4.f1}) {
      out << "  " << std::setw(8) << fixed4(v);
    }
    if (!r.warnings.empty()) out << "  [" << join(r.warnings, "; ") << ']';
    out << '\n';
  }
}

}  // namespace reg::eval
