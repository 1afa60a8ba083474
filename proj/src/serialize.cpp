#include "garside/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace garside {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "plain") return Format::Plain;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const CountMatrix& m, Format format) {
  const std::size_t size = m.size();
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json rows = json::array();
      for (std::size_t r = 0; r < size; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < size; ++c) row.push_back(m.at(r, c).get_str());
        rows.push_back(std::move(row));
      }
      json doc = {{"n", m.n()}, {"kind", std::string(name(m.kind()))}, {"labels", m.labels()}, {"rows", std::move(rows)}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "label";
      for (const auto& l : m.labels()) out << ',' << csv_field(l);
      out << '\n';
      for (std::size_t r = 0; r < size; ++r) {
        out << csv_field(m.labels()[r]);
        for (std::size_t c = 0; c < size; ++c) out << ',' << m.at(r, c).get_str();
        out << '\n';
      }
      break;
    }
    case Format::Plain: {
      std::size_t width = 1;
      std::size_t label_width = 1;
      for (const auto& l : m.labels()) label_width = std::max(label_width, l.size());
      for (const auto& e : m.entries()) width = std::max(width, e.get_str().size());
      out << name(m.kind()) << " n=" << m.n() << " size=" << size << '\n';
      for (std::size_t r = 0; r < size; ++r) {
        const auto& l = m.labels()[r];
        out << l << std::string(label_width - l.size(), ' ') << " |";
        for (std::size_t c = 0; c < size; ++c) {
          const std::string v = m.at(r, c).get_str();
          out << ' ' << std::string(width - v.size(), ' ') << v;
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

namespace {

const char* status(const FormulaPoint& p) {
  if (p.informational) return p.match ? "agrees" : "paper-discrepancy";
  return p.match ? "ok" : "MISMATCH";
}

}  // namespace

std::string render(const std::vector<FormulaReport>& reports, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json doc = json::array();
      for (const auto& r : reports) {
        json points = json::array();
        for (const auto& p : r.points) {
          json item = {{"at", p.at}, {"formula", p.formula.get_str()}, {"reference", p.reference.get_str()}, {"match", p.match}};
          if (p.informational) item["flag"] = status(p);
          if (!p.note.empty()) item["note"] = p.note;
          points.push_back(std::move(item));
        }
        doc.push_back({{"id", r.id}, {"range", r.range}, {"passed", r.passed()}, {"points", std::move(points)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "id,at,formula,reference,status,note\n";
      for (const auto& r : reports) {
        for (const auto& p : r.points) {
          out << r.id << ',' << csv_field(p.at) << ',' << p.formula.get_str() << ',' << p.reference.get_str() << ','
              << status(p) << ',' << csv_field(p.note) << '\n';
        }
      }
      break;
    }
    case Format::Plain: {
      for (const auto& r : reports) {
        out << r.id << " [" << r.range << "] " << (r.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& p : r.points) {
          out << "  " << p.at << ": " << p.formula.get_str() << " vs " << p.reference.get_str() << "  " << status(p);
          if (!p.note.empty()) out << "  (" << p.note << ')';
          out << '\n';
        }
      }
      break;
    }
  }
  return out.str();
}

}  // namespace garside
