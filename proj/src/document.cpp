#include "jordanlab/document.hpp"

#include "jordanlab/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace jordanlab {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "bad coordinate '" + token + "'");
  }
  return v;
}

}  // namespace

ElementDocument read_document(std::istream& in) {
  ElementDocument doc;
  bool have_algebra = false, have_coords = false;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'key: value', got '" + t + "'");
    const std::string key = trim(t.substr(0, colon));
    const std::string value = trim(t.substr(colon + 1));
    if (key == "algebra") {
      doc.algebra = value;
      have_algebra = true;
    } else if (key == "coords") {
      std::istringstream tokens(value);
      std::string tok;
      while (tokens >> tok) doc.coords.push_back(parse_number(tok));
      have_coords = true;
    } else if (key == "label") {
      doc.label = value;
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
  }
  if (!have_algebra) throw Error(ErrorCode::ParseError, "missing 'algebra:' line");
  if (!have_coords) throw Error(ErrorCode::ParseError, "missing 'coords:' line");
  return doc;
}

ElementDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_document(in);
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_document(std::ostream& out, const ElementDocument& doc) {
  out << "algebra: " << doc.algebra << "\ncoords:";
  for (double v : doc.coords) out << ' ' << format_double(v);
  out << '\n';
  if (doc.label) out << "label: " << *doc.label << '\n';
}

ElementDocument to_document(const Element& x, std::optional<std::string> label) {
  ElementDocument doc;
  doc.algebra = x.algebra()->name();
  doc.coords.assign(x.coords().data(), x.coords().data() + x.coords().size());
  doc.label = std::move(label);
  return doc;
}

Element to_element(const ElementDocument& doc, const AlgebraPtr& algebra) {
  if (doc.algebra != algebra->name()) {
    throw Error(ErrorCode::ParseError, "document algebra '" + doc.algebra + "' is not '" + algebra->name() + "'");
  }
  if (static_cast<int>(doc.coords.size()) != algebra->dim()) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(algebra->dim()) + " coordinates, got " +
                                           std::to_string(doc.coords.size()));
  }
  return algebra->element(Eigen::Map<const Vector>(doc.coords.data(), algebra->dim()));
}

}  // namespace jordanlab
