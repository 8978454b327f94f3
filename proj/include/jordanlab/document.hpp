#pragma once

// Line-oriented element files:
//
//   algebra: herm_c:2
//   coords: 1 0 0 0.5
//   label: optional free text
//
// Coordinates are written with 17 significant digits so a write/read cycle
// reproduces them exactly.

#include "jordanlab/algebra.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jordanlab {

struct ElementDocument {
  std::string algebra;  // family spec string
  std::vector<double> coords;
  std::optional<std::string> label;
};

/// Throws Error(ParseError) on malformed input.
ElementDocument read_document(std::istream& in);
ElementDocument read_document_file(const std::string& path);
void write_document(std::ostream& out, const ElementDocument& doc);

ElementDocument to_document(const Element& x, std::optional<std::string> label = std::nullopt);
/// Builds the element in `algebra`; throws ParseError if the document names a
/// different algebra or has the wrong number of coordinates.
Element to_element(const ElementDocument& doc, const AlgebraPtr& algebra);

std::string format_double(double v);

}  // namespace jordanlab
