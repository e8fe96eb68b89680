#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "catalan/exact.hpp"
#include "catalan/report.hpp"

namespace catalan {

enum class TableTriangle { C, B, A, X, Y, Z, W, M };

// "C", "B", "A", "X", "Y", "Z", "W" or "M".
std::optional<TableTriangle> parse_table_triangle(std::string_view name);
std::string to_string(TableTriangle triangle);

struct TableRequest {
  TableTriangle triangle = TableTriangle::C;
  long rows = 0;  // rows 0..rows-1, columns likewise
  Rational x;     // Motzkin weights, ignored for the other triangles
  Rational y;
};

// ascii: right-aligned grid with an "n/k" header, blank cells outside the
// triangle's support, and "row sums" (plus "alt sums" for Z) columns for the
// derived triangles. csv: "n,k,value" per support cell. json: an object
// holding the rows as arrays of decimal strings.
std::string render_table(const TableRequest& request, OutputFormat format);

}  // namespace catalan
