#include "catalan/table_render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "catalan/transforms.hpp"
#include "catalan/triangles.hpp"
#include "json.hpp"

namespace catalan {

std::optional<TableTriangle> parse_table_triangle(std::string_view name) {
  static constexpr std::pair<std::string_view, TableTriangle> kNames[] = {
      {"C", TableTriangle::C}, {"B", TableTriangle::B}, {"A", TableTriangle::A}, {"X", TableTriangle::X},
      {"Y", TableTriangle::Y}, {"Z", TableTriangle::Z}, {"W", TableTriangle::W}, {"M", TableTriangle::M},
  };
  for (const auto& [text, triangle] : kNames) {
    if (text == name) return triangle;
  }
  return std::nullopt;
}

std::string to_string(TableTriangle triangle) {
  switch (triangle) {
    case TableTriangle::C: return "C";
    case TableTriangle::B: return "B";
    case TableTriangle::A: return "A";
    case TableTriangle::X: return "X";
    case TableTriangle::Y: return "Y";
    case TableTriangle::Z: return "Z";
    case TableTriangle::W: return "W";
    case TableTriangle::M: return "M";
  }
  return "?";
}

namespace {

// Row-major cells; std::nullopt marks a blank outside the support.
struct Grid {
  std::vector<std::vector<std::optional<Rational>>> cells;
  std::vector<std::pair<std::string, std::vector<Rational>>> extra;  // titled trailing columns
};

std::optional<DerivedKind> derived_kind(TableTriangle t) {
  switch (t) {
    case TableTriangle::X: return DerivedKind::X;
    case TableTriangle::Y: return DerivedKind::Y;
    case TableTriangle::Z: return DerivedKind::Z;
    case TableTriangle::W: return DerivedKind::W;
    default: return std::nullopt;
  }
}

Triangle base_triangle(const TableRequest& request) {
  switch (request.triangle) {
    case TableTriangle::B: return Triangle::shapiro();
    case TableTriangle::A: return Triangle::admissible();
    case TableTriangle::M: return Triangle::motzkin(request.x, request.y);
    default: return Triangle::ballot();
  }
}

Grid build_grid(const TableRequest& request) {
  Grid grid;
  grid.cells.resize(request.rows, std::vector<std::optional<Rational>>(request.rows));
  if (const auto kind = derived_kind(request.triangle)) {
    const DerivedTriangle t(*kind);
    std::vector<Rational> sums, alternating;
    for (long n = 0; n < request.rows; ++n) {
      for (long k = 0; k < request.rows; ++k) {
        if (t.in_support(n, k)) grid.cells[n][k] = Rational(t.entry(n, k));
      }
      sums.emplace_back(row_sum(t, n));
      alternating.emplace_back(row_sum(t, n, true));
    }
    grid.extra.emplace_back("row sums", std::move(sums));
    if (*kind == DerivedKind::Z) grid.extra.emplace_back("alt sums", std::move(alternating));
    return grid;
  }
  const Triangle t = base_triangle(request);
  for (long n = 0; n < request.rows; ++n) {
    for (long k = 0; k <= n; ++k) grid.cells[n][k] = t.entry(n, k);
  }
  return grid;
}

void trim_right(std::string& line) {
  line.erase(line.find_last_not_of(' ') + 1);
}

std::string ascii(const Grid& grid) {
  const std::size_t rows = grid.cells.size();
  // Column 0 is the row label; then the cells; then the extra columns.
  std::vector<std::vector<std::string>> text(rows + 1);
  text[0].push_back("n/k");
  for (std::size_t k = 0; k < rows; ++k) text[0].push_back(std::to_string(k));
  for (const auto& [title, values] : grid.extra) text[0].push_back(title);
  for (std::size_t n = 0; n < rows; ++n) {
    auto& line = text[n + 1];
    line.push_back(std::to_string(n));
    for (const auto& cell : grid.cells[n]) line.push_back(cell ? cell->to_string() : "");
    for (const auto& [title, values] : grid.extra) line.push_back(values[n].to_string());
  }
  const std::size_t columns = text[0].size();
  std::vector<std::size_t> width(columns, 0);
  for (const auto& line : text) {
    for (std::size_t c = 0; c < columns; ++c) width[c] = std::max(width[c], line[c].size());
  }
  // A bar precedes the first cell column and each extra column.
  const auto bar_before = [&](std::size_t c) { return c == 1 || c > rows; };

  std::ostringstream os;
  const auto emit = [&](const std::vector<std::string>& line) {
    std::string out;
    for (std::size_t c = 0; c < columns; ++c) {
      if (c > 0) out += bar_before(c) ? " | " : " ";
      out += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    trim_right(out);
    os << out << '\n';
  };
  emit(text[0]);
  std::string rule;
  for (std::size_t c = 0; c < columns; ++c) {
    if (c > 0) rule += bar_before(c) ? "-+-" : "-";
    rule += std::string(width[c], '-');
  }
  os << rule << '\n';
  for (std::size_t n = 0; n < rows; ++n) emit(text[n + 1]);
  return os.str();
}

std::string csv(const Grid& grid) {
  std::ostringstream os;
  os << "n,k,value\n";
  for (std::size_t n = 0; n < grid.cells.size(); ++n) {
    for (std::size_t k = 0; k < grid.cells[n].size(); ++k) {
      if (grid.cells[n][k]) os << n << ',' << k << ',' << *grid.cells[n][k] << '\n';
    }
  }
  return os.str();
}

std::string json(const TableRequest& request, const Grid& grid) {
  nlohmann::ordered_json out;
  out["triangle"] = to_string(request.triangle);
  if (request.triangle == TableTriangle::M) {
    out["x"] = request.x.to_string();
    out["y"] = request.y.to_string();
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& line : grid.cells) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& cell : line) {
      if (cell) row.push_back(cell->to_string());
    }
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  for (const auto& [title, values] : grid.extra) {
    std::string key = title;
    std::replace(key.begin(), key.end(), ' ', '_');
    nlohmann::ordered_json column = nlohmann::ordered_json::array();
    for (const auto& v : values) column.push_back(v.to_string());
    out[key] = std::move(column);
  }
  return out.dump(2) + '\n';
}

}  // namespace

std::string render_table(const TableRequest& request, OutputFormat format) {
  if (request.rows < 0) throw std::invalid_argument("row count must be non-negative");
  const Grid grid = build_grid(request);
  switch (format) {
    case OutputFormat::Ascii: return ascii(grid);
    case OutputFormat::Csv: return csv(grid);
    case OutputFormat::Json: return json(request, grid);
  }
  return {};
}

}  // namespace catalan
