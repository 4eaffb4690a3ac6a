#include "abconv/io/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace abconv::io {

Json to_json(const Report& r) {
  return {{"operation", r.operation},
          {"input_digest", r.input_digest},
          {"status", r.status},
          {"result", r.result},
          {"certificate", r.certificate}};
}

std::string dump_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string input_digest(const std::vector<std::string>& canonical_inputs) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const std::string& text : canonical_inputs) {
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;  // separator
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

std::string exact_cell(const ExtScalar& v) {
  if (v.is_top()) return "top";
  if (v.is_bottom()) return "bottom";
  return to_string(v.value());
}

std::string decimal_cell(const ExtScalar& v) {
  if (v.is_top()) return "inf";
  if (v.is_bottom()) return "-inf";
  return to_decimal(v.value(), 12);
}

}  // namespace

std::string emit_plot_data(Index dim, const std::vector<Vec>& grid, const std::vector<CsvColumn>& columns) {
  for (const CsvColumn& c : columns) {
    if (c.values.size() != grid.size()) throw DimensionError("plot data: column '" + c.name + "' does not match the grid");
  }
  std::ostringstream out;
  std::vector<std::string> header;
  for (Index i = 0; i < dim; ++i) {
    const std::string name = dim == 1 ? "x" : "x" + std::to_string(i + 1);
    header.push_back(name);
    header.push_back(name + "_decimal");
  }
  for (const CsvColumn& c : columns) {
    header.push_back(c.name);
    header.push_back(c.name + "_decimal");
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (grid[r].size() != dim) throw DimensionError("plot data: grid point of the wrong dimension");
    std::vector<std::string> cells;
    for (Index i = 0; i < dim; ++i) {
      cells.push_back(to_string(grid[r](i)));
      cells.push_back(to_decimal(grid[r](i), 12));
    }
    for (const CsvColumn& c : columns) {
      cells.push_back(exact_cell(c.values[r]));
      cells.push_back(decimal_cell(c.values[r]));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace abconv::io
