#pragma once

#include <string>
#include <vector>

#include "abconv/io/problem.hpp"

namespace abconv::io {

/// Result of one command. Serialized with sorted keys; timing is kept out of
/// the JSON so that reruns are byte-identical.
struct Report {
  std::string operation;
  std::string input_digest;
  std::string status = "ok";
  Json result = Json::object();
  Json certificate = Json::object();
};

Json to_json(const Report& r);
std::string dump_report(const Report& r);

/// 64-bit FNV-1a over the given canonical texts, as "fnv1a64:<hex>".
std::string input_digest(const std::vector<std::string>& canonical_inputs);

/// A function-valued column of plot data.
struct CsvColumn {
  std::string name;
  std::vector<ExtScalar> values;
};

/// Header row, then one row per grid point in grid order. Coordinates and
/// values appear exactly ("p/q") and as 12-digit decimals.
std::string emit_plot_data(Index dim, const std::vector<Vec>& grid, const std::vector<CsvColumn>& columns);

}  // namespace abconv::io
