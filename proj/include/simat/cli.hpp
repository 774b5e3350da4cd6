#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simat/structure/carrier.hpp"
#include "simat/structure/linear_map.hpp"

namespace simat::cli {

/// One parsed carrier description file (TOML subset: key = value pairs,
/// [action] and [map] sections, repeated [[part]] tables, # comments).
struct CarrierFile {
  CarrierSpec carrier;
  ScalarActionSpec action;
  std::optional<int> coeff_bound;
  std::optional<std::uint64_t> seed;
  std::vector<SuperIntervalMatrix> generators;
  std::vector<std::vector<SuperIntervalMatrix>> parts;
  std::optional<PartitionSpec> map_shape;
  std::vector<std::string> map_cells;  // "3*a1", "a4", "a3+1", "0"

  LinearMapFn compile_map() const;
};

CarrierFile parse_carrier_file(const std::string& text);
CarrierFile load_carrier_file(const std::string& path);

/// Full command-line entry point; returns the process exit code
/// (0 success, 1 domain/shape/type errors, 2 usage errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simat::cli
