#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tempomotif/edge_list.hpp"

namespace tempomotif {

enum class SyntheticModel {
  kUniform,      // iid endpoints and iid uniform times
  kBursty,       // iid endpoints, times clustered around random burst centres
  kSkewedPairs,  // Zipf-weighted ordered vertex pairs, uniform times
};

SyntheticModel parse_synthetic_model(std::string_view name);
std::string_view to_string(SyntheticModel model);

struct SyntheticSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  Timestamp span = 0;
  SyntheticModel model = SyntheticModel::kUniform;
  std::uint64_t seed = 0;
  double zipf_exponent = 1.5;  // skewed-pairs only
};

// Chronological edge records (time ascending, generation order on ties);
// fully determined by the spec. Throws InvalidArgument for n < 2 or m < 1.
std::vector<RawEdge> generate_synthetic(const SyntheticSpec& spec);

void write_synthetic(std::ostream& out, const SyntheticSpec& spec);

inline TemporalGraph synthetic_graph(const SyntheticSpec& spec) {
  return build_graph(generate_synthetic(spec));
}

}  // namespace tempomotif
