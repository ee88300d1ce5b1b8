#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tempomotif/temporal_graph.hpp"

namespace tempomotif {

// One "src dst time" record as it appears in the file.
struct RawEdge {
  std::uint64_t src = 0;
  std::uint64_t dst = 0;
  Timestamp time = 0;
  std::size_t line = 0;
};

// Streams records out of SNAP-style edge-list text. Lines starting with
// '#' or '%' and blank lines are skipped. Fields are separated by spaces or
// tabs; anything beyond the third field is an error.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(&in) {}

  std::optional<RawEdge> next();
  std::size_t line() const { return line_; }

 private:
  std::istream* in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

enum class SelfLoopPolicy { kReject, kSkip };
enum class VertexMapping {
  kDense,     // ids renumbered 0..n-1 in order of first appearance
  kIdentity,  // ids kept; n = max id + 1
};

struct LoaderOptions {
  SelfLoopPolicy self_loops = SelfLoopPolicy::kReject;
  VertexMapping mapping = VertexMapping::kDense;
};

// seq of each edge is its position in `records` after self-loop filtering.
TemporalGraph build_graph(const std::vector<RawEdge>& records, const LoaderOptions& options = {});

TemporalGraph read_edge_list(std::istream& in, const LoaderOptions& options = {});
TemporalGraph load_edge_list(const std::filesystem::path& path, const LoaderOptions& options = {});

// Writes edges in seq order using external ids, so reloading reproduces the
// same (src, dst, time, seq) tuples.
void write_edge_list(std::ostream& out, const TemporalGraph& g);

}  // namespace tempomotif
