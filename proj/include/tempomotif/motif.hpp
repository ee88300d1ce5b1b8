#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tempomotif {

using MotifVertex = std::size_t;

struct MotifEdge {
  MotifVertex src = 0;
  MotifVertex dst = 0;
  friend bool operator==(const MotifEdge&, const MotifEdge&) = default;
};

enum class MotifShape { kStar33, kTriangle, kGeneric };

struct MotifClass {
  MotifShape tag = MotifShape::kGeneric;
  std::optional<MotifVertex> center;  // set for kStar33 only
};

std::string_view to_string(MotifShape shape);

// A matching order for edge-by-edge backtracking: order[0] == start and
// every later edge shares a motif vertex with an earlier one.
struct MatchingOrder {
  std::size_t start = 0;
  std::vector<std::size_t> order;
};

enum class OrderHeuristics {
  kBoundaryFirst,  // connectivity + boundary-edge preference
  kPlain,          // connectivity only, smallest sigma index first
};

// A connected pattern of k vertices and l edges; edges() is in temporal
// (sigma) order.
class TemporalMotif {
 public:
  // Throws InvalidArgument when the pattern is not a valid motif.
  TemporalMotif(std::size_t num_vertices, std::vector<MotifEdge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<MotifEdge>& edges() const { return edges_; }
  const MotifEdge& edge(std::size_t i) const { return edges_[i]; }

  const MotifClass& motif_class() const { return class_; }
  bool wedge_eligible() const { return class_.tag != MotifShape::kGeneric; }

  // order(j) starts at edge j; cached at construction.
  const std::vector<MatchingOrder>& matching_orders() const { return orders_; }

  bool edges_adjacent(std::size_t a, std::size_t b) const;

  std::string to_text() const;

 private:
  std::size_t num_vertices_;
  std::vector<MotifEdge> edges_;
  MotifClass class_;
  std::vector<MatchingOrder> orders_;
};

// Format: first line "k l", then l lines "u v" in sigma order. Blank lines
// and '#' comments are ignored.
TemporalMotif parse_motif(std::string_view text);
TemporalMotif load_motif(const std::filesystem::path& path);

MotifClass classify(const TemporalMotif& motif);

std::vector<MatchingOrder> matching_orders(const TemporalMotif& motif,
                                           OrderHeuristics heuristics = OrderHeuristics::kBoundaryFirst);

MatchingOrder matching_order(const TemporalMotif& motif, std::size_t start,
                             OrderHeuristics heuristics = OrderHeuristics::kBoundaryFirst);

}  // namespace tempomotif
