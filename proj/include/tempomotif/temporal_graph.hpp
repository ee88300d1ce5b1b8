#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "tempomotif/types.hpp"

namespace tempomotif {

class TemporalGraph;

// Edges of a graph whose timestamps fall in [lo, hi], in (time, seq) order.
class TimeWindowView {
 public:
  TimeWindowView(const TemporalGraph& graph, Timestamp lo, Timestamp hi);

  Timestamp lo() const { return lo_; }
  Timestamp hi() const { return hi_; }
  const TemporalGraph& graph() const { return *graph_; }

  std::span<const TemporalEdge> edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

 private:
  const TemporalGraph* graph_;
  Timestamp lo_;
  Timestamp hi_;
  std::span<const TemporalEdge> edges_;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t static_edges = 0;  // distinct ordered pairs
  Timestamp min_time = 0;
  Timestamp max_time = 0;
  Timestamp time_span() const { return max_time - min_time; }
};

// Immutable time-sorted directed multigraph. Vertex ids are dense in [0, n).
// Every edge appears once in edges(), once in the out-list of its source,
// once in the in-list of its target and once in its pair's timestamp list.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Builds all indexes. Edges may arrive in any order; each must carry a
  // unique seq, src != dst, and endpoints < num_vertices. external_ids, when
  // non-empty, must have num_vertices entries.
  static TemporalGraph build(std::size_t num_vertices, std::vector<TemporalEdge> edges,
                             std::vector<std::uint64_t> external_ids = {});

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::span<const TemporalEdge> edges() const { return edges_; }
  std::span<const AdjEntry> out_edges(VertexId v) const;
  std::span<const AdjEntry> in_edges(VertexId v) const;
  std::span<const AdjEntry> out_edges_in(VertexId v, const KeyRange& range) const;
  std::span<const AdjEntry> in_edges_in(VertexId v, const KeyRange& range) const;

  // Time-sorted keys of all edges u -> v; empty for an absent pair.
  std::span<const EdgeKey> pair_edges(VertexId u, VertexId v) const;
  std::span<const EdgeKey> pair_edges_in(VertexId u, VertexId v, const KeyRange& range) const;
  Count count_pair_edges(VertexId u, VertexId v, const KeyRange& range) const {
    return pair_edges_in(u, v, range).size();
  }
  const std::unordered_map<PairKey, std::vector<EdgeKey>, PairKeyHash>& pair_index() const {
    return pair_index_;
  }

  // Edges u -> v with timestamp between lo and hi; each bound is excluded
  // when its open flag is set.
  Count count_pair_edges_in_range(VertexId u, VertexId v, Timestamp lo, Timestamp hi,
                                  bool open_lo, bool open_hi) const;

  TimeWindowView window(Timestamp lo, Timestamp hi) const;

  // Total temporal degree (in + out).
  std::size_t degree(VertexId v) const { return out_edges(v).size() + in_edges(v).size(); }

  std::uint64_t external_id(VertexId v) const {
    return external_ids_.empty() ? v : external_ids_[v];
  }
  std::span<const std::uint64_t> external_ids() const { return external_ids_; }

  // Edge with the given ingestion index.
  const TemporalEdge& edge_by_seq(EdgeSeq seq) const { return edges_[position_of_seq_[seq]]; }

  GraphStats stats() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<TemporalEdge> edges_;
  std::vector<std::size_t> position_of_seq_;
  std::vector<std::size_t> out_offsets_;
  std::vector<AdjEntry> out_entries_;
  std::vector<std::size_t> in_offsets_;
  std::vector<AdjEntry> in_entries_;
  std::unordered_map<PairKey, std::vector<EdgeKey>, PairKeyHash> pair_index_;
  std::vector<std::uint64_t> external_ids_;
};

inline TimeWindowView window(const TemporalGraph& g, Timestamp lo, Timestamp hi) {
  return g.window(lo, hi);
}

inline Count count_pair_edges_in_range(const TemporalGraph& g, VertexId u, VertexId v,
                                       Timestamp lo, Timestamp hi, bool open_lo, bool open_hi) {
  return g.count_pair_edges_in_range(u, v, lo, hi, open_lo, open_hi);
}

}  // namespace tempomotif
