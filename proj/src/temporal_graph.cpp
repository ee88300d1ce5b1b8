#include "tempomotif/temporal_graph.hpp"

#include <algorithm>

#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

std::span<const AdjEntry> slice_by_key(std::span<const AdjEntry> list, const KeyRange& range) {
  if (range.empty()) return {};
  auto lo = std::lower_bound(list.begin(), list.end(), range.lo,
                             [](const AdjEntry& a, const EdgeKey& k) { return a.key() < k; });
  auto hi = std::lower_bound(lo, list.end(), range.hi,
                             [](const AdjEntry& a, const EdgeKey& k) { return a.key() < k; });
  return {lo, hi};
}

void build_csr(std::size_t n, const std::vector<TemporalEdge>& edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<AdjEntry>& entries) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[(outgoing ? e.src : e.dst) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  entries.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // edges are key-sorted, so every list comes out key-sorted
  for (const auto& e : edges) {
    VertexId owner = outgoing ? e.src : e.dst;
    entries[cursor[owner]++] = AdjEntry{e.time, e.seq, outgoing ? e.dst : e.src};
  }
}

}  // namespace

TimeWindowView::TimeWindowView(const TemporalGraph& graph, Timestamp lo, Timestamp hi)
    : graph_(&graph), lo_(lo), hi_(hi) {
  if (lo > hi) throw InvalidArgument("window: lo > hi");
  auto all = graph.edges();
  auto first = std::lower_bound(all.begin(), all.end(), lo,
                                [](const TemporalEdge& e, Timestamp t) { return e.time < t; });
  auto last = std::upper_bound(first, all.end(), hi,
                               [](Timestamp t, const TemporalEdge& e) { return t < e.time; });
  edges_ = {first, last};
}

TemporalGraph TemporalGraph::build(std::size_t num_vertices, std::vector<TemporalEdge> edges,
                                   std::vector<std::uint64_t> external_ids) {
  if (!external_ids.empty() && external_ids.size() != num_vertices) {
    throw InvalidArgument("external id table does not match vertex count");
  }
  TemporalGraph g;
  g.num_vertices_ = num_vertices;
  for (const auto& e : edges) {
    if (e.src >= num_vertices || e.dst >= num_vertices) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.src == e.dst) throw DataError("self-loop edge");
  }
  std::sort(edges.begin(), edges.end(),
            [](const TemporalEdge& a, const TemporalEdge& b) { return a.key() < b.key(); });
  g.edges_ = std::move(edges);

  EdgeSeq max_seq = 0;
  for (const auto& e : g.edges_) max_seq = std::max(max_seq, e.seq);
  if (!g.edges_.empty()) {
    constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
    g.position_of_seq_.assign(max_seq + 1, kAbsent);
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
      auto& slot = g.position_of_seq_[g.edges_[i].seq];
      if (slot != kAbsent) throw InvalidArgument("duplicate edge seq");
      slot = i;
    }
  }

  build_csr(num_vertices, g.edges_, true, g.out_offsets_, g.out_entries_);
  build_csr(num_vertices, g.edges_, false, g.in_offsets_, g.in_entries_);
  for (const auto& e : g.edges_) g.pair_index_[{e.src, e.dst}].push_back(e.key());
  g.external_ids_ = std::move(external_ids);
  return g;
}

std::span<const AdjEntry> TemporalGraph::out_edges(VertexId v) const {
  if (v >= num_vertices_) return {};
  return std::span<const AdjEntry>(out_entries_).subspan(out_offsets_[v],
                                                         out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const AdjEntry> TemporalGraph::in_edges(VertexId v) const {
  if (v >= num_vertices_) return {};
  return std::span<const AdjEntry>(in_entries_).subspan(in_offsets_[v],
                                                        in_offsets_[v + 1] - in_offsets_[v]);
}

std::span<const AdjEntry> TemporalGraph::out_edges_in(VertexId v, const KeyRange& range) const {
  return slice_by_key(out_edges(v), range);
}

std::span<const AdjEntry> TemporalGraph::in_edges_in(VertexId v, const KeyRange& range) const {
  return slice_by_key(in_edges(v), range);
}

std::span<const EdgeKey> TemporalGraph::pair_edges(VertexId u, VertexId v) const {
  auto it = pair_index_.find({u, v});
  if (it == pair_index_.end()) return {};
  return it->second;
}

std::span<const EdgeKey> TemporalGraph::pair_edges_in(VertexId u, VertexId v,
                                                      const KeyRange& range) const {
  if (range.empty()) return {};
  auto list = pair_edges(u, v);
  auto lo = std::lower_bound(list.begin(), list.end(), range.lo);
  auto hi = std::lower_bound(lo, list.end(), range.hi);
  return {lo, hi};
}

Count TemporalGraph::count_pair_edges_in_range(VertexId u, VertexId v, Timestamp lo, Timestamp hi,
                                               bool open_lo, bool open_hi) const {
  auto list = pair_edges(u, v);
  auto by_time = [](const EdgeKey& k, Timestamp t) { return k.time < t; };
  auto time_before = [](Timestamp t, const EdgeKey& k) { return t < k.time; };
  auto first = open_lo ? std::upper_bound(list.begin(), list.end(), lo, time_before)
                       : std::lower_bound(list.begin(), list.end(), lo, by_time);
  auto last = open_hi ? std::lower_bound(list.begin(), list.end(), hi, by_time)
                      : std::upper_bound(list.begin(), list.end(), hi, time_before);
  return last > first ? static_cast<Count>(last - first) : 0;
}

TimeWindowView TemporalGraph::window(Timestamp lo, Timestamp hi) const {
  return TimeWindowView(*this, lo, hi);
}

GraphStats TemporalGraph::stats() const {
  GraphStats s;
  s.n = num_vertices_;
  s.m = edges_.size();
  s.static_edges = pair_index_.size();
  if (!edges_.empty()) {
    s.min_time = edges_.front().time;
    s.max_time = edges_.back().time;
  }
  return s;
}

}  // namespace tempomotif
