#include "tempomotif/backtracking.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("motif count overflow");
  return out;
}

void require_delta_instance_inputs(const TemporalMotif& motif, std::size_t j) {
  if (j >= motif.num_edges()) throw InvalidArgument("motif edge index out of range");
}

}  // namespace

Count count_local(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                  const TemporalEdge& e, std::size_t j) {
  require_delta_instance_inputs(motif, j);
  LocalCounter<TemporalGraph> counter(g, motif, delta);
  return counter.count(e, j);
}

Count exact_count(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                  SearchStats* stats) {
  LocalCounter<TemporalGraph> counter(g, motif, delta);
  Count total = 0;
  for (const auto& e : g.edges()) total = checked_add(total, counter.count_last(e));
  if (stats) *stats = counter.stats();
  return total;
}

Count exact_count_from(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                       std::size_t start, OrderHeuristics heuristics) {
  require_delta_instance_inputs(motif, start);
  LocalCounter<TemporalGraph> counter(g, motif, delta, heuristics);
  Count total = 0;
  for (const auto& e : g.edges()) total = checked_add(total, counter.count(e, start));
  return total;
}

std::vector<MotifInstance> enumerate_instances(const TemporalGraph& g, const TemporalMotif& motif,
                                               Timestamp delta) {
  LocalCounter<TemporalGraph> counter(g, motif, delta);
  std::vector<MotifInstance> out;
  const std::size_t last = motif.num_edges() - 1;
  for (const auto& e : g.edges()) {
    counter.enumerate(e, last, [&](std::span<const EdgeKey> keys) {
      MotifInstance inst;
      for (const auto& k : keys) {
        inst.graph_edges.push_back(k.seq);
        inst.times.push_back(k.time);
      }
      out.push_back(std::move(inst));
    });
  }
  return out;
}

bool is_valid_instance(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                       const MotifInstance& instance) {
  const std::size_t l = motif.num_edges();
  if (instance.graph_edges.size() != l || instance.times.size() != l) return false;
  std::vector<const TemporalEdge*> edges;
  for (std::size_t i = 0; i < l; ++i) {
    const auto& e = g.edge_by_seq(instance.graph_edges[i]);
    if (e.time != instance.times[i]) return false;
    edges.push_back(&e);
  }
  for (std::size_t i = 1; i < l; ++i) {
    if (!(edges[i - 1]->key() < edges[i]->key())) return false;
  }
  if (edges.back()->time - edges.front()->time > delta) return false;

  // f maps graph vertices to motif vertices; must be well defined and injective.
  std::vector<VertexId> graph_of(motif.num_vertices(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < l; ++i) {
    const auto& me = motif.edge(i);
    for (auto [mv, gv] : {std::pair{me.src, edges[i]->src}, std::pair{me.dst, edges[i]->dst}}) {
      if (graph_of[mv] == static_cast<VertexId>(-1)) {
        graph_of[mv] = gv;
      } else if (graph_of[mv] != gv) {
        return false;
      }
    }
  }
  auto sorted = graph_of;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace tempomotif
