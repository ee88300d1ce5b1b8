#pragma once

#include <cstddef>
#include <vector>

#include "tempomotif/local_search.hpp"
#include "tempomotif/motif.hpp"
#include "tempomotif/temporal_graph.hpp"

namespace tempomotif {

// A delta-instance: graph edges listed in motif (sigma) order.
struct MotifInstance {
  std::vector<EdgeSeq> graph_edges;
  std::vector<Timestamp> times;
};

// eta_j(e): instances with e mapped to motif edge j.
Count count_local(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                  const TemporalEdge& e, std::size_t j);

// Instances with e as the last motif edge.
template <EdgeSource Source>
Count count_local_last(const Source& source, const TemporalMotif& motif, Timestamp delta,
                       const TemporalEdge& e) {
  LocalCounter<Source> counter(source, motif, delta);
  return counter.count_last(e);
}

// Exact number of delta-instances. Each instance is counted once, at its
// last edge. Throws std::overflow_error if the count leaves 64 bits.
Count exact_count(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                  SearchStats* stats = nullptr);

// Same count, seeding every search at motif edge `start` instead.
Count exact_count_from(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                       std::size_t start, OrderHeuristics heuristics = OrderHeuristics::kBoundaryFirst);

// All instances found by backtracking, in last-edge order.
std::vector<MotifInstance> enumerate_instances(const TemporalGraph& g, const TemporalMotif& motif,
                                               Timestamp delta);

struct NaiveLimits {
  std::size_t max_edges = 10'000;
  std::size_t max_motif_edges = 5;
};

// Reference enumerator that does not use adjacency indexes or matching
// orders: walks increasing l-tuples of the time-sorted edge list inside a
// delta span and checks the vertex bijection. Throws GuardExceeded beyond
// `limits`.
std::vector<MotifInstance> naive_enumerate(const TemporalGraph& g, const TemporalMotif& motif,
                                           Timestamp delta, const NaiveLimits& limits = {});

// Checks the instance definition directly: strictly increasing (time, seq),
// duration <= delta and a consistent bijective vertex map.
bool is_valid_instance(const TemporalGraph& g, const TemporalMotif& motif, Timestamp delta,
                       const MotifInstance& instance);

}  // namespace tempomotif
