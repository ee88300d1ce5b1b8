#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tempomotif/motif.hpp"
#include "tempomotif/types.hpp"

namespace tempomotif {

// Anything that can answer time-bounded adjacency and pair queries: the
// offline TemporalGraph and the streaming active window both qualify.
template <class S>
concept EdgeSource = requires(const S& s, VertexId v, const KeyRange& r) {
  { s.out_edges_in(v, r) };
  { s.in_edges_in(v, r) };
  { s.pair_edges_in(v, v, r) };
  { s.count_pair_edges(v, v, r) } -> std::convertible_to<Count>;
  { s.degree(v) } -> std::convertible_to<std::size_t>;
};

struct SearchStats {
  std::uint64_t expansions = 0;  // candidate edges examined
  std::uint64_t searches = 0;    // local searches started
};

// Edge-by-edge backtracking for motif instances that contain a fixed seed
// edge at a fixed motif position. Holds scratch state, so one instance per
// thread.
template <EdgeSource Source>
class LocalCounter {
 public:
  LocalCounter(const Source& source, const TemporalMotif& motif, Timestamp delta,
               OrderHeuristics heuristics = OrderHeuristics::kBoundaryFirst)
      : source_(&source),
        motif_(&motif),
        delta_(delta),
        orders_(heuristics == OrderHeuristics::kBoundaryFirst ? motif.matching_orders()
                                                               : matching_orders(motif, heuristics)),
        vertex_of_(motif.num_vertices(), kUnassigned),
        key_of_(motif.num_edges()),
        has_key_(motif.num_edges(), false) {}

  // Instances where `seed` plays motif edge j.
  Count count(const TemporalEdge& seed, std::size_t j) {
    auto ignore = [](std::span<const EdgeKey>) {};
    return run(seed, j, ignore);
  }

  // Instances where `seed` is the last motif edge.
  Count count_last(const TemporalEdge& seed) { return count(seed, motif_->num_edges() - 1); }

  // Calls visit(keys) for each instance, keys indexed by motif edge.
  template <class Visit>
  Count enumerate(const TemporalEdge& seed, std::size_t j, Visit&& visit) {
    return run(seed, j, visit, true);
  }

  const SearchStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

 private:
  static constexpr VertexId kUnassigned = std::numeric_limits<VertexId>::max();

  template <class Visit>
  Count run(const TemporalEdge& seed, std::size_t j, Visit&& visit, bool materialize = false) {
    ++stats_.searches;
    const auto& first = motif_->edge(j);
    std::fill(vertex_of_.begin(), vertex_of_.end(), kUnassigned);
    std::fill(has_key_.begin(), has_key_.end(), false);
    used_.clear();
    vertex_of_[first.src] = seed.src;
    vertex_of_[first.dst] = seed.dst;
    used_.push_back(seed.src);
    used_.push_back(seed.dst);
    key_of_[j] = seed.key();
    has_key_[j] = true;
    materialize_ = materialize;
    return extend(orders_[j].order, 1, visit);
  }

  bool vertex_used(VertexId v) const {
    return std::find(used_.begin(), used_.end(), v) != used_.end();
  }

  // Admissible keys for motif edge idx: strictly between its matched sigma
  // neighbours, and within delta of every matched edge.
  KeyRange bounds(std::size_t idx) const {
    const std::size_t l = motif_->num_edges();
    std::size_t earliest = l, latest = l, pred = l, succ = l;
    for (std::size_t i = 0; i < l; ++i) {
      if (!has_key_[i]) continue;
      if (earliest == l) earliest = i;
      latest = i;
      if (i < idx) pred = i;
      if (i > idx && succ == l) succ = i;
    }
    KeyRange r;
    r.lo = EdgeKey{sat_sub(key_of_[latest].time, delta_), 0};
    if (pred != l) r.lo = std::max(r.lo, key_of_[pred].successor());
    r.hi = keys_through(sat_add(key_of_[earliest].time, delta_));
    if (succ != l) r.hi = std::min(r.hi, key_of_[succ]);
    return r;
  }

  template <class Visit>
  Count extend(const std::vector<std::size_t>& order, std::size_t depth, Visit& visit) {
    const std::size_t l = motif_->num_edges();
    if (depth == l) {
      if (materialize_) visit(std::span<const EdgeKey>(key_of_));
      return 1;
    }
    const std::size_t idx = order[depth];
    const KeyRange range = bounds(idx);
    if (range.empty()) return 0;
    const auto& me = motif_->edge(idx);
    const VertexId a = vertex_of_[me.src];
    const VertexId b = vertex_of_[me.dst];
    Count total = 0;

    if (a != kUnassigned && b != kUnassigned) {
      if (depth + 1 == l && !materialize_) {
        ++stats_.expansions;
        return source_->count_pair_edges(a, b, range);
      }
      for (const EdgeKey& k : source_->pair_edges_in(a, b, range)) {
        ++stats_.expansions;
        key_of_[idx] = k;
        has_key_[idx] = true;
        total += extend(order, depth + 1, visit);
      }
      has_key_[idx] = false;
      return total;
    }

    const bool outgoing = a != kUnassigned;
    const MotifVertex free_vertex = outgoing ? me.dst : me.src;
    auto candidates = outgoing ? source_->out_edges_in(a, range) : source_->in_edges_in(b, range);
    for (const auto& entry : candidates) {
      ++stats_.expansions;
      if (vertex_used(entry.nbr)) continue;
      vertex_of_[free_vertex] = entry.nbr;
      used_.push_back(entry.nbr);
      key_of_[idx] = entry.key();
      has_key_[idx] = true;
      total += extend(order, depth + 1, visit);
      used_.pop_back();
    }
    vertex_of_[free_vertex] = kUnassigned;
    has_key_[idx] = false;
    return total;
  }

  const Source* source_;
  const TemporalMotif* motif_;
  Timestamp delta_;
  std::vector<MatchingOrder> orders_;
  std::vector<VertexId> vertex_of_;
  std::vector<VertexId> used_;
  std::vector<EdgeKey> key_of_;
  std::vector<bool> has_key_;
  bool materialize_ = false;
  SearchStats stats_;
};

}  // namespace tempomotif
