#include <algorithm>
#include <string>

#include "tempomotif/backtracking.hpp"
#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

// Tuple walker over the time-sorted edge array. Partial tuples are dropped
// as soon as the prefix cannot extend to a consistent vertex bijection.
class TupleWalker {
 public:
  TupleWalker(std::span<const TemporalEdge> edges, const TemporalMotif& motif, Timestamp delta)
      : edges_(edges), motif_(motif), delta_(delta), chosen_(motif.num_edges()) {}

  std::vector<MotifInstance> run() {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      chosen_[0] = i;
      if (prefix_consistent(1)) walk(1);
    }
    return std::move(found_);
  }

 private:
  void walk(std::size_t depth) {
    if (depth == motif_.num_edges()) {
      MotifInstance inst;
      for (auto idx : chosen_) {
        inst.graph_edges.push_back(edges_[idx].seq);
        inst.times.push_back(edges_[idx].time);
      }
      found_.push_back(std::move(inst));
      return;
    }
    const Timestamp start = edges_[chosen_[0]].time;
    for (std::size_t i = chosen_[depth - 1] + 1; i < edges_.size(); ++i) {
      if (edges_[i].time - start > delta_) break;
      chosen_[depth] = i;
      if (prefix_consistent(depth + 1)) walk(depth + 1);
    }
  }

  // The map motif vertex -> graph vertex induced by the first `len` chosen
  // edges is a function and is injective.
  bool prefix_consistent(std::size_t len) const {
    std::vector<std::pair<MotifVertex, VertexId>> assigned;
    for (std::size_t i = 0; i < len; ++i) {
      const auto& me = motif_.edge(i);
      const auto& ge = edges_[chosen_[i]];
      for (auto [mv, gv] : {std::pair{me.src, ge.src}, std::pair{me.dst, ge.dst}}) {
        for (const auto& [m2, g2] : assigned) {
          if ((m2 == mv) != (g2 == gv)) return false;
        }
        assigned.emplace_back(mv, gv);
      }
    }
    return true;
  }

  std::span<const TemporalEdge> edges_;
  const TemporalMotif& motif_;
  Timestamp delta_;
  std::vector<std::size_t> chosen_;
  std::vector<MotifInstance> found_;
};

}  // namespace

std::vector<MotifInstance> naive_enumerate(const TemporalGraph& g, const TemporalMotif& motif,
                                           Timestamp delta, const NaiveLimits& limits) {
  if (g.num_edges() > limits.max_edges || motif.num_edges() > limits.max_motif_edges) {
    throw GuardExceeded("naive enumeration limited to m <= " + std::to_string(limits.max_edges) +
                        " and l <= " + std::to_string(limits.max_motif_edges) + " (got m = " +
                        std::to_string(g.num_edges()) + ", l = " +
                        std::to_string(motif.num_edges()) + ")");
  }
  return TupleWalker(g.edges(), motif, delta).run();
}

}  // namespace tempomotif
