#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "tempomotif/error.hpp"
#include "tempomotif/local_search.hpp"
#include "tempomotif/motif.hpp"
#include "tempomotif/random.hpp"

namespace tempomotif {

// Temporal wedge shapes: the two edges' directions relative to the center
// and which of them comes first.
enum class WedgePattern : std::uint8_t {
  kOutOut,
  kOutIn,
  kInOut,
  kInIn,
};

// A concrete two-edge wedge around `center`; edge_a precedes edge_b.
struct TemporalWedge {
  VertexId center = 0;
  EdgeSeq edge_a = 0;
  EdgeSeq edge_b = 0;
  WedgePattern pattern = WedgePattern::kOutOut;
};

constexpr WedgePattern wedge_pattern(bool first_out, bool second_out) {
  if (first_out) return second_out ? WedgePattern::kOutOut : WedgePattern::kOutIn;
  return second_out ? WedgePattern::kInOut : WedgePattern::kInIn;
}

// How a 3-vertex 3-edge motif splits into a wedge (seed edge + partner,
// sharing `center`) and the closing edge.
struct WedgePlan {
  std::size_t seed = 0;
  std::size_t partner = 0;
  std::size_t closing = 0;
  MotifVertex center = 0;
  WedgePattern pattern = WedgePattern::kOutOut;
};

namespace detail {

inline WedgePlan make_plan(const TemporalMotif& motif, std::size_t seed, std::size_t partner,
                           MotifVertex center) {
  WedgePlan plan;
  plan.seed = seed;
  plan.partner = partner;
  plan.closing = 3 - seed - partner;
  plan.center = center;
  bool seed_out = motif.edge(seed).src == center;
  bool partner_out = motif.edge(partner).src == center;
  plan.pattern = seed < partner ? wedge_pattern(seed_out, partner_out)
                                : wedge_pattern(partner_out, seed_out);
  return plan;
}

inline MotifVertex other_end(const MotifEdge& e, MotifVertex v) { return e.src == v ? e.dst : e.src; }

}  // namespace detail

// Wedge plans for every motif edge. Stars use the motif center and pair the
// seed edge with the earliest edge to the other leaf. Triangles have two
// candidate centers per seed edge (its source or its target); which one is
// used is decided per graph edge by degree.
class WedgePlans {
 public:
  explicit WedgePlans(const TemporalMotif& motif) : shape_(motif.motif_class().tag) {
    if (!motif.wedge_eligible()) {
      throw UnsupportedMotif("wedge sampling needs a 3-vertex 3-edge motif (star or triangle); "
                             "use edge sampling for other motifs");
    }
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& seed = motif.edge(j);
      if (shape_ == MotifShape::kStar33) {
        MotifVertex c = *motif.motif_class().center;
        MotifVertex leaf = detail::other_end(seed, c);
        std::size_t partner = 3;
        for (std::size_t i = 0; i < 3 && partner == 3; ++i) {
          if (i != j && detail::other_end(motif.edge(i), c) != leaf) partner = i;
        }
        plans_[j][0] = plans_[j][1] = detail::make_plan(motif, j, partner, c);
      } else {
        for (int side = 0; side < 2; ++side) {
          MotifVertex c = side == 0 ? seed.src : seed.dst;
          std::size_t partner = 3;
          for (std::size_t i = 0; i < 3; ++i) {
            const auto& me = motif.edge(i);
            if (i != j && (me.src == c || me.dst == c)) partner = i;
          }
          plans_[j][side] = detail::make_plan(motif, j, partner, c);
        }
      }
    }
  }

  MotifShape shape() const { return shape_; }

  // side 0: center is the seed edge's source; side 1: its target.
  const WedgePlan& plan(std::size_t j, int side) const { return plans_[j][side]; }

 private:
  MotifShape shape_;
  std::array<std::array<WedgePlan, 2>, 3> plans_{};
};

struct WedgeStats {
  std::uint64_t wedges_enumerated = 0;
  std::uint64_t wedges_kept = 0;
  std::uint64_t closing_lookups = 0;
};

// Unbiased estimate of eta_j(e) by keeping each wedge through e with
// probability q and counting its closing edges in the pair index.
template <EdgeSource Source>
class WedgeSampler {
 public:
  WedgeSampler(const Source& source, const TemporalMotif& motif, Timestamp delta, double q,
               std::uint64_t seed)
      : source_(&source), motif_(&motif), plans_(motif), delta_(delta), q_(q), rng_(seed) {}

  // Center side for seed edge e: lower total degree, ties to the smaller id.
  int center_side(const TemporalEdge& e) const {
    if (plans_.shape() == MotifShape::kStar33) return 0;
    auto du = source_->degree(e.src);
    auto dv = source_->degree(e.dst);
    return (du < dv || (du == dv && e.src <= e.dst)) ? 0 : 1;
  }

  const WedgePlan& plan_for(const TemporalEdge& e, std::size_t j) const {
    return plans_.plan(j, center_side(e));
  }

  double estimate(const TemporalEdge& e, std::size_t j) {
    const WedgePlan& plan = plan_for(e, j);
    const auto& seed_edge = motif_->edge(j);
    const auto& partner_edge = motif_->edge(plan.partner);
    const auto& closing_edge = motif_->edge(plan.closing);

    const VertexId center = seed_edge.src == plan.center ? e.src : e.dst;
    const bool partner_out = partner_edge.src == plan.center;

    KeyRange partner_range;
    if (plan.partner < j) {
      partner_range = {EdgeKey{sat_sub(e.time, delta_), 0}, e.key()};
    } else {
      partner_range = {e.key().successor(), keys_through(sat_add(e.time, delta_))};
    }

    // The third motif vertex is the partner's far end; the others are e's endpoints.
    auto graph_vertex = [&](MotifVertex mv, VertexId far) -> VertexId {
      if (mv == seed_edge.src) return e.src;
      if (mv == seed_edge.dst) return e.dst;
      return far;
    };

    Count kept_sum = 0;
    auto candidates = partner_out ? source_->out_edges_in(center, partner_range)
                                  : source_->in_edges_in(center, partner_range);
    for (const auto& g : candidates) {
      if (g.nbr == e.src || g.nbr == e.dst) continue;
      ++stats_.wedges_enumerated;
      if (!rng_.coin(q_, CounterRng::Stream::kWedgeSample, e.seq, j, g.seq)) continue;
      ++stats_.wedges_kept;
      kept_sum += closing_count(e.key(), j, g.key(), plan, graph_vertex(closing_edge.src, g.nbr),
                                graph_vertex(closing_edge.dst, g.nbr));
    }
    return static_cast<double>(kept_sum) / q_;
  }

  const WedgeStats& stats() const { return stats_; }

 private:
  // eta(W): closing edges from -> to that complete the wedge (e, g) into a
  // delta-instance.
  Count closing_count(const EdgeKey& ek, std::size_t j, const EdgeKey& g, const WedgePlan& plan,
                      VertexId from, VertexId to) {
    ++stats_.closing_lookups;
    const EdgeKey first = std::min(ek, g);
    const EdgeKey last = std::max(ek, g);
    KeyRange r{EdgeKey{sat_sub(last.time, delta_), 0}, keys_through(sat_add(first.time, delta_))};
    for (auto [idx, key] : {std::pair{j, ek}, std::pair{plan.partner, g}}) {
      if (idx < plan.closing) r.lo = std::max(r.lo, key.successor());
      else r.hi = std::min(r.hi, key);
    }
    return source_->count_pair_edges(from, to, r);
  }

  const Source* source_;
  const TemporalMotif* motif_;
  WedgePlans plans_;
  Timestamp delta_;
  double q_;
  CounterRng rng_;
  WedgeStats stats_;
};

}  // namespace tempomotif
