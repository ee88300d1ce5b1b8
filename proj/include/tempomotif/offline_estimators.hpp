#pragma once

#include <cstddef>
#include <cstdint>

#include "tempomotif/motif.hpp"
#include "tempomotif/temporal_graph.hpp"

namespace tempomotif {

struct EstimatorConfig {
  Timestamp delta = 0;
  double p = 1.0;  // edge sampling probability
  double q = 1.0;  // wedge sampling probability (EWS only)
  std::uint64_t seed = 0;

  // Throws InvalidArgument unless 0 < p <= 1 and 0 < q <= 1.
  void validate() const;
};

struct Estimate {
  double value = 0.0;
  std::size_t sampled_edges = 0;
  EstimatorConfig config;
  double elapsed_seconds = 0.0;
  std::uint64_t expansions = 0;  // backtracking candidates or wedges examined
};

// Whether edge `seq` is in the edge sample for this config. Depends only on
// (seed, seq), so ES and EWS with the same seed sample the same edges.
bool edge_sampled(const EstimatorConfig& cfg, EdgeSeq seq);

// Edge sampling: sample each edge with probability p, count all local
// instances of every sampled edge exactly, scale by 1 / (p * l).
Estimate es_estimate(const TemporalGraph& g, const TemporalMotif& motif, const EstimatorConfig& cfg);

// Edge-wedge sampling for star33 / triangle motifs: local counts of sampled
// edges are themselves estimated by sampling wedges with probability q.
// Throws UnsupportedMotif for other motifs.
Estimate ews_estimate(const TemporalGraph& g, const TemporalMotif& motif, const EstimatorConfig& cfg);

enum class EstimatorKind { kEs, kEws };

// Variance ceilings: (1-p)/p * C^2 for ES, (1-pq)/(pq) * C^2 for EWS.
double variance_bound(EstimatorKind kind, const EstimatorConfig& cfg, double count);

// Sampling probability (p for ES, p*q for EWS) under which
// Pr[|estimate - C| >= eps*C] <= gamma by Chebyshev: 1 / (1 + gamma*eps^2).
double sampling_probability_for(double eps, double gamma);

}  // namespace tempomotif
