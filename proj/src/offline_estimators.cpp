#include "tempomotif/offline_estimators.hpp"

#include <chrono>

#include "tempomotif/error.hpp"
#include "tempomotif/local_search.hpp"
#include "tempomotif/random.hpp"
#include "tempomotif/wedge.hpp"

namespace tempomotif {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void EstimatorConfig::validate() const {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("edge sampling probability p must be in (0, 1]");
  if (!(q > 0.0 && q <= 1.0)) throw InvalidArgument("wedge sampling probability q must be in (0, 1]");
}

bool edge_sampled(const EstimatorConfig& cfg, EdgeSeq seq) {
  return CounterRng(cfg.seed).coin(cfg.p, CounterRng::Stream::kEdgeSample, seq);
}

Estimate es_estimate(const TemporalGraph& g, const TemporalMotif& motif, const EstimatorConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  LocalCounter<TemporalGraph> counter(g, motif, cfg.delta);
  const std::size_t l = motif.num_edges();

  Estimate out;
  out.config = cfg;
  Count local_sum = 0;
  for (const auto& e : g.edges()) {
    if (!edge_sampled(cfg, e.seq)) continue;
    ++out.sampled_edges;
    for (std::size_t j = 0; j < l; ++j) local_sum += counter.count(e, j);
  }
  out.value = static_cast<double>(local_sum) / (cfg.p * static_cast<double>(l));
  out.expansions = counter.stats().expansions;
  out.elapsed_seconds = seconds_since(start);
  return out;
}

Estimate ews_estimate(const TemporalGraph& g, const TemporalMotif& motif, const EstimatorConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  WedgeSampler<TemporalGraph> sampler(g, motif, cfg.delta, cfg.q, cfg.seed);

  Estimate out;
  out.config = cfg;
  double local_sum = 0.0;
  for (const auto& e : g.edges()) {
    if (!edge_sampled(cfg, e.seq)) continue;
    ++out.sampled_edges;
    for (std::size_t j = 0; j < 3; ++j) local_sum += sampler.estimate(e, j);
  }
  out.value = local_sum / (cfg.p * 3.0);
  out.expansions = sampler.stats().wedges_enumerated;
  out.elapsed_seconds = seconds_since(start);
  return out;
}

double variance_bound(EstimatorKind kind, const EstimatorConfig& cfg, double count) {
  if (count < 0.0) throw InvalidArgument("count must be non-negative");
  double rate = kind == EstimatorKind::kEs ? cfg.p : cfg.p * cfg.q;
  if (!(rate > 0.0 && rate <= 1.0)) throw InvalidArgument("sampling rate must be in (0, 1]");
  return (1.0 - rate) / rate * count * count;
}

double sampling_probability_for(double eps, double gamma) {
  if (!(eps > 0.0 && eps < 1.0 && gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("eps and gamma must be in (0, 1)");
  }
  return 1.0 / (1.0 + gamma * eps * eps);
}

}  // namespace tempomotif
