#include "tempomotif/stream.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

template <class It, class Key, class Proj>
std::ranges::subrange<It> slice(It first, It last, const KeyRange& range, Proj key_of) {
  if (range.empty()) return {last, last};
  auto lo = std::lower_bound(first, last, range.lo,
                             [&](const auto& x, const Key& k) { return key_of(x) < k; });
  auto hi = std::lower_bound(lo, last, range.hi,
                             [&](const auto& x, const Key& k) { return key_of(x) < k; });
  return {lo, hi};
}

const std::deque<AdjEntry> kNoEntries;
const std::deque<EdgeKey> kNoKeys;

}  // namespace

void ActiveWindow::push(const TemporalEdge& e) {
  if (e.time >= delta_) {
    const Timestamp cutoff = e.time - delta_;
    while (!edges_.empty() && edges_.front().time < cutoff) evict_front();
  }
  edges_.push_back(e);
  vertices_[e.src].out.push_back({e.time, e.seq, e.dst});
  vertices_[e.dst].in.push_back({e.time, e.seq, e.src});
  pairs_[{e.src, e.dst}].push_back(e.key());
}

void ActiveWindow::evict_front() {
  const TemporalEdge old = edges_.front();
  edges_.pop_front();

  auto src = vertices_.find(old.src);
  src->second.out.pop_front();
  if (src->second.out.empty() && src->second.in.empty()) vertices_.erase(src);

  auto dst = vertices_.find(old.dst);
  dst->second.in.pop_front();
  if (dst->second.out.empty() && dst->second.in.empty()) vertices_.erase(dst);

  auto pair = pairs_.find({old.src, old.dst});
  pair->second.pop_front();
  if (pair->second.empty()) pairs_.erase(pair);
}

ActiveWindow::AdjRange ActiveWindow::out_edges_in(VertexId v, const KeyRange& range) const {
  auto it = vertices_.find(v);
  const auto& list = it == vertices_.end() ? kNoEntries : it->second.out;
  return slice<std::deque<AdjEntry>::const_iterator, EdgeKey>(
      list.begin(), list.end(), range, [](const AdjEntry& a) { return a.key(); });
}

ActiveWindow::AdjRange ActiveWindow::in_edges_in(VertexId v, const KeyRange& range) const {
  auto it = vertices_.find(v);
  const auto& list = it == vertices_.end() ? kNoEntries : it->second.in;
  return slice<std::deque<AdjEntry>::const_iterator, EdgeKey>(
      list.begin(), list.end(), range, [](const AdjEntry& a) { return a.key(); });
}

ActiveWindow::KeyRangeView ActiveWindow::pair_edges_in(VertexId u, VertexId v,
                                                       const KeyRange& range) const {
  auto it = pairs_.find({u, v});
  const auto& list = it == pairs_.end() ? kNoKeys : it->second;
  return slice<std::deque<EdgeKey>::const_iterator, EdgeKey>(
      list.begin(), list.end(), range, [](const EdgeKey& k) { return k; });
}

std::size_t ActiveWindow::degree(VertexId v) const {
  auto it = vertices_.find(v);
  return it == vertices_.end() ? 0 : it->second.out.size() + it->second.in.size();
}

StreamCounter::StreamCounter(const TemporalMotif& motif, const StreamConfig& cfg)
    : motif_(&motif),
      cfg_(cfg),
      window_(cfg.delta),
      rng_(cfg.seed),
      backtracker_(window_, motif, cfg.delta) {
  if (cfg.reservoir == 0) throw InvalidArgument("reservoir size r must be at least 1");
  if (!(cfg.q > 0.0 && cfg.q <= 1.0)) {
    throw InvalidArgument("wedge sampling probability q must be in (0, 1]");
  }
  if (cfg.mode == StreamMode::kSews) {
    wedges_ = std::make_unique<WedgeSampler<ActiveWindow>>(window_, motif, cfg.delta, cfg.q, cfg.seed);
  }
  reservoir_.reserve(cfg.reservoir);
}

double StreamCounter::local_count(const TemporalEdge& e) {
  if (cfg_.mode == StreamMode::kSes) {
    auto before = backtracker_.stats().expansions;
    auto c = backtracker_.count_last(e);
    stats_.expansions += backtracker_.stats().expansions - before;
    return static_cast<double>(c);
  }
  auto before = wedges_->stats().wedges_enumerated;
  double v = wedges_->estimate(e, motif_->num_edges() - 1);
  stats_.expansions += wedges_->stats().wedges_enumerated - before;
  return v;
}

StreamEstimate StreamCounter::push(VertexId src, VertexId dst, Timestamp t) {
  if (src == dst) {
    if (cfg_.self_loops == SelfLoopPolicy::kSkip) {
      ++stats_.skipped_self_loops;
      return estimate();
    }
    throw DataError("self-loop on vertex " + std::to_string(src) + " in stream");
  }
  if (last_time_ && t < *last_time_) {
    if (cfg_.lenient_order) {
      ++stats_.dropped_out_of_order;
      return estimate();
    }
    throw OrderingError("stream edge at time " + std::to_string(t) + " arrives after time " +
                        std::to_string(*last_time_));
  }
  last_time_ = t;

  const TemporalEdge e{src, dst, t, edges_seen_};
  ++edges_seen_;
  window_.push(e);
  stats_.peak_window = std::max(stats_.peak_window, window_.size());
  stats_.peak_tracked_vertices = std::max(stats_.peak_tracked_vertices, window_.tracked_vertices());
  stats_.peak_tracked_pairs = std::max(stats_.peak_tracked_pairs, window_.tracked_pairs());

  if (reservoir_.size() < cfg_.reservoir) {
    double local = local_count(e);
    reservoir_.push_back({e, local});
    counter_ += local;
    ++stats_.sampled;
  } else {
    const double admit = static_cast<double>(cfg_.reservoir) / static_cast<double>(edges_seen_);
    if (rng_.coin(admit, CounterRng::Stream::kReservoirAdmit, e.seq)) {
      auto victim = rng_.below(reservoir_.size(), CounterRng::Stream::kReservoirVictim, e.seq);
      double local = local_count(e);
      counter_ += local - reservoir_[victim].local;
      reservoir_[victim] = {e, local};
      ++stats_.sampled;
      ++stats_.evicted;
    }
  }
  assert(std::abs(counter_ - recomputed_counter()) <= 1e-6 * std::max(1.0, std::abs(counter_)));
  return estimate();
}

StreamEstimate StreamCounter::estimate() const {
  StreamEstimate out;
  out.edges_seen = edges_seen_;
  out.timestamp = last_time_.value_or(0);
  if (edges_seen_ <= cfg_.reservoir) {
    out.value = counter_;
  } else {
    out.value = static_cast<double>(edges_seen_) / static_cast<double>(cfg_.reservoir) * counter_;
  }
  return out;
}

double StreamCounter::recomputed_counter() const {
  double sum = 0.0;
  for (const auto& r : reservoir_) sum += r.local;
  return sum;
}

std::vector<EdgeSeq> StreamCounter::resident_edges() const {
  std::vector<EdgeSeq> out;
  out.reserve(reservoir_.size());
  for (const auto& r : reservoir_) out.push_back(r.edge.seq);
  return out;
}

double stream_variance_bound(StreamMode mode, std::uint64_t edges_seen, std::size_t reservoir,
                             double q, double count) {
  if (reservoir == 0) throw InvalidArgument("reservoir size r must be at least 1");
  const double m = static_cast<double>(edges_seen);
  const double r = static_cast<double>(reservoir);
  if (mode == StreamMode::kSes) {
    if (m <= r) return 0.0;
    return (m - r) / r * count * count;
  }
  if (!(q > 0.0 && q <= 1.0)) throw InvalidArgument("q must be in (0, 1]");
  return std::max(0.0, (m - r * q) / (r * q)) * count * count;
}

}  // namespace tempomotif
