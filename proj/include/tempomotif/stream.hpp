#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <ranges>
#include <unordered_map>
#include <vector>

#include "tempomotif/edge_list.hpp"
#include "tempomotif/local_search.hpp"
#include "tempomotif/motif.hpp"
#include "tempomotif/wedge.hpp"

namespace tempomotif {

// Edges of a chronological stream whose timestamps lie in [t_now - delta,
// t_now], with per-vertex and per-pair indexes. Appends go to the back and
// evictions come off the front of every list, so all lists stay sorted.
class ActiveWindow {
 public:
  using AdjRange = std::ranges::subrange<std::deque<AdjEntry>::const_iterator>;
  using KeyRangeView = std::ranges::subrange<std::deque<EdgeKey>::const_iterator>;

  explicit ActiveWindow(Timestamp delta) : delta_(delta) {}

  // Appends e (which must not be older than the newest edge) after evicting
  // edges with time < e.time - delta.
  void push(const TemporalEdge& e);

  std::size_t size() const { return edges_.size(); }
  const std::deque<TemporalEdge>& edges() const { return edges_; }
  std::size_t tracked_vertices() const { return vertices_.size(); }
  std::size_t tracked_pairs() const { return pairs_.size(); }
  // Adjacency + pair index entries currently held.
  std::size_t index_entries() const { return 3 * edges_.size(); }

  AdjRange out_edges_in(VertexId v, const KeyRange& range) const;
  AdjRange in_edges_in(VertexId v, const KeyRange& range) const;
  KeyRangeView pair_edges_in(VertexId u, VertexId v, const KeyRange& range) const;
  Count count_pair_edges(VertexId u, VertexId v, const KeyRange& range) const {
    auto r = pair_edges_in(u, v, range);
    return static_cast<Count>(r.size());
  }
  // In + out edges of v inside the window.
  std::size_t degree(VertexId v) const;

 private:
  struct VertexLists {
    std::deque<AdjEntry> out;
    std::deque<AdjEntry> in;
  };

  void evict_front();

  Timestamp delta_;
  std::deque<TemporalEdge> edges_;
  std::unordered_map<VertexId, VertexLists> vertices_;
  std::unordered_map<PairKey, std::deque<EdgeKey>, PairKeyHash> pairs_;
};

enum class StreamMode { kSes, kSews };

struct StreamConfig {
  Timestamp delta = 0;
  std::size_t reservoir = 1;  // r
  double q = 1.0;             // wedge sampling probability (SEWS only)
  std::uint64_t seed = 0;
  StreamMode mode = StreamMode::kSes;
  // Drop out-of-order edges instead of throwing OrderingError.
  bool lenient_order = false;
  SelfLoopPolicy self_loops = SelfLoopPolicy::kReject;
};

struct StreamEstimate {
  double value = 0.0;
  std::uint64_t edges_seen = 0;  // m_t
  Timestamp timestamp = 0;
};

struct StreamStats {
  std::uint64_t sampled = 0;  // edges admitted to the reservoir
  std::uint64_t evicted = 0;  // residents replaced
  std::uint64_t dropped_out_of_order = 0;
  std::uint64_t skipped_self_loops = 0;
  std::uint64_t expansions = 0;  // backtracking candidates or wedges examined
  std::size_t peak_window = 0;
  std::size_t peak_tracked_vertices = 0;
  std::size_t peak_tracked_pairs = 0;
};

// Single-pass reservoir-sampling estimator of the number of delta-instances
// seen so far. A newly sampled edge stores the number (SES) or an estimate
// (SEWS) of instances in which it is the last edge, computed once against
// the current window; the stored value is subtracted again if the edge is
// later replaced. Not thread-safe.
class StreamCounter {
 public:
  // Throws InvalidArgument for r == 0 or q outside (0, 1], UnsupportedMotif
  // for SEWS with a motif that is neither a star33 nor a triangle.
  StreamCounter(const TemporalMotif& motif, const StreamConfig& cfg);
  StreamCounter(const StreamCounter&) = delete;
  StreamCounter& operator=(const StreamCounter&) = delete;

  // Processes the next stream edge. Throws OrderingError if t goes
  // backwards (unless lenient) and DataError on a rejected self-loop.
  StreamEstimate push(VertexId src, VertexId dst, Timestamp t);

  StreamEstimate estimate() const;

  // Sum of stored local counts, maintained incrementally.
  double counter() const { return counter_; }
  // Same sum recomputed from the reservoir.
  double recomputed_counter() const;

  std::uint64_t edges_seen() const { return edges_seen_; }
  std::size_t reservoir_size() const { return reservoir_.size(); }
  const ActiveWindow& window() const { return window_; }
  const StreamStats& stats() const { return stats_; }
  const StreamConfig& config() const { return cfg_; }

  // Current residents by ingestion index.
  std::vector<EdgeSeq> resident_edges() const;

 private:
  struct Resident {
    TemporalEdge edge;
    double local = 0.0;
  };

  double local_count(const TemporalEdge& e);

  const TemporalMotif* motif_;
  StreamConfig cfg_;
  ActiveWindow window_;
  std::vector<Resident> reservoir_;
  double counter_ = 0.0;
  std::uint64_t edges_seen_ = 0;
  std::optional<Timestamp> last_time_;
  StreamStats stats_;
  CounterRng rng_;
  LocalCounter<ActiveWindow> backtracker_;
  std::unique_ptr<WedgeSampler<ActiveWindow>> wedges_;
};

// Variance ceilings at m_t edges: (m_t - r)/r * C^2 for SES and
// (m_t - rq)/(rq) * C^2 for SEWS; zero when m_t <= r for SES.
double stream_variance_bound(StreamMode mode, std::uint64_t edges_seen, std::size_t reservoir,
                             double q, double count);

}  // namespace tempomotif
