#pragma once

#include <cstdint>
#include <functional>
#include <limits>

namespace tempomotif {

using VertexId = std::uint64_t;
using Timestamp = std::uint64_t;
using EdgeSeq = std::uint64_t;
using Count = std::uint64_t;

inline constexpr Timestamp kMaxTimestamp = std::numeric_limits<Timestamp>::max();

// Total order on edges: timestamp first, ingestion index breaks ties.
struct EdgeKey {
  Timestamp time = 0;
  EdgeSeq seq = 0;

  friend constexpr auto operator<=>(const EdgeKey&, const EdgeKey&) = default;

  // Smallest key strictly greater than this one.
  constexpr EdgeKey successor() const {
    if (seq == std::numeric_limits<EdgeSeq>::max()) return {time + 1, 0};
    return {time, seq + 1};
  }
};

inline constexpr EdgeKey kMinKey{0, 0};
inline constexpr EdgeKey kMaxKey{kMaxTimestamp, std::numeric_limits<EdgeSeq>::max()};

// Half-open interval [lo, hi) over EdgeKey order.
struct KeyRange {
  EdgeKey lo = kMinKey;
  EdgeKey hi = kMaxKey;

  constexpr bool empty() const { return !(lo < hi); }
  constexpr bool contains(const EdgeKey& k) const { return lo <= k && k < hi; }
};

struct TemporalEdge {
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp time = 0;
  EdgeSeq seq = 0;

  constexpr EdgeKey key() const { return {time, seq}; }
  friend constexpr bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// One adjacency entry: the edge key plus the vertex at the other end.
struct AdjEntry {
  Timestamp time = 0;
  EdgeSeq seq = 0;
  VertexId nbr = 0;

  constexpr EdgeKey key() const { return {time, seq}; }
};

struct PairKey {
  VertexId src = 0;
  VertexId dst = 0;
  friend constexpr bool operator==(const PairKey&, const PairKey&) = default;
};

constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return static_cast<std::size_t>(mix64(k.src * 0x9e3779b97f4a7c15ULL ^ mix64(k.dst)));
  }
};

// Timestamp arithmetic saturating at the ends of the range; needed for
// effectively unbounded deltas.
constexpr Timestamp sat_add(Timestamp a, Timestamp b) {
  return a > kMaxTimestamp - b ? kMaxTimestamp : a + b;
}
constexpr Timestamp sat_sub(Timestamp a, Timestamp b) { return a < b ? 0 : a - b; }

// Keys whose timestamp is <= t.
constexpr EdgeKey keys_through(Timestamp t) {
  return t == kMaxTimestamp ? kMaxKey : EdgeKey{t + 1, 0};
}

}  // namespace tempomotif
