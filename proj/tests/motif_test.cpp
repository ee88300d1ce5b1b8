#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <memory>
#include <random>
#include <set>

#include "tempomotif/error.hpp"
#include "tempomotif/motif.hpp"
#include "test_support.hpp"

using namespace tempomotif;
using tempomotif::testing::motif_of;

namespace {

// Invariants every emitted order must satisfy; checked independently of the
// construction.
void expect_valid_order(const TemporalMotif& m, const MatchingOrder& o, bool boundary) {
  const std::size_t l = m.num_edges();
  ASSERT_EQ(o.order.size(), l);
  ASSERT_EQ(o.order.front(), o.start);
  auto sorted = o.order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(l);
  std::iota(identity.begin(), identity.end(), 0);
  ASSERT_EQ(sorted, identity);

  std::vector<bool> matched(l, false);
  matched[o.order[0]] = true;
  for (std::size_t i = 1; i < l; ++i) {
    auto eligible = [&](std::size_t e) {
      if (matched[e]) return false;
      for (std::size_t p = 0; p < i; ++p) {
        if (m.edges_adjacent(e, o.order[p])) return true;
      }
      return false;
    };
    ASSERT_TRUE(eligible(o.order[i])) << "order position " << i << " not connected";
    if (boundary) {
      std::size_t lo = 0, hi = l - 1;
      while (matched[lo]) ++lo;
      while (matched[hi]) --hi;
      if (eligible(lo) || eligible(hi)) {
        ASSERT_TRUE(o.order[i] == lo || o.order[i] == hi) << "boundary edge skipped at " << i;
      }
    }
    matched[o.order[i]] = true;
  }
}

}  // namespace

TEST(ParseMotif, Examples) {
  auto star = motif_of("3 3\n0 1\n0 2\n0 1\n");
  EXPECT_EQ(star.motif_class().tag, MotifShape::kStar33);
  EXPECT_EQ(star.motif_class().center, 0u);

  auto tri = motif_of("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(tri.motif_class().tag, MotifShape::kTriangle);

  auto pingpong = motif_of("2 2\n0 1\n1 0\n");
  EXPECT_EQ(pingpong.motif_class().tag, MotifShape::kGeneric);
  EXPECT_EQ(pingpong.num_vertices(), 2u);
  EXPECT_EQ(pingpong.num_edges(), 2u);
}

TEST(ParseMotif, Errors) {
  EXPECT_THROW(motif_of("4 2\n0 1\n2 3\n"), InvalidArgument);   // disconnected
  EXPECT_THROW(motif_of("2 1\n0 2\n"), InvalidArgument);        // id out of range
  EXPECT_THROW(motif_of("2 1\n1 1\n"), InvalidArgument);        // self-loop
  EXPECT_THROW(motif_of("2 2\n0 1\n"), InvalidArgument);        // body shorter than l
  EXPECT_THROW(motif_of("3 1\n0 1\n"), InvalidArgument);        // vertex 2 unused
  EXPECT_THROW(motif_of("2 1\n0 x\n"), InvalidArgument);
  EXPECT_THROW(motif_of(""), InvalidArgument);
}

TEST(ParseMotif, CommentsAndRoundTrip) {
  auto m = motif_of("# ping\n2 2 # header\n0 1\n\n1 0\n");
  EXPECT_EQ(parse_motif(m.to_text()).edges(), m.edges());
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(motif_of("4 4\n0 1\n1 2\n2 3\n3 0\n")).tag, MotifShape::kGeneric);
  EXPECT_EQ(classify(motif_of("3 4\n0 1\n1 2\n2 0\n0 1\n")).tag, MotifShape::kGeneric);

  auto path = classify(motif_of("3 3\n0 1\n1 2\n2 1\n"));
  EXPECT_EQ(path.tag, MotifShape::kStar33);
  EXPECT_EQ(path.center, 1u);

  auto in_star = classify(motif_of("3 3\n1 0\n2 0\n1 0\n"));
  EXPECT_EQ(in_star.tag, MotifShape::kStar33);
  EXPECT_EQ(in_star.center, 0u);
}

TEST(Classify, TriangleIffAllSkeletonDegreesTwo) {
  // Every 3-vertex 3-edge motif over the 6 ordered pairs.
  std::vector<MotifEdge> arcs{{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
  int triangles = 0, stars = 0;
  for (auto a : arcs) {
    for (auto b : arcs) {
      for (auto c : arcs) {
        std::vector<MotifEdge> edges{a, b, c};
        std::unique_ptr<TemporalMotif> m;
        try {
          m = std::make_unique<TemporalMotif>(3, edges);
        } catch (const InvalidArgument&) {
          continue;
        }
        // skeleton degree: number of distinct unordered neighbours
        std::vector<std::set<std::size_t>> nbrs(3);
        for (auto e : edges) {
          nbrs[e.src].insert(e.dst);
          nbrs[e.dst].insert(e.src);
        }
        bool all_two = std::all_of(nbrs.begin(), nbrs.end(), [](const auto& s) { return s.size() == 2; });
        bool distinct_pairs = true;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (auto e : edges) {
          distinct_pairs &= seen.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)}).second;
        }
        bool triangle = all_two && distinct_pairs;
        EXPECT_EQ(m->motif_class().tag == MotifShape::kTriangle, triangle);
        triangles += triangle;
        stars += m->motif_class().tag == MotifShape::kStar33;
      }
    }
  }
  // 216 arc triples; 24 stay on one vertex pair and are rejected. Triangles
  // take one arc from each pair: 3! pair orders * 2^3 directions.
  EXPECT_EQ(triangles, 48);
  EXPECT_EQ(stars, 216 - 24 - 48);
}

TEST(MatchingOrders, TwoEdgePath) {
  auto m = motif_of("3 2\n0 1\n1 2\n");
  auto orders = matching_orders(m);
  ASSERT_EQ(orders.size(), 2u);
  EXPECT_EQ(orders[0].order, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(orders[1].order, (std::vector<std::size_t>{1, 0}));
}

TEST(MatchingOrders, TriangleFromMiddleEdge) {
  auto m = motif_of("3 3\n0 1\n1 2\n2 0\n");
  auto o = m.matching_orders()[1];
  ASSERT_EQ(o.order[0], 1u);
  EXPECT_TRUE(o.order[1] == 0 || o.order[1] == 2);
  for (const auto& order : m.matching_orders()) expect_valid_order(m, order, true);
}

TEST(MatchingOrders, BoundaryTieBreakPrefersRecentNeighbour) {
  // From edge 1 = (1,2), edges 0 = (0,1) and 3 = (2,3) are both eligible
  // boundary edges and both touch edge 1; tie goes to the smaller index.
  // Next, 2 = (0,3) and 3 = (2,3) are both eligible; 2 shares vertex 0 with
  // the most recent edge 0, so it wins.
  auto m = motif_of("4 4\n0 1\n1 2\n0 3\n2 3\n");
  EXPECT_EQ(m.matching_orders()[1].order, (std::vector<std::size_t>{1, 0, 2, 3}));
  // Reordering sigma so the recent-neighbour rule overrides the index tie.
  auto r = motif_of("4 4\n0 1\n1 2\n2 3\n0 3\n");
  EXPECT_EQ(r.matching_orders()[1].order, (std::vector<std::size_t>{1, 0, 3, 2}));
}

TEST(MatchingOrders, NoBoundaryEligibleFallsBackToSmallestAdjacent) {
  // Start at edge 2 = (2,3); boundary edges 0 = (0,1) and 4 = (4,5) are not
  // adjacent, so the smallest adjacent index (1 = (1,2)) goes next.
  auto m = motif_of("6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
  auto o = m.matching_orders()[2].order;
  EXPECT_EQ(o[1], 1u);
  expect_valid_order(m, m.matching_orders()[2], true);
}

TEST(MatchingOrders, RandomMotifsSatisfyInvariants) {
  std::mt19937_64 rng(17);
  int built = 0;
  for (int attempt = 0; attempt < 3000 && built < 400; ++attempt) {
    std::size_t k = 2 + rng() % 4, l = 1 + rng() % 6;
    std::vector<MotifEdge> edges;
    for (std::size_t i = 0; i < l; ++i) {
      MotifVertex a = rng() % k, b = rng() % k;
      if (a == b) b = (a + 1) % k;
      edges.push_back({a, b});
    }
    std::unique_ptr<TemporalMotif> m;
    try {
      m = std::make_unique<TemporalMotif>(k, edges);
    } catch (const InvalidArgument&) {
      continue;
    }
    ++built;
    auto boundary = m->matching_orders();
    auto plain = matching_orders(*m, OrderHeuristics::kPlain);
    ASSERT_EQ(boundary.size(), l);
    for (std::size_t j = 0; j < l; ++j) {
      ASSERT_EQ(boundary[j].start, j);
      expect_valid_order(*m, boundary[j], true);
      expect_valid_order(*m, plain[j], false);
    }
    // deterministic
    auto again = matching_orders(*m);
    for (std::size_t j = 0; j < l; ++j) ASSERT_EQ(again[j].order, boundary[j].order);
  }
  EXPECT_GT(built, 100);
}
