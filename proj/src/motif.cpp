#include "tempomotif/motif.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

bool share_vertex(const MotifEdge& a, const MotifEdge& b) {
  return a.src == b.src || a.src == b.dst || a.dst == b.src || a.dst == b.dst;
}

bool skeleton_connected(std::size_t k, const std::vector<MotifEdge>& edges) {
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.src)] = find(e.dst);
  for (std::size_t v = 1; v < k; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(MotifShape shape) {
  switch (shape) {
    case MotifShape::kStar33: return "star33";
    case MotifShape::kTriangle: return "triangle";
    case MotifShape::kGeneric: return "generic";
  }
  return "generic";
}

TemporalMotif::TemporalMotif(std::size_t num_vertices, std::vector<MotifEdge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (edges_.empty()) throw InvalidArgument("motif must have at least one edge");
  if (num_vertices_ < 2) throw InvalidArgument("motif must have at least two vertices");
  std::vector<bool> used(num_vertices_, false);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.src >= num_vertices_ || e.dst >= num_vertices_) {
      throw InvalidArgument("motif edge " + std::to_string(i) + " has a vertex id out of range");
    }
    if (e.src == e.dst) {
      throw InvalidArgument("motif edge " + std::to_string(i) + " is a self-loop");
    }
    used[e.src] = used[e.dst] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw InvalidArgument("every motif vertex must appear in an edge");
  }
  if (!skeleton_connected(num_vertices_, edges_)) {
    throw InvalidArgument("motif skeleton is disconnected");
  }
  class_ = classify(*this);
  orders_ = tempomotif::matching_orders(*this);
}

bool TemporalMotif::edges_adjacent(std::size_t a, std::size_t b) const {
  return share_vertex(edges_[a], edges_[b]);
}

std::string TemporalMotif::to_text() const {
  std::ostringstream out;
  out << num_vertices_ << ' ' << edges_.size() << '\n';
  for (const auto& e : edges_) out << e.src << ' ' << e.dst << '\n';
  return out.str();
}

TemporalMotif parse_motif(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> row;
    long long x = 0;
    while (fields >> x) row.push_back(x);
    if (!fields.eof()) throw InvalidArgument("motif: non-numeric token in '" + line + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty() || rows[0].size() != 2) throw InvalidArgument("motif: expected header 'k l'");
  if (rows[0][0] < 0 || rows[0][1] < 0) throw InvalidArgument("motif: negative k or l");
  auto k = static_cast<std::size_t>(rows[0][0]);
  auto l = static_cast<std::size_t>(rows[0][1]);
  if (rows.size() - 1 != l) {
    throw InvalidArgument("motif: header declares " + std::to_string(l) + " edges, body has " +
                          std::to_string(rows.size() - 1));
  }
  std::vector<MotifEdge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw InvalidArgument("motif: edge line must be 'u v'");
    if (rows[i][0] < 0 || rows[i][1] < 0) {
      throw InvalidArgument("motif edge " + std::to_string(i - 1) + " has a vertex id out of range");
    }
    edges.push_back({static_cast<MotifVertex>(rows[i][0]), static_cast<MotifVertex>(rows[i][1])});
  }
  return TemporalMotif(k, std::move(edges));
}

TemporalMotif load_motif(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open motif '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_motif(buf.str());
}

MotifClass classify(const TemporalMotif& motif) {
  MotifClass out;
  if (motif.num_vertices() != 3 || motif.num_edges() != 3) return out;
  const auto& edges = motif.edges();

  // Closed iff the three edges cover all three unordered pairs once.
  auto pair_id = [](const MotifEdge& e) {
    auto a = std::min(e.src, e.dst), b = std::max(e.src, e.dst);
    return a * 3 + b;
  };
  std::vector<std::size_t> pairs;
  for (const auto& e : edges) pairs.push_back(pair_id(e));
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end()) {
    out.tag = MotifShape::kTriangle;
    return out;
  }
  for (MotifVertex c = 0; c < 3; ++c) {
    bool all = std::all_of(edges.begin(), edges.end(),
                           [c](const MotifEdge& e) { return e.src == c || e.dst == c; });
    if (all) {
      out.tag = MotifShape::kStar33;
      out.center = c;
      return out;
    }
  }
  return out;
}

MatchingOrder matching_order(const TemporalMotif& motif, std::size_t start,
                             OrderHeuristics heuristics) {
  const std::size_t l = motif.num_edges();
  if (start >= l) throw InvalidArgument("matching order start out of range");
  MatchingOrder result;
  result.start = start;
  result.order.push_back(start);
  std::vector<bool> matched(l, false);
  matched[start] = true;

  while (result.order.size() < l) {
    auto eligible = [&](std::size_t i) {
      if (matched[i]) return false;
      return std::any_of(result.order.begin(), result.order.end(),
                         [&](std::size_t m) { return motif.edges_adjacent(i, m); });
    };
    std::size_t first_unmatched = 0;
    while (matched[first_unmatched]) ++first_unmatched;
    std::size_t last_unmatched = l - 1;
    while (matched[last_unmatched]) --last_unmatched;

    std::optional<std::size_t> pick;
    if (heuristics == OrderHeuristics::kBoundaryFirst) {
      bool lo_ok = eligible(first_unmatched);
      bool hi_ok = last_unmatched != first_unmatched && eligible(last_unmatched);
      if (lo_ok && hi_ok) {
        std::size_t recent = result.order.back();
        bool lo_near = motif.edges_adjacent(first_unmatched, recent);
        bool hi_near = motif.edges_adjacent(last_unmatched, recent);
        pick = (hi_near && !lo_near) ? last_unmatched : first_unmatched;
      } else if (lo_ok) {
        pick = first_unmatched;
      } else if (hi_ok) {
        pick = last_unmatched;
      }
    }
    if (!pick) {
      for (std::size_t i = 0; i < l; ++i) {
        if (eligible(i)) {
          pick = i;
          break;
        }
      }
    }
    // Connectivity of the skeleton guarantees some unmatched edge is eligible.
    matched[*pick] = true;
    result.order.push_back(*pick);
  }
  return result;
}

std::vector<MatchingOrder> matching_orders(const TemporalMotif& motif, OrderHeuristics heuristics) {
  std::vector<MatchingOrder> orders;
  orders.reserve(motif.num_edges());
  for (std::size_t j = 0; j < motif.num_edges(); ++j) {
    orders.push_back(matching_order(motif, j, heuristics));
  }
  return orders;
}

}  // namespace tempomotif
