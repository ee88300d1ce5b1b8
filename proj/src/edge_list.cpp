#include "tempomotif/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view next_field(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_blank(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_blank(rest[j])) ++j;
  auto field = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return field;
}

std::uint64_t parse_uint(std::string_view field, std::size_t line, const char* what) {
  if (!field.empty() && field.front() == '-') {
    throw ParseError(line, std::string("negative ") + what);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::optional<RawEdge> EdgeListReader::next() {
  while (std::getline(*in_, buffer_)) {
    ++line_;
    std::string_view rest(buffer_);
    std::size_t i = 0;
    while (i < rest.size() && is_blank(rest[i])) ++i;
    if (i == rest.size() || rest[i] == '#' || rest[i] == '%') continue;

    auto src = next_field(rest);
    auto dst = next_field(rest);
    auto time = next_field(rest);
    if (time.empty()) throw ParseError(line_, "expected 'src dst time'");
    if (!next_field(rest).empty()) throw ParseError(line_, "trailing fields after 'src dst time'");

    RawEdge e;
    e.src = parse_uint(src, line_, "source id");
    e.dst = parse_uint(dst, line_, "target id");
    e.time = parse_uint(time, line_, "timestamp");
    e.line = line_;
    return e;
  }
  return std::nullopt;
}

TemporalGraph build_graph(const std::vector<RawEdge>& records, const LoaderOptions& options) {
  std::vector<TemporalEdge> edges;
  edges.reserve(records.size());
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::vector<std::uint64_t> external;
  std::uint64_t max_id = 0;

  auto map_id = [&](std::uint64_t id) -> VertexId {
    if (options.mapping == VertexMapping::kIdentity) {
      max_id = std::max(max_id, id);
      return id;
    }
    auto [it, inserted] = dense.try_emplace(id, external.size());
    if (inserted) external.push_back(id);
    return it->second;
  };

  for (const auto& r : records) {
    if (r.src == r.dst) {
      if (options.self_loops == SelfLoopPolicy::kSkip) continue;
      throw ParseError(r.line, "self-loop on vertex " + std::to_string(r.src));
    }
    TemporalEdge e;
    e.src = map_id(r.src);
    e.dst = map_id(r.dst);
    e.time = r.time;
    e.seq = edges.size();
    edges.push_back(e);
  }

  if (options.mapping == VertexMapping::kIdentity) {
    std::size_t n = edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
    return TemporalGraph::build(n, std::move(edges));
  }
  std::size_t n = external.size();
  return TemporalGraph::build(n, std::move(edges), std::move(external));
}

TemporalGraph read_edge_list(std::istream& in, const LoaderOptions& options) {
  EdgeListReader reader(in);
  std::vector<RawEdge> records;
  while (auto e = reader.next()) records.push_back(*e);
  return build_graph(records, options);
}

TemporalGraph load_edge_list(const std::filesystem::path& path, const LoaderOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list '" + path.string() + "'");
  return read_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const TemporalGraph& g) {
  std::vector<const TemporalEdge*> by_seq(g.num_edges());
  std::size_t i = 0;
  for (const auto& e : g.edges()) by_seq[i++] = &e;
  std::sort(by_seq.begin(), by_seq.end(),
            [](const TemporalEdge* a, const TemporalEdge* b) { return a->seq < b->seq; });
  for (const auto* e : by_seq) {
    out << g.external_id(e->src) << ' ' << g.external_id(e->dst) << ' ' << e->time << '\n';
  }
}

}  // namespace tempomotif
