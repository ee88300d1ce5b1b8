#include "tempomotif/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "tempomotif/backtracking.hpp"
#include "tempomotif/edge_list.hpp"
#include "tempomotif/error.hpp"
#include "tempomotif/motif.hpp"
#include "tempomotif/offline_estimators.hpp"
#include "tempomotif/stream.hpp"

namespace tempomotif {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::pair<Algorithm, std::string_view> kAlgorithmNames[] = {
    {Algorithm::kExact, "exact"}, {Algorithm::kNaive, "naive"}, {Algorithm::kEs, "es"},
    {Algorithm::kEws, "ews"},     {Algorithm::kSes, "ses"},     {Algorithm::kSews, "sews"},
};

TemporalMotif read_motif(const std::filesystem::path& path) {
  try {
    return load_motif(path);
  } catch (const InvalidArgument& e) {
    throw DataError("motif '" + path.string() + "': " + e.what());
  }
}

TemporalGraph read_graph(const std::filesystem::path& path) {
  try {
    return load_edge_list(path);
  } catch (const ParseError& e) {
    throw DataError("edge list '" + path.string() + "': " + e.what());
  }
}

// One pass over the file without building the graph.
DatasetStats scan_stats(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list '" + path.string() + "'");
  EdgeListReader reader(in);
  DatasetStats s;
  std::unordered_set<std::uint64_t> vertices;
  std::unordered_set<PairKey, PairKeyHash> pairs;
  try {
    while (auto rec = reader.next()) {
      if (s.m == 0) s.min_time = s.max_time = rec->time;
      s.min_time = std::min(s.min_time, rec->time);
      s.max_time = std::max(s.max_time, rec->time);
      ++s.m;
      vertices.insert(rec->src);
      vertices.insert(rec->dst);
      pairs.insert({rec->src, rec->dst});
    }
  } catch (const ParseError& e) {
    throw DataError("edge list '" + path.string() + "': " + e.what());
  }
  s.n = vertices.size();
  s.static_edges = pairs.size();
  return s;
}

DatasetStats stats_of(const TemporalGraph& g) {
  auto gs = g.stats();
  return {gs.n, gs.m, gs.static_edges, gs.min_time, gs.max_time};
}

TrialResult run_stream_trial(const RunSpec& spec, const TemporalMotif& motif, std::uint64_t seed) {
  StreamConfig cfg;
  cfg.delta = *spec.delta;
  cfg.reservoir = spec.r;
  cfg.q = spec.q;
  cfg.seed = seed;
  cfg.mode = spec.algorithm == Algorithm::kSes ? StreamMode::kSes : StreamMode::kSews;
  cfg.lenient_order = spec.lenient_order;

  std::ifstream in(spec.graph);
  if (!in) throw DataError("cannot open edge list '" + spec.graph.string() + "'");
  EdgeListReader reader(in);

  TrialResult out;
  out.seed = seed;
  auto start = Clock::now();
  StreamCounter counter(motif, cfg);
  StreamEstimate last;
  try {
    while (auto rec = reader.next()) {
      try {
        last = counter.push(rec->src, rec->dst, rec->time);
      } catch (const DataError& e) {
        throw DataError("edge list '" + spec.graph.string() + "' line " + std::to_string(rec->line) +
                        ": " + e.what());
      }
      if (spec.report_every > 0 && last.edges_seen > 0 && last.edges_seen % spec.report_every == 0 &&
          (out.trajectory.empty() || out.trajectory.back().edges_seen != last.edges_seen)) {
        out.trajectory.push_back({last.edges_seen, last.timestamp, last.value});
      }
    }
  } catch (const ParseError& e) {
    throw DataError("edge list '" + spec.graph.string() + "': " + e.what());
  }
  last = counter.estimate();
  if (out.trajectory.empty() || out.trajectory.back().edges_seen != last.edges_seen) {
    out.trajectory.push_back({last.edges_seen, last.timestamp, last.value});
  }
  out.seconds = seconds_since(start);
  out.value = last.value;
  out.sampled_edges = counter.stats().sampled;
  out.expansions = counter.stats().expansions;
  return out;
}

TrialResult run_offline_trial(const RunSpec& spec, const TemporalGraph& g, const TemporalMotif& motif,
                              std::uint64_t seed) {
  TrialResult out;
  out.seed = seed;
  auto start = Clock::now();
  switch (spec.algorithm) {
    case Algorithm::kExact: {
      SearchStats stats;
      out.value = static_cast<double>(exact_count(g, motif, *spec.delta, &stats));
      out.expansions = stats.expansions;
      out.sampled_edges = g.num_edges();
      break;
    }
    case Algorithm::kNaive: {
      NaiveLimits limits;
      limits.max_edges = std::max<std::size_t>(limits.max_edges, g.num_edges());
      out.value = static_cast<double>(naive_enumerate(g, motif, *spec.delta, limits).size());
      out.sampled_edges = g.num_edges();
      break;
    }
    case Algorithm::kEs:
    case Algorithm::kEws: {
      EstimatorConfig cfg{*spec.delta, spec.p, spec.q, seed};
      auto est = spec.algorithm == Algorithm::kEs ? es_estimate(g, motif, cfg) : ews_estimate(g, motif, cfg);
      out.value = est.value;
      out.sampled_edges = est.sampled_edges;
      out.expansions = est.expansions;
      break;
    }
    default:
      throw InvalidArgument("not an offline algorithm");
  }
  out.seconds = seconds_since(start);
  return out;
}

template <class F>
std::vector<TrialResult> run_trials(std::size_t count, std::uint64_t seed, F&& trial) {
  std::vector<TrialResult> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        results[i] = trial(seed + i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const std::size_t threads = worker_threads(count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Json trial_json(const TrialResult& t) {
  Json j;
  j["seed"] = t.seed;
  j["value"] = t.value;
  j["seconds"] = t.seconds;
  j["sampled_edges"] = t.sampled_edges;
  j["expansions"] = t.expansions;
  j["relative_error"] = optional_json(t.relative_error);
  Json traj = Json::array();
  for (const auto& p : t.trajectory) traj.push_back({p.edges_seen, p.timestamp, p.value});
  j["trajectory"] = std::move(traj);
  return j;
}

TrialResult trial_from(const Json& j) {
  TrialResult t;
  t.seed = j.at("seed").get<std::uint64_t>();
  t.value = j.at("value").get<double>();
  t.seconds = j.at("seconds").get<double>();
  t.sampled_edges = j.at("sampled_edges").get<std::uint64_t>();
  t.expansions = j.at("expansions").get<std::uint64_t>();
  t.relative_error = optional_from<double>(j.at("relative_error"));
  for (const auto& p : j.at("trajectory")) {
    t.trajectory.push_back({p.at(0).get<std::uint64_t>(), p.at(1).get<Timestamp>(), p.at(2).get<double>()});
  }
  return t;
}

Json report_json(const EstimateReport& r) {
  Json j;
  j["algorithm"] = r.algorithm;
  j["dataset"] = r.dataset;
  j["motif"] = r.motif;
  j["motif_text"] = r.motif_text;
  j["delta"] = r.delta;
  j["p"] = r.p;
  j["q"] = r.q;
  j["r"] = r.r;
  j["seed"] = r.seed;
  j["report_every"] = r.report_every;
  j["stats"] = {{"n", r.stats.n},
                {"m", r.stats.m},
                {"static_edges", r.stats.static_edges},
                {"min_time", r.stats.min_time},
                {"max_time", r.stats.max_time},
                {"time_span", r.stats.time_span()}};
  j["ground_truth"] = optional_json(r.ground_truth);
  j["ground_truth_seconds"] = r.ground_truth_seconds;
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  j["mean_relative_error"] = optional_json(r.mean_relative_error);
  j["mean_seconds"] = r.mean_seconds;
  Json trials = Json::array();
  for (const auto& t : r.trials) trials.push_back(trial_json(t));
  j["trials"] = std::move(trials);
  return j;
}

EstimateReport report_from(const Json& j) {
  EstimateReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.dataset = j.at("dataset").get<std::string>();
  r.motif = j.at("motif").get<std::string>();
  r.motif_text = j.at("motif_text").get<std::string>();
  r.delta = j.at("delta").get<Timestamp>();
  r.p = j.at("p").get<double>();
  r.q = j.at("q").get<double>();
  r.r = j.at("r").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.report_every = j.at("report_every").get<std::size_t>();
  const auto& s = j.at("stats");
  r.stats.n = s.at("n").get<std::size_t>();
  r.stats.m = s.at("m").get<std::size_t>();
  r.stats.static_edges = s.at("static_edges").get<std::size_t>();
  r.stats.min_time = s.at("min_time").get<Timestamp>();
  r.stats.max_time = s.at("max_time").get<Timestamp>();
  r.ground_truth = optional_from<Count>(j.at("ground_truth"));
  r.ground_truth_seconds = j.at("ground_truth_seconds").get<double>();
  r.mean = j.at("mean").get<double>();
  r.variance = j.at("variance").get<double>();
  r.mean_relative_error = optional_from<double>(j.at("mean_relative_error"));
  r.mean_seconds = j.at("mean_seconds").get<double>();
  for (const auto& t : j.at("trials")) r.trials.push_back(trial_from(t));
  return r;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
std::string csv_optional(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return csv_number(*v);
  } else {
    return std::to_string(*v);
  }
}

// Dataset and motif names come from file stems, but quote anyway in case
// a name contains a comma.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  for (auto [a, n] : kAlgorithmNames) {
    if (n == name) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm algorithm) {
  for (auto [a, n] : kAlgorithmNames) {
    if (a == algorithm) return n;
  }
  return "?";
}

void RunSpec::validate() const {
  if (graph.empty()) throw InvalidArgument("--graph is required");
  if (motif.empty()) throw InvalidArgument("--motif is required");
  if (!delta) throw InvalidArgument("--delta is required");
  if (trials < 1) throw InvalidArgument("--trials must be at least 1");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("--p must be in (0, 1]");
  if (!(q > 0.0 && q <= 1.0)) throw InvalidArgument("--q must be in (0, 1]");
  if (is_streaming(algorithm) && r < 1) throw InvalidArgument("--r is required for ses and sews");
}

void EstimateReport::summarize() {
  mean = 0.0;
  variance = 0.0;
  mean_seconds = 0.0;
  mean_relative_error.reset();
  if (trials.empty()) return;
  const double k = static_cast<double>(trials.size());
  for (const auto& t : trials) {
    mean += t.value;
    mean_seconds += t.seconds;
  }
  mean /= k;
  mean_seconds /= k;
  if (trials.size() > 1) {
    for (const auto& t : trials) variance += (t.value - mean) * (t.value - mean);
    variance /= k - 1.0;
  }
  for (auto& t : trials) {
    t.relative_error.reset();
    if (ground_truth && *ground_truth > 0) {
      const double truth = static_cast<double>(*ground_truth);
      t.relative_error = std::abs(t.value - truth) / truth;
    }
  }
  if (trials.front().relative_error) {
    double sum = 0.0;
    for (const auto& t : trials) sum += *t.relative_error;
    mean_relative_error = sum / k;
  }
}

std::size_t worker_threads(std::size_t jobs) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TEMPOMOTIF_THREADS")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min<std::size_t>(threads, cap);
  }
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

EstimateReport run(const RunSpec& spec) {
  spec.validate();
  const TemporalMotif motif = read_motif(spec.motif);
  if ((spec.algorithm == Algorithm::kEws || spec.algorithm == Algorithm::kSews) &&
      !motif.wedge_eligible()) {
    throw UnsupportedMotif(std::string(to_string(spec.algorithm)) +
                           " needs a 3-vertex 3-edge star or triangle motif; use " +
                           (spec.algorithm == Algorithm::kEws ? "es" : "ses") + " instead");
  }

  EstimateReport report;
  report.algorithm = std::string(to_string(spec.algorithm));
  report.dataset = spec.graph.stem().string();
  report.motif = spec.motif.stem().string();
  report.motif_text = motif.to_text();
  report.delta = *spec.delta;
  report.p = spec.p;
  report.q = spec.q;
  report.r = spec.r;
  report.seed = spec.seed;
  report.report_every = is_streaming(spec.algorithm) ? spec.report_every : 0;

  std::optional<TemporalGraph> graph;
  if (is_streaming(spec.algorithm)) {
    report.stats = scan_stats(spec.graph);
    if (spec.ground_truth_mode == GroundTruthMode::kAuto && report.stats.m <= spec.ground_truth_cap) {
      graph = read_graph(spec.graph);
    }
  } else {
    graph = read_graph(spec.graph);
    report.stats = stats_of(*graph);
  }

  const std::size_t trials = is_deterministic(spec.algorithm) ? 1 : spec.trials;
  if (is_streaming(spec.algorithm)) {
    report.trials = run_trials(trials, spec.seed,
                               [&](std::uint64_t seed) { return run_stream_trial(spec, motif, seed); });
  } else {
    report.trials = run_trials(
        trials, spec.seed, [&](std::uint64_t seed) { return run_offline_trial(spec, *graph, motif, seed); });
  }

  switch (spec.ground_truth_mode) {
    case GroundTruthMode::kNone:
      break;
    case GroundTruthMode::kGiven:
      report.ground_truth = spec.ground_truth;
      break;
    case GroundTruthMode::kAuto:
      if (spec.algorithm == Algorithm::kExact) {
        report.ground_truth = static_cast<Count>(report.trials.front().value);
        report.ground_truth_seconds = report.trials.front().seconds;
      } else if (graph && graph->num_edges() <= spec.ground_truth_cap) {
        auto start = Clock::now();
        report.ground_truth = exact_count(*graph, motif, *spec.delta);
        report.ground_truth_seconds = seconds_since(start);
      }
      break;
  }
  report.summarize();
  return report;
}

std::string to_json(const EstimateReport& report) { return report_json(report).dump(2); }

EstimateReport report_from_json(std::string_view text) {
  try {
    return report_from(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

std::vector<EstimateReport> reports_from_json(std::string_view text) {
  try {
    auto j = Json::parse(text);
    std::vector<EstimateReport> out;
    if (j.is_array()) {
      for (const auto& r : j) out.push_back(report_from(r));
    } else {
      out.push_back(report_from(j));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

void write_csv(std::ostream& out, const EstimateReport& r) {
  out << kReportCsvHeader << '\n';
  auto prefix = [&](std::string_view row) {
    out << row << ',' << csv_field(r.algorithm) << ',' << csv_field(r.dataset) << ','
        << csv_field(r.motif) << ',' << r.delta << ',' << csv_number(r.p) << ',' << csv_number(r.q)
        << ',' << r.r << ',';
  };
  auto suffix = [&] {
    out << ',' << csv_optional(r.ground_truth) << ',' << r.stats.n << ',' << r.stats.m << ','
        << r.stats.time_span() << '\n';
  };
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    const auto& last = t.trajectory.empty() ? TrajectoryPoint{} : t.trajectory.back();
    prefix("trial");
    out << i << ',' << t.seed << ',' << (t.trajectory.empty() ? r.stats.m : last.edges_seen) << ','
        << (t.trajectory.empty() ? r.stats.max_time : last.timestamp) << ',' << csv_number(t.value)
        << ',' << csv_number(t.seconds) << ',' << csv_optional(t.relative_error);
    suffix();
  }
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    for (const auto& p : t.trajectory) {
      prefix("trajectory");
      out << i << ',' << t.seed << ',' << p.edges_seen << ',' << p.timestamp << ','
          << csv_number(p.value) << ",,";
      suffix();
    }
  }
}

std::vector<ComparisonRow> compare(const std::vector<EstimateReport>& a,
                                   const std::vector<EstimateReport>& b) {
  using Key = std::tuple<std::string, std::string, Timestamp>;
  auto index = [](const std::vector<EstimateReport>& reports, const char* side) {
    std::map<Key, const EstimateReport*> out;
    for (const auto& r : reports) {
      if (!out.emplace(Key{r.dataset, r.motif, r.delta}, &r).second) {
        throw InvalidArgument(std::string("report set ") + side + " repeats dataset '" + r.dataset +
                              "', motif '" + r.motif + "', delta " + std::to_string(r.delta));
      }
    }
    return out;
  };
  auto ia = index(a, "A");
  auto ib = index(b, "B");
  auto describe = [](const Key& k) {
    return "(" + std::get<0>(k) + ", " + std::get<1>(k) + ", " + std::to_string(std::get<2>(k)) + ")";
  };
  for (const auto& [k, r] : ia) {
    if (!ib.contains(k)) throw InvalidArgument("no matching report in B for " + describe(k));
  }
  for (const auto& [k, r] : ib) {
    if (!ia.contains(k)) throw InvalidArgument("no matching report in A for " + describe(k));
  }
  std::vector<ComparisonRow> rows;
  for (const auto& [k, ra] : ia) {
    const auto* rb = ib.at(k);
    ComparisonRow row;
    std::tie(row.dataset, row.motif, row.delta) = k;
    row.algorithm_a = ra->algorithm;
    row.algorithm_b = rb->algorithm;
    row.error_a = ra->mean_relative_error;
    row.error_b = rb->mean_relative_error;
    row.seconds_a = ra->mean_seconds;
    row.seconds_b = rb->mean_seconds;
    row.speedup = rb->mean_seconds > 0.0 ? ra->mean_seconds / rb->mean_seconds
                  : ra->mean_seconds > 0.0 ? HUGE_VAL
                                           : 1.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string comparison_to_json(const std::vector<ComparisonRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["dataset"] = r.dataset;
    j["motif"] = r.motif;
    j["delta"] = r.delta;
    j["algorithm_a"] = r.algorithm_a;
    j["algorithm_b"] = r.algorithm_b;
    j["error_a"] = optional_json(r.error_a);
    j["error_b"] = optional_json(r.error_b);
    j["seconds_a"] = r.seconds_a;
    j["seconds_b"] = r.seconds_b;
    j["speedup"] = std::isfinite(r.speedup) ? Json(r.speedup) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << kComparisonCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.dataset) << ',' << csv_field(r.motif) << ',' << r.delta << ','
        << csv_field(r.algorithm_a) << ',' << csv_field(r.algorithm_b) << ','
        << csv_optional(r.error_a) << ',' << csv_optional(r.error_b) << ','
        << csv_number(r.seconds_a) << ',' << csv_number(r.seconds_b) << ','
        << (std::isfinite(r.speedup) ? csv_number(r.speedup) : "") << '\n';
  }
}

}  // namespace tempomotif
