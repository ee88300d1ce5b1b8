#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempomotif/types.hpp"

namespace tempomotif {

enum class Algorithm { kExact, kNaive, kEs, kEws, kSes, kSews };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algorithm);
inline bool is_streaming(Algorithm a) { return a == Algorithm::kSes || a == Algorithm::kSews; }
// exact and naive ignore seeds, so they run a single trial.
inline bool is_deterministic(Algorithm a) { return a == Algorithm::kExact || a == Algorithm::kNaive; }

enum class GroundTruthMode { kNone, kAuto, kGiven };

struct RunSpec {
  Algorithm algorithm = Algorithm::kExact;
  std::filesystem::path graph;
  std::filesystem::path motif;
  std::optional<Timestamp> delta;  // required
  double p = 1.0;
  double q = 1.0;
  std::size_t r = 0;  // required for ses / sews
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  std::size_t report_every = 1000;
  GroundTruthMode ground_truth_mode = GroundTruthMode::kAuto;
  Count ground_truth = 0;                   // used when mode == kGiven
  std::size_t ground_truth_cap = 1'000'000;  // auto runs exact only when m <= cap
  bool lenient_order = false;                // streaming only

  // Throws InvalidArgument when a parameter the algorithm needs is missing
  // or out of range.
  void validate() const;
};

struct TrajectoryPoint {
  std::uint64_t edges_seen = 0;
  Timestamp timestamp = 0;
  double value = 0.0;
};

struct TrialResult {
  std::uint64_t seed = 0;
  double value = 0.0;
  double seconds = 0.0;
  std::uint64_t sampled_edges = 0;
  std::uint64_t expansions = 0;
  std::optional<double> relative_error;
  std::vector<TrajectoryPoint> trajectory;  // streaming only
};

struct DatasetStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t static_edges = 0;
  Timestamp min_time = 0;
  Timestamp max_time = 0;
  Timestamp time_span() const { return max_time - min_time; }
};

struct EstimateReport {
  std::string algorithm;
  std::string dataset;  // graph file stem
  std::string motif;    // motif file stem
  std::string motif_text;
  Timestamp delta = 0;
  double p = 1.0;
  double q = 1.0;
  std::size_t r = 0;
  std::uint64_t seed = 0;
  std::size_t report_every = 0;
  DatasetStats stats;
  std::optional<Count> ground_truth;
  double ground_truth_seconds = 0.0;
  std::vector<TrialResult> trials;
  double mean = 0.0;
  double variance = 0.0;  // sample variance, 0 for a single trial
  std::optional<double> mean_relative_error;
  double mean_seconds = 0.0;

  // Recomputes mean, variance, per-trial and mean relative errors.
  void summarize();
};

// Runs the spec. Trials use seeds seed, seed+1, ... and run on up to
// TEMPOMOTIF_THREADS worker threads (default: hardware concurrency).
EstimateReport run(const RunSpec& spec);

std::string to_json(const EstimateReport& report);
EstimateReport report_from_json(std::string_view text);

// Fixed columns, one row per trial and one per trajectory point.
inline constexpr std::string_view kReportCsvHeader =
    "row,algorithm,dataset,motif,delta,p,q,r,trial,seed,edges_seen,timestamp,value,seconds,"
    "relative_error,ground_truth,n,m,time_span";
void write_csv(std::ostream& out, const EstimateReport& report);

struct ComparisonRow {
  std::string dataset;
  std::string motif;
  Timestamp delta = 0;
  std::string algorithm_a;
  std::string algorithm_b;
  std::optional<double> error_a;
  std::optional<double> error_b;
  double seconds_a = 0.0;
  double seconds_b = 0.0;
  double speedup = 0.0;  // seconds_a / seconds_b
};

// Joins reports on (dataset, motif, delta). Throws InvalidArgument when the
// key sets differ or a key repeats within one side.
std::vector<ComparisonRow> compare(const std::vector<EstimateReport>& a,
                                   const std::vector<EstimateReport>& b);

// Accepts one report object or an array of them.
std::vector<EstimateReport> reports_from_json(std::string_view text);

std::string comparison_to_json(const std::vector<ComparisonRow>& rows);
inline constexpr std::string_view kComparisonCsvHeader =
    "dataset,motif,delta,algorithm_a,algorithm_b,error_a,error_b,seconds_a,seconds_b,speedup";
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

// Number of worker threads for trial-level parallelism.
std::size_t worker_threads(std::size_t jobs);

}  // namespace tempomotif
