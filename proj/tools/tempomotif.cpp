// tempomotif: exact and sampled temporal motif counting from the command line.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tempomotif/bench.hpp"
#include "tempomotif/error.hpp"
#include "tempomotif/synthetic.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct OutputOptions {
  std::string out;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "Write the result to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

template <class Emit>
void emit(const OutputOptions& o, Emit&& write) {
  if (o.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw tempomotif::DataError("cannot write '" + o.out + "'");
  write(file);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tempomotif::DataError("cannot open report '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void parse_ground_truth(const std::string& text, tempomotif::RunSpec& spec) {
  using tempomotif::GroundTruthMode;
  if (text == "auto") {
    spec.ground_truth_mode = GroundTruthMode::kAuto;
  } else if (text == "none") {
    spec.ground_truth_mode = GroundTruthMode::kNone;
  } else {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), spec.ground_truth);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw tempomotif::InvalidArgument("--ground-truth must be auto, none or a count");
    }
    spec.ground_truth_mode = GroundTruthMode::kGiven;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate temporal motif counting"};
  app.require_subcommand(1);

  tempomotif::RunSpec spec;
  std::uint64_t delta = 0;
  std::string ground_truth = "auto";
  OutputOptions run_out;
  std::string algorithm;

  for (const char* name : {"exact", "naive", "es", "ews", "ses", "sews"}) {
    auto* cmd = app.add_subcommand(name, std::string("Run the ") + name + " counter");
    cmd->add_option("--graph", spec.graph, "Edge list, one 'src dst time' per line")->required();
    cmd->add_option("--motif", spec.motif, "Motif file: 'k l' then l lines 'u v'")->required();
    cmd->add_option("--delta", delta, "Maximum instance duration (e.g. 86400 or 3600)")->required();
    cmd->add_option("--seed", spec.seed, "Seed of the first trial")->capture_default_str();
    cmd->add_option("--ground-truth", ground_truth, "auto, none, or a known count")->capture_default_str();
    cmd->add_option("--ground-truth-cap", spec.ground_truth_cap,
                    "Largest m for which auto runs the exact counter")
        ->capture_default_str();
    std::string n = name;
    if (n == "es" || n == "ews") {
      cmd->add_option("--p", spec.p, "Edge sampling probability")->capture_default_str();
    }
    if (n == "ews" || n == "sews") {
      cmd->add_option("--q", spec.q, "Wedge sampling probability")->capture_default_str();
    }
    if (n == "ses" || n == "sews") {
      cmd->add_option("--r", spec.r, "Reservoir size")->required();
      cmd->add_option("--report-every", spec.report_every, "Trajectory cadence in pushes")
          ->capture_default_str();
      cmd->add_flag("--lenient", spec.lenient_order, "Drop out-of-order edges instead of failing");
    }
    if (n != "exact" && n != "naive") {
      cmd->add_option("--trials", spec.trials, "Number of trials")->capture_default_str();
    }
    add_output_options(cmd, run_out);
    cmd->callback([&algorithm, n] { algorithm = n; });
  }

  tempomotif::SyntheticSpec gen;
  std::string model = "uniform";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic temporal edge list");
  gen_cmd->add_option("--n", gen.n, "Vertices")->required();
  gen_cmd->add_option("--m", gen.m, "Edges")->required();
  gen_cmd->add_option("--span", gen.span, "Time span")->required();
  gen_cmd->add_option("--model", model, "uniform, bursty or skewed-pairs")->capture_default_str();
  gen_cmd->add_option("--zipf", gen.zipf_exponent, "Zipf exponent for skewed-pairs")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Write to this file instead of stdout");

  std::string report_a, report_b;
  OutputOptions cmp_out;
  auto* cmp_cmd = app.add_subcommand("compare", "Join two report files and compute speedups");
  cmp_cmd->add_option("report_a", report_a, "Baseline report (JSON)")->required();
  cmp_cmd->add_option("report_b", report_b, "Candidate report (JSON)")->required();
  add_output_options(cmp_cmd, cmp_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      gen.model = tempomotif::parse_synthetic_model(model);
      if (gen_out.empty()) {
        tempomotif::write_synthetic(std::cout, gen);
      } else {
        std::ofstream file(gen_out);
        if (!file) throw tempomotif::DataError("cannot write '" + gen_out + "'");
        tempomotif::write_synthetic(file, gen);
      }
      return 0;
    }
    if (cmp_cmd->parsed()) {
      auto rows = tempomotif::compare(tempomotif::reports_from_json(slurp(report_a)),
                                      tempomotif::reports_from_json(slurp(report_b)));
      emit(cmp_out, [&](std::ostream& os) {
        if (cmp_out.format == "csv") {
          tempomotif::write_comparison_csv(os, rows);
        } else {
          os << tempomotif::comparison_to_json(rows) << '\n';
        }
      });
      return 0;
    }
    spec.algorithm = tempomotif::parse_algorithm(algorithm);
    spec.delta = delta;
    parse_ground_truth(ground_truth, spec);
    auto report = tempomotif::run(spec);
    emit(run_out, [&](std::ostream& os) {
      if (run_out.format == "csv") {
        tempomotif::write_csv(os, report);
      } else {
        os << tempomotif::to_json(report) << '\n';
      }
    });
    return 0;
  } catch (const tempomotif::DataError& e) {
    std::cerr << "tempomotif: " << e.what() << '\n';
    return kExitData;
  } catch (const tempomotif::Error& e) {
    std::cerr << "tempomotif: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "tempomotif: " << e.what() << '\n';
    return 1;
  }
}
