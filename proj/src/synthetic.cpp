#include "tempomotif/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "tempomotif/error.hpp"

namespace tempomotif {

namespace {

// Portable draws on top of mt19937_64 (whose output sequence is fixed by the
// standard, unlike the std distributions).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }
  Timestamp time_in(Timestamp span) {
    return span == kMaxTimestamp ? engine_() : below(span + 1);
  }
  double exponential(double mean) { return -mean * std::log1p(-unit()); }

 private:
  std::mt19937_64 engine_;
};

std::pair<std::uint64_t, std::uint64_t> distinct_pair(Draw& draw, std::size_t n) {
  std::uint64_t u = draw.below(n);
  std::uint64_t v = draw.below(n - 1);
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

SyntheticModel parse_synthetic_model(std::string_view name) {
  if (name == "uniform") return SyntheticModel::kUniform;
  if (name == "bursty") return SyntheticModel::kBursty;
  if (name == "skewed-pairs") return SyntheticModel::kSkewedPairs;
  throw InvalidArgument("unknown synthetic model '" + std::string(name) + "'");
}

std::string_view to_string(SyntheticModel model) {
  switch (model) {
    case SyntheticModel::kUniform: return "uniform";
    case SyntheticModel::kBursty: return "bursty";
    case SyntheticModel::kSkewedPairs: return "skewed-pairs";
  }
  return "uniform";
}

std::vector<RawEdge> generate_synthetic(const SyntheticSpec& spec) {
  if (spec.n < 2) throw InvalidArgument("synthetic graph needs n >= 2");
  if (spec.m < 1) throw InvalidArgument("synthetic graph needs m >= 1");
  Draw draw(spec.seed);
  std::vector<RawEdge> out(spec.m);

  switch (spec.model) {
    case SyntheticModel::kUniform:
      for (auto& e : out) {
        std::tie(e.src, e.dst) = distinct_pair(draw, spec.n);
        e.time = draw.time_in(spec.span);
      }
      break;

    case SyntheticModel::kBursty: {
      const std::size_t bursts = std::max<std::size_t>(1, spec.m / 32);
      std::vector<Timestamp> centres(bursts);
      for (auto& c : centres) c = draw.time_in(spec.span);
      const double mean_offset =
          static_cast<double>(spec.span) / static_cast<double>(bursts * 8) + 1.0;
      for (auto& e : out) {
        std::tie(e.src, e.dst) = distinct_pair(draw, spec.n);
        Timestamp centre = centres[draw.below(bursts)];
        double t = static_cast<double>(centre) + draw.exponential(mean_offset);
        e.time = std::min<Timestamp>(spec.span, static_cast<Timestamp>(t));
      }
      break;
    }

    case SyntheticModel::kSkewedPairs: {
      const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1);
      const std::uint64_t ranks = std::min<std::uint64_t>(pairs, 1u << 20);
      std::vector<double> cdf(ranks);
      double acc = 0.0;
      for (std::uint64_t k = 0; k < ranks; ++k) {
        acc += std::pow(static_cast<double>(k + 1), -spec.zipf_exponent);
        cdf[k] = acc;
      }
      // rank -> pair through an affine bijection of [0, pairs)
      std::uint64_t stride = 0x9e3779b97f4a7c15ULL % pairs;
      while (std::gcd(stride, pairs) != 1) ++stride;
      const std::uint64_t offset = draw.below(pairs);
      for (auto& e : out) {
        double x = draw.unit() * acc;
        auto rank = static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
        rank = std::min(rank, ranks - 1);
        auto idx = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(stride) * rank + offset) % pairs);
        e.src = idx / (spec.n - 1);
        e.dst = idx % (spec.n - 1);
        if (e.dst >= e.src) ++e.dst;
        e.time = draw.time_in(spec.span);
      }
      break;
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const RawEdge& a, const RawEdge& b) { return a.time < b.time; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].line = i + 1;
  return out;
}

void write_synthetic(std::ostream& out, const SyntheticSpec& spec) {
  out << "# synthetic " << to_string(spec.model) << " n=" << spec.n << " m=" << spec.m
      << " span=" << spec.span << " seed=" << spec.seed << '\n';
  for (const auto& e : generate_synthetic(spec)) {
    out << e.src << ' ' << e.dst << ' ' << e.time << '\n';
  }
}

}  // namespace tempomotif
