#pragma once

#include <cstdint>

#include "tempomotif/types.hpp"

namespace tempomotif {

// Counter-based generator: every random decision is a pure function of
// (seed, stream tag, counters). Results do not depend on evaluation order.
class CounterRng {
 public:
  enum class Stream : std::uint64_t {
    kEdgeSample = 1,
    kWedgeSample = 2,
    kReservoirAdmit = 3,
    kReservoirVictim = 4,
  };

  explicit constexpr CounterRng(std::uint64_t seed) : seed_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  constexpr std::uint64_t bits(Stream s, std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0) const {
    std::uint64_t h = mix64(seed_ ^ (static_cast<std::uint64_t>(s) * 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ a);
    h = mix64(h ^ (b + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ (c + 0x85157af5ULL));
    return h;
  }

  // Uniform double in [0, 1).
  constexpr double uniform(Stream s, std::uint64_t a, std::uint64_t b = 0,
                           std::uint64_t c = 0) const {
    return static_cast<double>(bits(s, a, b, c) >> 11) * 0x1.0p-53;
  }

  constexpr bool coin(double p, Stream s, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) const {
    return uniform(s, a, b, c) < p;
  }

  // Uniform integer in [0, n).
  constexpr std::uint64_t below(std::uint64_t n, Stream s, std::uint64_t a, std::uint64_t b = 0,
                                std::uint64_t c = 0) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(bits(s, a, b, c)) * n) >> 64);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace tempomotif
