#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "kcenter/boolcover/boolcover.hpp"
#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"

namespace kcenter {

/// How hitting-set samples are drawn across recursion levels.
enum class SamplingMode {
  Default,   // per-algorithm default
  Shared,    // one sample reused at every level
  PerLevel,  // a fresh sample for each level i
};

struct ApproxConfig {
  std::uint64_t seed = 1;
  double sample_const = 3.0;
  double omega = 2.372;
  std::uint64_t budget = kDefaultTupleBudget;
  unsigned trials = 1;
  SamplingMode sampling = SamplingMode::Default;

  void validate() const {
    require(sample_const > 0.0 && std::isfinite(sample_const), ErrorCode::InvalidArgument,
            "sample constant must be positive");
    require(omega >= 2.0 && omega <= 3.0, ErrorCode::InvalidArgument, "omega must lie in [2,3]");
    require(trials >= 1, ErrorCode::InvalidArgument, "trials must be >= 1");
  }
};

/// Which step of a decider produced a cover.
enum class CoverSource {
  Trivial,       // k >= n
  Padded,        // region to cover was empty
  SampleTuple,   // tuple drawn from a hitting-set sample
  WScan,         // last center scanned from a W set
  QIntersection, // last center taken from an intersection of balls
  VTuple,        // completion tuple drawn from all of V
  ProductCase,   // weighted case I pair search
};

constexpr std::string_view to_string(CoverSource s) {
  switch (s) {
    case CoverSource::Trivial: return "trivial";
    case CoverSource::Padded: return "padded";
    case CoverSource::SampleTuple: return "sample-tuple";
    case CoverSource::WScan: return "w-scan";
    case CoverSource::QIntersection: return "q-intersection";
    case CoverSource::VTuple: return "v-tuple";
    case CoverSource::ProductCase: return "product-case";
  }
  return "unknown";
}

/// A verified cover: radius is the exact cover radius of `centers`.
struct Covered {
  VertexSet centers;
  Dist radius = 0;
  CoverSource via = CoverSource::Trivial;
};

/// No cover found at the probed R.
struct AboveR {};

using DecisionOutcome = std::variant<Covered, AboveR>;

inline bool is_covered(const DecisionOutcome& o) { return std::holds_alternative<Covered>(o); }

/// Independent generator for (seed, R, stream).
inline std::mt19937_64 derive_rng(std::uint64_t seed, Radius R, std::uint64_t stream) {
  const auto r = static_cast<std::uint64_t>(R);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return std::mt19937_64((std::uint64_t{words[0]} << 32) | words[1]);
}

/// Seed used for the j-th independent trial of a decision.
inline std::uint64_t trial_seed(std::uint64_t seed, unsigned trial) {
  if (trial == 0) return seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), trial, 0x7f4a7c15U};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (std::uint64_t{words[0]} << 32) | words[1];
}

/// min(n, ceil(c * n^(1-delta) * ln n)), at least 1.
inline std::size_t hitting_set_size(std::size_t n, double delta, double c) {
  if (n <= 1) return n;
  const double nn = static_cast<double>(n);
  const double raw = std::ceil(c * std::pow(nn, 1.0 - delta) * std::log(nn));
  if (!(raw < nn)) return n;
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

/// ceil(n^delta), clamped to [1, n].
inline std::size_t neighborhood_size(std::size_t n, double delta) {
  if (n == 0) return 0;
  const double raw = std::ceil(std::pow(static_cast<double>(n), delta) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(raw, 1.0)), 1, n);
}

/// Uniform sample without replacement drawn from `rng`.
inline VertexSet sample_hitting_set(std::size_t n, double delta, double c, std::mt19937_64& rng) {
  require(delta >= 0.0 && delta <= 1.0, ErrorCode::InvalidArgument, "sampling exponent must lie in [0,1]");
  VertexSet out(n);
  const std::size_t size = hitting_set_size(n, delta, c);
  if (size >= n) return VertexSet::full(n);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> picked;
  picked.reserve(size);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), size, rng);
  for (Vertex v : picked) out.insert(v);
  return out;
}

/// Sample seeded from (cfg.seed, R = 0, stream 0).
inline VertexSet sample_hitting_set(std::size_t n, double delta, const ApproxConfig& cfg) {
  auto rng = derive_rng(cfg.seed, 0, 0);
  return sample_hitting_set(n, delta, cfg.sample_const, rng);
}

}  // namespace kcenter
