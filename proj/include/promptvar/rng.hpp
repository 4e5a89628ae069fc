#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random streams built on the SplitMix64 finalizer.
//
// Stream discipline: every consumer derives its own stream key from a master
// seed through fixed labels (see `sub` below) plus structural indices, e.g.
//   derive(seed, sub::kCellSampling, n, k)
// so any (candidate, prompt) cell can be sampled independently of worker
// count or visitation order, and any experiment is replayable from
// (spec, master seed) alone. Within one stream, draws are sequential:
// the j-th output is finalize(key + (j+1) * kGoldenGamma).
namespace promptvar::rng {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Fixed sub-stream labels. Values are part of the on-disk reproducibility
// contract: renumbering them changes every derived stream.
enum class sub : std::uint64_t {
  kCandidateOffset = 1,  // environment: per-candidate quality offsets a_n
  kInteraction = 2,      // environment: per-(candidate,prompt) terms b_nk
  kCellSampling = 3,     // environment: Bernoulli outcome bits per cell
  kPolicyArms = 4,       // optimizer: categorical arm draws per step
  kTrainBits = 5,        // optimizer: per-rollout reward bits
  kEvalBits = 6,         // optimizer: frozen-policy evaluation bits
  kTrainStep = 7,        // optimizer: per-step seed derivation
  kSweepSubset = 8,      // experiments: prompt-subset draws
  kSweepTrial = 9,       // experiments: per-trial resampling
  kFilterStage = 10,     // experiments: filtering-stage tensor collection
  kStudyEnv = 11,        // experiments: correlation-study replicates
  kCompareArm = 12,      // experiments: filtered-vs-full arms
  kCliSample = 13,       // CLI: tensor written by `simulate`
};

constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t value) {
  return finalize(key + kGoldenGamma * (value + 1));
}

constexpr std::uint64_t derive(std::uint64_t key, sub label) {
  return derive(key, static_cast<std::uint64_t>(label));
}

template <typename... Rest>
constexpr std::uint64_t derive(std::uint64_t key, sub label, std::uint64_t v0,
                               Rest... rest) {
  std::uint64_t h = derive(key, label);
  h = derive(h, v0);
  ((h = derive(h, static_cast<std::uint64_t>(rest))), ...);
  return h;
}

// Sequential view over one derived stream.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    return finalize(state_);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // p=0 never fires, p=1 always fires (uniform is in [0,1)).
  bool next_bernoulli(double p) { return next_uniform() < p; }

  // Box-Muller; consumes two uniforms per call, spare discarded so the
  // stream position stays a simple function of the call count.
  double next_normal() {
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace promptvar::rng
