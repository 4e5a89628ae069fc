#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "promptvar/reward_data.hpp"

// Synthetic ground-truth environments: planted success matrices plus
// reproducible Bernoulli sampling of outcome tensors from them.
namespace promptvar {

enum class Regime { kHomogeneous, kHeterogeneous, kPlantedSubset, kExplicit };

struct EnvSpec {
  int n_candidates = 16;
  int k_prompts = 8;
  Regime regime = Regime::kHomogeneous;
  double base_level = 0.5;
  // Std of per-candidate quality offsets a_n, shared across prompts (the
  // persistent signal).
  double candidate_spread = 0.1;
  // Std of per-(candidate,prompt) interaction terms b_nk (the heterogeneity).
  double prompt_interaction = 0.0;
  // kPlantedSubset: columns that receive the a_n contribution.
  std::vector<int> planted_indices;
  std::uint64_t seed = 0;
  // kExplicit: returned verbatim; shape must match n_candidates/k_prompts.
  std::optional<Matrix> explicit_matrix;
  // Compose offsets in logit space instead of probability space (no clipping
  // artifacts; default is plain clipped addition).
  bool logit_space = false;
};

struct GroundTruth {
  Matrix p;  // N x K cell success probabilities in [0,1]
  EnvSpec spec;
};

// p[n][k] = clip(base_level + a_n + b_nk) with a_n ~ N(0, spread^2) drawn per
// candidate (independent of K) and b_nk ~ N(0, interaction^2) per cell, so a
// matrix generated at K prompts shares its columns' structure with any other
// K at the same seed. Deterministic in spec.seed.
GroundTruth generate(const EnvSpec& spec);

// N x K x m tensor of independent Bernoulli(p[n][k]) draws; deterministic in
// (gt, m, seed) with one derived stream per cell, so results never depend on
// traversal order or worker count. Synthesizes ids c0..c{N-1}, p0..p{K-1}.
OutcomeTensor sample(const GroundTruth& gt, int m, std::uint64_t seed);

// Restrict a ground truth to a subset of prompt columns (indices must be
// valid and distinct; order preserved).
Matrix select_columns(const Matrix& p, std::span<const int> indices);

// Paper-protocol presets (N=16 candidates throughout).
//
// Flat-SNR preset: 64 prompts, interaction-dominated (spread 0.01 vs
// interaction 0.15). Under random prompt-subset draws, among_prompts decays
// like 1/K while the noise term also decays like 1/K, so their ratio stays
// level across K.
EnvSpec homogeneous_preset(std::uint64_t seed);
// Decaying-SNR preset: 30 prompts, interaction 0.2. Different prompts favor
// different candidates, so averaging more prompts shrinks the spread of
// candidate means faster than the noise floor.
EnvSpec heterogeneous_preset(std::uint64_t seed);
// Two planted columns ({2, 5} of 8) carrying a strong shared candidate
// signal (spread 0.22) over a weak interaction background (0.03); the
// planted pair's among-prompts variance leads every other pair by >= 0.02
// in expectation.
EnvSpec planted_preset(std::uint64_t seed);

inline constexpr int kPlantedColumnA = 2;
inline constexpr int kPlantedColumnB = 5;

}  // namespace promptvar
