#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "promptvar/reward_data.hpp"

// Stage 1: score candidate subsets of user prompts by noise-corrected
// variance among system prompts and pick the best.
namespace promptvar {

struct SubsetScore {
  std::vector<int> prompt_indices;  // strictly increasing
  double score = 0.0;               // total_variance - noise_estimate, signed
  double total_variance = 0.0;
  double noise_estimate = 0.0;
  double snr = 0.0;  // diagnostic only; never used for ranking
};

enum class FilterMode { kExhaustive, kGreedy };

struct FilterConfig {
  int k_top = 2;
  // Sampling budget used by pipeline drivers when they collect the tensor
  // the filter runs on; scoring itself always uses the matrix's own m_used.
  int m_filter = 64;
  FilterMode mode = FilterMode::kExhaustive;
  std::uint64_t max_subsets = 1000000;  // cap on C(K, k_top) in exhaustive mode
};

// Restrict s to the given columns; total = variance of restricted row means,
// noise = plug-in among-responses term with K = |indices|, m = s.m_used.
// Throws std::invalid_argument on empty/duplicate/out-of-range indices.
SubsetScore score_subset(const SuccessMatrix& s, std::span<const int> indices);

// Best subset of size k_top. Exhaustive mode scores all C(K, k_top) subsets
// (error when the count exceeds cfg.max_subsets); greedy mode grows the
// subset one index at a time. Ties break toward the lexicographically
// smallest index list; no RNG anywhere.
SubsetScore select_subset(const SuccessMatrix& s, const FilterConfig& cfg);

// Top subsets in descending score order, same tie-break. Greedy mode yields
// the single greedy selection (a greedy pass produces one subset, not a
// ranking); exhaustive mode returns min(top, C(K, k_top)) entries.
std::vector<SubsetScore> rank_subsets(const SuccessMatrix& s,
                                      const FilterConfig& cfg, int top);

// C(n, k) with saturation at `cap` (returns cap + 1 when exceeded).
std::uint64_t count_combinations(int n, int k, std::uint64_t cap);

}  // namespace promptvar
