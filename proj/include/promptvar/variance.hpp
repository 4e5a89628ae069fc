#pragma once

#include <cstdint>
#include <span>

#include "promptvar/reward_data.hpp"

// Reward-variance decomposition for binary rewards: the closed forms for
// the expected variance of Monte Carlo reward estimates across candidate
// system prompts, the subtraction-based empirical decomposition, and an
// exhaustive enumeration oracle for validating the closed forms.
namespace promptvar {

// How p(1-p) cells are estimated from empirical means. kPlugin uses
// p_hat(1-p_hat) directly; kUnbiased rescales by m/(m-1) (requires m >= 2).
enum class CellVariance { kPlugin, kUnbiased };

struct VarianceReport {
  double total = 0.0;            // Var(r_hat) with 1/N divisor
  double among_responses = 0.0;  // Monte Carlo noise term
  double among_prompts = 0.0;    // spread of expected rewards (signed when
                                 // obtained by subtraction)
  double snr = 0.0;              // among_prompts / among_responses
  int n_candidates = 0;
  int k_prompts = 0;
  int m_samples = 0;
};

// Grand mean of one candidate's K*M bits. Throws std::out_of_range on a bad
// index.
double estimate_reward(const OutcomeTensor& t, int candidate_index);

// Population variance, 1/N divisor. Throws std::invalid_argument on empty
// input.
double empirical_variance(std::span<const double> values);

// among_prompts / among_responses with the edge rule: 0/0 -> 0,
// x/0 -> +inf for x > 0 (and -inf for x < 0).
double snr_ratio(double among_prompts, double among_responses);

// Expected variance of N single-prompt reward estimates, each the mean of m
// Bernoulli(p_n) draws:
//   among_responses = (N-1)/N^2 * sum_n p_n(1-p_n)/m
//   among_prompts   = 1/N * sum_n (p_n - p_bar)^2
VarianceReport expected_variance_single(std::span<const double> p, int m);

// Multi-prompt generalization over an N x K matrix of cell probabilities,
// with m samples per cell:
//   among_responses = (N-1)/N^2 * sum_n (1/K) sum_k p_nk(1-p_nk)/(K*m)
//   among_prompts   = 1/N * sum_n (mu_n - p_bar)^2,  mu_n = row mean
// With K = 1 this reduces exactly (bit-for-bit) to the single-prompt form.
VarianceReport expected_variance_multi(const Matrix& p, int m);

// Empirical decomposition of an estimated success matrix: total is the
// variance of the row means, among_responses is the plug-in noise term at
// m = m_used, and among_prompts = total - among_responses (signed; may be
// negative when the subtraction overshoots).
VarianceReport decompose_estimated(const SuccessMatrix& s,
                                   CellVariance cell = CellVariance::kPlugin);

inline constexpr int kOracleDefaultMaxBits = 24;

// Exact E[Var(r_hat)] by enumerating all 2^(N*K*m) outcome tensors, weighting
// each by its Bernoulli product probability. Refuses (std::invalid_argument)
// when N*K*m exceeds max_bits.
double oracle_expected_variance(const Matrix& p, int m,
                                int max_bits = kOracleDefaultMaxBits);

}  // namespace promptvar
