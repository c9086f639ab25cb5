#pragma once

#include <cstdint>
#include <vector>

#include "motionkey/keygen.hpp"

namespace motionkey {

/// Bitstrings fed to the mixture model. Keys convert via Key::bits(); the
/// model itself works on any fixed length D >= 1.
using Bitstring = std::vector<std::uint8_t>;

/// K-component mixture of independent-bit Bernoulli distributions over
/// {0,1}^D. Weights live on the probability simplex; every per-bit
/// probability is clamped to [kProbClamp, 1 - kProbClamp] so no observed
/// string ever has zero likelihood.
struct BernoulliMixture {
    std::vector<double> weights;             // K
    std::vector<std::vector<double>> probs;  // K x D

    std::size_t components() const { return weights.size(); }
    std::size_t dim() const { return probs.empty() ? 0 : probs.front().size(); }

    /// Throws InvalidModel when invariants are violated.
    void validate() const;
};

inline constexpr double kProbClamp = 1e-6;

/// Sum over strings of log sum_k w_k prod_d p_kd^x (1-p_kd)^(1-x), computed
/// in the log domain. Throws LengthMismatch when a string's length differs
/// from the model dimension.
double log_likelihood(const BernoulliMixture& model, const std::vector<Bitstring>& data);

struct EmFitResult {
    BernoulliMixture model;
    std::vector<double> log_likelihoods;  // one entry per iteration
    bool converged = false;

    double final_log_likelihood() const { return log_likelihoods.back(); }
};

/// Standard EM. Initialization: per-bit empirical means with uniform jitter
/// of +-0.1 per component (clamped), uniform weights. Iterates until the
/// log-likelihood improves by less than tol or max_iter is reached. Throws
/// InsufficientData when there are fewer strings than components.
EmFitResult em_fit(const std::vector<Bitstring>& data, std::size_t k, std::uint64_t seed,
                   std::size_t max_iter = 500, double tol = 1e-7);

/// log-likelihood - (params / 2) * ln(n) with params = (K-1) + K*D.
/// Higher is better.
double bic(const BernoulliMixture& model, const std::vector<Bitstring>& data);

struct ModelSelection {
    BernoulliMixture model;
    std::size_t selected_k = 0;
    struct Candidate {
        std::size_t k = 0;
        double log_likelihood = 0.0;
        double bic = 0.0;
    };
    std::vector<Candidate> candidates;  // one per K tried
};

/// For each K in 1..k_max (capped at the number of strings), keeps the best
/// of `restarts` EM fits by log-likelihood and returns the K with maximal
/// BIC, ties resolved toward smaller K.
ModelSelection select_model(const std::vector<Bitstring>& data, std::size_t k_max,
                            std::size_t restarts, std::uint64_t seed);

struct EntropyEstimate {
    double bits = 0.0;
    double std_error = 0.0;  // Monte-Carlo standard error, in bits
    std::size_t n_samples = 0;
};

/// Monte-Carlo plug-in Shannon entropy: mean of -log2 p(x) over n_samples
/// draws from the model, with the standard error of that mean. Deterministic
/// given seed.
EntropyEstimate estimate_entropy(const BernoulliMixture& model, std::size_t n_samples,
                                 std::uint64_t seed);

}  // namespace motionkey
