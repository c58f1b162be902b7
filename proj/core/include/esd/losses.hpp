#pragma once

#include "esd/matrix.hpp"

#include <span>

namespace esd {

/// Probabilities are pulled this far inside (0,1) before any logarithm.
inline constexpr double kProbEps = 1e-12;

/// Batch statistics entering the structural-similarity ratio: means,
/// variances and cross-covariance over all entries of each batch, plus the
/// two stabilizer constants.
struct SsimStats {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double var1 = 0.0;
    double var2 = 0.0;
    double cov = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

SsimStats ssim_stats(const Matrix& b1, const Matrix& b2, double c1, double c2);
double ssim_from_stats(const SsimStats& s);

enum class AgreementMode { soft, hard };

/// Mean negative log-likelihood of the true classes under row softmax.
double cross_entropy(const Matrix& logits, std::span<const int> labels);

/// Binary cross-entropy for domain discrimination: source rows are labeled 1,
/// target rows 0; the two expectation terms are averaged.
double domain_bce(const Matrix& p_source, const Matrix& p_target);

/// Same with flipped labels (source 0, target 1): minimizing it trains
/// features to fool a fixed discriminator.
double opposite_bce(const Matrix& p_source, const Matrix& p_target);

/// |structural similarity| of two equally shaped batches, in [0, 1] for
/// inputs normalized to [0, 1]. 1 means highly similar.
double ssim_similarity(const Matrix& b1, const Matrix& b2, double c1, double c2);

/// How often two row-stochastic predictions agree. Hard mode counts argmax
/// matches (evaluation metric); soft mode is the differentiable surrogate
/// mean_i sum_k p[i,k] q[i,k], which coincides with hard on one-hot rows.
double agreement_loss(const Matrix& p_via_ds, const Matrix& p_via_di, AgreementMode mode);

/// Mean over samples of the squared L2 row distance.
double reconstruction_mse(const Matrix& recon, const Matrix& original);

/// Per-step values of every loss component plus the combined objective.
struct LossReport {
    double l_di = 0.0;
    double l_ds = 0.0;
    double l_s = 0.0;
    double l_o = 0.0;
    double l_a = 0.0;
    double l_r = 0.0;
    double l_t = 0.0;
    double total = 0.0;
};

/// (l_di + l_ds) + alpha * (l_s + l_o + l_a) + beta * (l_r + l_t)
double combine_objective(const LossReport& report, double alpha, double beta);

} // namespace esd
