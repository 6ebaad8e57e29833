#pragma once

#include <array>
#include <span>

namespace wordle {

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// The 7-category cumulative try distribution embedded into [0,1]:
// x_i = i/7 for i=1..6, x_7 = 1; ys non-decreasing with ys[6] = 1.
struct EmbeddedCMF {
  std::array<double, 7> xs{};
  std::array<double, 7> ys{};
};

EmbeddedCMF embed_cmf(const std::array<long long, 7>& try_counts);
EmbeddedCMF embed_cmf(const std::array<double, 7>& proportions);

// Regularized incomplete beta I_x(alpha, beta).
double beta_cdf(double x, const BetaParams& params);

struct BetaFit {
  BetaParams params;
  double sse = 0.0;   // least-squares objective at the optimum
  double rmse = 0.0;  // over the 7 embedded points
};

// Nonlinear least squares of beta_cdf against the embedded CMF.
// Nelder-Mead in (log alpha, log beta) from (log 4, log 4); converges at
// simplex diameter < 1e-8 or 1e4 evaluations.
BetaFit fit_beta(const EmbeddedCMF& cmf);

// alpha / (alpha + beta): the fitted Beta mean; higher = harder.
double difficulty_score(const BetaParams& params);

}  // namespace wordle
