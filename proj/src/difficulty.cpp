#include "wordle/difficulty.hpp"

#include <cmath>
#include <stdexcept>

#include "wordle/mathutil.hpp"

namespace wordle {

namespace {
EmbeddedCMF embed_from_props(const std::array<double, 7>& prop) {
  EmbeddedCMF c;
  double cum = 0.0;
  for (int i = 0; i < 7; ++i) {
    c.xs[i] = i < 6 ? static_cast<double>(i + 1) / 7.0 : 1.0;
    cum += prop[i];
    c.ys[i] = cum;
  }
  c.ys[6] = 1.0;  // clamp terminal rounding
  return c;
}
}  // namespace

EmbeddedCMF embed_cmf(const std::array<long long, 7>& try_counts) {
  long long total = 0;
  for (long long c : try_counts) {
    if (c < 0) throw std::invalid_argument("embed_cmf: negative count");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("embed_cmf: zero total");
  std::array<double, 7> prop{};
  for (int i = 0; i < 7; ++i)
    prop[i] = static_cast<double>(try_counts[i]) / static_cast<double>(total);
  return embed_from_props(prop);
}

EmbeddedCMF embed_cmf(const std::array<double, 7>& proportions) {
  double total = 0.0;
  for (double p : proportions) {
    if (p < 0.0) throw std::invalid_argument("embed_cmf: negative proportion");
    total += p;
  }
  if (total <= 0.0) throw std::invalid_argument("embed_cmf: zero total");
  std::array<double, 7> prop{};
  for (int i = 0; i < 7; ++i) prop[i] = proportions[i] / total;
  return embed_from_props(prop);
}

double beta_cdf(double x, const BetaParams& params) {
  if (params.alpha <= 0.0 || params.beta <= 0.0)
    throw std::invalid_argument("beta_cdf: nonpositive shape");
  return math::reg_inc_beta(x, params.alpha, params.beta);
}

BetaFit fit_beta(const EmbeddedCMF& cmf) {
  for (int i = 1; i < 7; ++i)
    if (cmf.ys[i] + 1e-12 < cmf.ys[i - 1])
      throw std::invalid_argument("fit_beta: CMF not non-decreasing");
  // All mass in category 1: every cumulative point is already 1, which no
  // proper Beta CDF can follow.
  if (cmf.ys[0] >= 1.0)
    throw std::invalid_argument("distribution too extreme for Beta fit");

  auto objective = [&](std::span<const double> logp) {
    BetaParams p{std::exp(logp[0]), std::exp(logp[1])};
    double sse = 0.0;
    for (int i = 0; i < 7; ++i) {
      double r = beta_cdf(cmf.xs[i], p) - cmf.ys[i];
      sse += r * r;
    }
    return sse;
  };
  const double start[2] = {std::log(4.0), std::log(4.0)};
  auto res = math::nelder_mead(objective, start, 0.5, 1e-8, 10000);

  BetaFit fit;
  fit.params = {std::exp(res.x[0]), std::exp(res.x[1])};
  fit.sse = res.value;
  fit.rmse = std::sqrt(res.value / 7.0);
  return fit;
}

double difficulty_score(const BetaParams& params) {
  if (params.alpha <= 0.0 || params.beta <= 0.0)
    throw std::invalid_argument("difficulty_score: nonpositive shape");
  return params.alpha / (params.alpha + params.beta);
}

}  // namespace wordle
