#pragma once

#include <array>
#include <span>
#include <vector>

#include "wordle/ingest.hpp"

namespace wordle::bayes {

// One observed day as the submodels see it: counts plus the standardized
// 4-predictor vector of the day's word.
struct DayData {
  long long n = 0;                   // reports
  long long nh = 0;                  // hardmode reports
  std::array<long long, 7> t{};      // try counts, slot 7 = failures
  double T = 0.0;                    // scaled time
  int dow = 1;                       // Monday = 1
  std::array<double, 4> x{};         // standardized predictors
};

struct ModelData {
  std::vector<DayData> days;
};

// --- linear/difficulty components ---

// Try-model regression: 7-vector with intercept, d_i = a0_i + sum_k ak_i x_k.
// a is [5][7]: a[0] the intercept vector, a[1..4] the predictor slopes.
std::array<double, 7> try_linear(const std::array<std::array<double, 7>, 5>& a,
                                 const std::array<double, 4>& x);

// Reports/Hardmoders regression: scalar, no intercept.
double scalar_linear(const std::array<double, 4>& coeffs,
                     const std::array<double, 4>& x);

// Day-of-week indicator effect: coeffs[dow-1].
double periodic_effect(const std::array<double, 7>& coeffs, int day_of_week);

// Long-term trend of the Reports model, gamma-pdf shaped:
// g1*(T-g5)^g2 * exp(-(T-g5)/g3) + g4, with the signed-power convention
// for the possibly negative base.
double reports_trend(const std::array<double, 5>& gamma, double T);

// Long-term trend of the Hardmoders model: l1*(T-l4)^l2 + l3.
double hardmoders_trend(const std::array<double, 4>& lambda, double T);

// --- parameter blocks ---

struct TryParams {
  std::array<std::array<double, 7>, 5> a{};  // a0..a4
  double sigma = 1.0;
  // per-day latents
  std::vector<std::array<double, 7>> ln_a;   // ln A_i
  std::vector<std::array<double, 7>> p;      // probability simplex
};

struct ReportsParams {
  std::array<double, 4> b{};
  std::array<double, 7> theta{};
  std::array<double, 5> gamma{};
  double overdispersion = 1.0;  // B
};

struct HardmodersParams {
  std::array<double, 4> c{};
  std::array<double, 7> omega{};
  std::array<double, 4> lambda{};
  double kappa = 1.0;
  std::vector<double> p;  // per-day hardmode probability, in (0,1)
};

// --- full joint log posteriors (log prior + log likelihood); -inf outside
// support.  Latent vectors must match data.days.size(). ---

double try_log_posterior(const TryParams& params, const ModelData& data);
double reports_log_posterior(const ReportsParams& params, const ModelData& data);
double hardmoders_log_posterior(const HardmodersParams& params, const ModelData& data);

}  // namespace wordle::bayes
