#include "wordle/bayes/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wordle/mathutil.hpp"

namespace wordle::bayes {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kCoefPriorSd = 20.0;  // Normal(0, 20) on regression coefficients
}  // namespace

std::array<double, 7> try_linear(const std::array<std::array<double, 7>, 5>& a,
                                 const std::array<double, 4>& x) {
  std::array<double, 7> d = a[0];
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 7; ++i) d[i] += a[k + 1][i] * x[k];
  return d;
}

double scalar_linear(const std::array<double, 4>& coeffs,
                     const std::array<double, 4>& x) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d += coeffs[k] * x[k];
  return d;
}

double periodic_effect(const std::array<double, 7>& coeffs, int day_of_week) {
  if (day_of_week < 1 || day_of_week > 7)
    throw std::invalid_argument("periodic_effect: day of week out of range");
  return coeffs[day_of_week - 1];
}

double reports_trend(const std::array<double, 5>& gamma, double T) {
  if (gamma[2] == 0.0)
    throw std::invalid_argument("reports_trend: zero decay scale");
  double s = T - gamma[4];
  return gamma[0] * math::signed_pow(s, gamma[1]) * std::exp(-s / gamma[2]) +
         gamma[3];
}

double hardmoders_trend(const std::array<double, 4>& lambda, double T) {
  double s = T - lambda[3];
  return lambda[0] * math::signed_pow(s, lambda[1]) + lambda[2];
}

double try_log_posterior(const TryParams& params, const ModelData& data) {
  const std::size_t n_days = data.days.size();
  if (params.ln_a.size() != n_days || params.p.size() != n_days)
    throw std::invalid_argument("try_log_posterior: latent size mismatch");
  if (params.sigma <= 0.0) return kNegInf;

  double lp = 0.0;
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 7; ++i)
      lp += math::log_normal_pdf(params.a[k][i], 0.0, kCoefPriorSd);
  lp += math::log_exponential_pdf(params.sigma, 1.0);
  if (!std::isfinite(lp)) return kNegInf;

  for (std::size_t d = 0; d < n_days; ++d) {
    const auto& day = data.days[d];
    auto dtry = try_linear(params.a, day.x);
    std::array<double, 7> conc;
    for (int i = 0; i < 7; ++i) {
      lp += math::log_normal_pdf(params.ln_a[d][i], dtry[i], params.sigma);
      conc[i] = std::exp(params.ln_a[d][i]);
    }
    lp += math::log_dirichlet_pdf(params.p[d], conc);
    lp += math::log_multinomial_pmf(day.t, params.p[d]);
    if (!std::isfinite(lp)) return kNegInf;
  }
  return lp;
}

double reports_log_posterior(const ReportsParams& params, const ModelData& data) {
  if (params.gamma[0] <= 0.0 || params.gamma[1] <= 0.0 || params.gamma[2] <= 0.0 ||
      params.gamma[3] <= 0.0 || params.overdispersion <= 0.0)
    return kNegInf;

  double lp = 0.0;
  for (int k = 0; k < 4; ++k)
    lp += math::log_normal_pdf(params.b[k], 0.0, kCoefPriorSd);
  for (int i = 0; i < 7; ++i)
    lp += math::log_normal_pdf(params.theta[i], 0.0, 1.0);
  lp += math::log_exponential_pdf(params.gamma[0], 1.0);
  lp += math::log_exponential_pdf(params.gamma[1], 1.0);
  lp += math::log_exponential_pdf(params.gamma[2], 1.0);
  lp += math::log_exponential_pdf(params.gamma[3], 0.01);
  lp += math::log_normal_pdf(params.gamma[4], 0.0, 1.0);
  lp += math::log_exponential_pdf(params.overdispersion, 0.01);
  if (!std::isfinite(lp)) return kNegInf;

  for (const auto& day : data.days) {
    double eta = reports_trend(params.gamma, day.T) +
                 periodic_effect(params.theta, day.dow) +
                 scalar_linear(params.b, day.x);
    if (eta > 700.0) return kNegInf;  // exp overflow guard
    double mu = std::exp(eta);
    lp += math::log_neg_binomial_pmf(day.n, mu, params.overdispersion);
    if (!std::isfinite(lp)) return kNegInf;
  }
  return lp;
}

double hardmoders_log_posterior(const HardmodersParams& params,
                                const ModelData& data) {
  const std::size_t n_days = data.days.size();
  if (params.p.size() != n_days)
    throw std::invalid_argument("hardmoders_log_posterior: latent size mismatch");
  if (params.lambda[0] <= 0.0 || params.lambda[1] <= 0.0 ||
      params.lambda[2] <= 0.0 || params.kappa <= 0.0)
    return kNegInf;

  double lp = 0.0;
  for (int k = 0; k < 4; ++k)
    lp += math::log_normal_pdf(params.c[k], 0.0, kCoefPriorSd);
  for (int i = 0; i < 7; ++i)
    lp += math::log_normal_pdf(params.omega[i], 0.0, 1.0);
  lp += math::log_exponential_pdf(params.lambda[0], 1.0);
  lp += math::log_exponential_pdf(params.lambda[1], 1.0);
  lp += math::log_exponential_pdf(params.lambda[2], 1.0);
  lp += math::log_normal_pdf(params.lambda[3], 0.0, 1.0);
  lp += math::log_half_cauchy_pdf(params.kappa, 0.5);
  if (!std::isfinite(lp)) return kNegInf;

  for (std::size_t d = 0; d < n_days; ++d) {
    const auto& day = data.days[d];
    double p = params.p[d];
    if (p <= 0.0 || p >= 1.0) return kNegInf;
    double eta = math::inv_logit(hardmoders_trend(params.lambda, day.T) +
                                 periodic_effect(params.omega, day.dow) +
                                 scalar_linear(params.c, day.x));
    lp += math::log_beta_pdf(p, eta * params.kappa, (1.0 - eta) * params.kappa);
    lp += math::log_binomial_pmf(day.nh, day.n, p);
    if (!std::isfinite(lp)) return kNegInf;
  }
  return lp;
}

}  // namespace wordle::bayes
