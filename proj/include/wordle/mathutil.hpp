#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace wordle::math {

// ---- special functions ----

double log_beta_fn(double a, double b);

// Regularized incomplete beta I_x(a, b) via the standard continued
// fraction (Lentz), accurate to ~1e-14.
double reg_inc_beta(double x, double a, double b);

// ---- log densities / pmfs (all return -inf outside support) ----

double log_normal_pdf(double x, double mu, double sd);
double log_exponential_pdf(double x, double rate);
double log_half_cauchy_pdf(double x, double scale);
double log_beta_pdf(double x, double a, double b);
double log_gamma_pdf(double x, double shape, double rate);
double log_dirichlet_pdf(std::span<const double> p, std::span<const double> alpha);
double log_multinomial_pmf(std::span<const long long> counts,
                           std::span<const double> p);
double log_binomial_pmf(long long k, long long n, double p);
// Negative Binomial in (mean mu, overdispersion B) form: var = mu + mu^2/B.
double log_neg_binomial_pmf(long long n, double mu, double b);

// ---- samplers (std engine, deterministic per platform/run) ----

double sample_gamma(std::mt19937_64& rng, double shape, double rate);
// log of a Gamma(shape, 1) draw; stable for shapes small enough that the
// draw itself would underflow to 0.
double sample_log_gamma(std::mt19937_64& rng, double shape);
double sample_beta(std::mt19937_64& rng, double a, double b);
void sample_dirichlet(std::mt19937_64& rng, std::span<const double> alpha,
                      std::span<double> out);
std::vector<long long> sample_multinomial(std::mt19937_64& rng, long long n,
                                          std::span<const double> p);
long long sample_poisson(std::mt19937_64& rng, double mu);
long long sample_neg_binomial(std::mt19937_64& rng, double mu, double b);
long long sample_binomial(std::mt19937_64& rng, long long n, double p);

// ---- small helpers ----

double logit(double p);
double inv_logit(double x);
// sign(s) * |s|^q, the convention used for power-law trend terms whose
// base can go negative.
double signed_pow(double s, double q);

double quantile(std::vector<double> v, double q);  // sorts a copy

// Nelder-Mead on an arbitrary-dimension objective.  Stops when the
// simplex diameter falls below `tol` or after `max_evals` evaluations.
struct NelderMeadResult {
  std::vector<double> x;
  double value = 0;
  int evals = 0;
  bool converged = false;
};
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> start, double step,
                             double tol, int max_evals);

}  // namespace wordle::math
