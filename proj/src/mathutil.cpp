#include "wordle/mathutil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wordle::math {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Continued fraction for the incomplete beta (Numerical Recipes betacf form).
double betacf(double a, double b, double x) {
  const int max_iter = 300;
  const double eps = 1e-15, fpmin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}
}  // namespace

double log_beta_fn(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double reg_inc_beta(double x, double a, double b) {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("reg_inc_beta: x outside [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double bt = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta_fn(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double log_normal_pdf(double x, double mu, double sd) {
  if (sd <= 0.0) return kNegInf;
  double z = (x - mu) / sd;
  return -0.5 * z * z - std::log(sd) - 0.9189385332046727;
}

double log_exponential_pdf(double x, double rate) {
  if (x < 0.0 || rate <= 0.0) return kNegInf;
  return std::log(rate) - rate * x;
}

double log_half_cauchy_pdf(double x, double scale) {
  if (x < 0.0 || scale <= 0.0) return kNegInf;
  return std::log(2.0 / M_PI) - std::log(scale) - std::log1p((x / scale) * (x / scale));
}

double log_beta_pdf(double x, double a, double b) {
  if (x <= 0.0 || x >= 1.0 || a <= 0.0 || b <= 0.0) return kNegInf;
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta_fn(a, b);
}

double log_gamma_pdf(double x, double shape, double rate) {
  if (x <= 0.0 || shape <= 0.0 || rate <= 0.0) return kNegInf;
  return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
         rate * x;
}

double log_dirichlet_pdf(std::span<const double> p, std::span<const double> alpha) {
  double sum_a = 0.0, lp = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || alpha[i] <= 0.0) return kNegInf;
    sum_a += alpha[i];
    lp += (alpha[i] - 1.0) * std::log(p[i]) - std::lgamma(alpha[i]);
  }
  return lp + std::lgamma(sum_a);
}

double log_multinomial_pmf(std::span<const long long> counts,
                           std::span<const double> p) {
  long long n = 0;
  double lp = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) return kNegInf;
    n += counts[i];
    if (counts[i] > 0) {
      if (p[i] <= 0.0) return kNegInf;
      lp += counts[i] * std::log(p[i]) - std::lgamma(counts[i] + 1.0);
    } else {
      lp -= std::lgamma(counts[i] + 1.0);
    }
  }
  return lp + std::lgamma(n + 1.0);
}

double log_binomial_pmf(long long k, long long n, double p) {
  if (k < 0 || k > n) return kNegInf;
  if (p < 0.0 || p > 1.0) return kNegInf;
  if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return k == n ? 0.0 : kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
         k * std::log(p) + (n - k) * std::log1p(-p);
}

double log_neg_binomial_pmf(long long n, double mu, double b) {
  if (n < 0 || mu <= 0.0 || b <= 0.0) return kNegInf;
  return std::lgamma(n + b) - std::lgamma(b) - std::lgamma(n + 1.0) +
         b * std::log(b / (b + mu)) + n * std::log(mu / (b + mu));
}

double sample_gamma(std::mt19937_64& rng, double shape, double rate) {
  // Marsaglia-Tsang, with the shape<1 boost.
  if (shape <= 0.0 || rate <= 0.0)
    throw std::invalid_argument("sample_gamma: nonpositive parameter");
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  double boost = 1.0;
  double a = shape;
  if (a < 1.0) {
    double u = ud(rng);
    boost = std::pow(u, 1.0 / a);
    a += 1.0;
  }
  double d = a - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = nd(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = ud(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return boost * d * v / rate;
  }
}

double sample_log_gamma(std::mt19937_64& rng, double shape) {
  // log of a Gamma(shape, 1) draw, stable for tiny shapes where the draw
  // itself underflows: Gamma(a) = Gamma(a+1) * U^(1/a) in log space.
  if (shape <= 0.0)
    throw std::invalid_argument("sample_log_gamma: nonpositive shape");
  if (shape >= 1.0) return std::log(sample_gamma(rng, shape, 1.0));
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  double u = ud(rng);
  while (u <= 0.0) u = ud(rng);
  return std::log(sample_gamma(rng, shape + 1.0, 1.0)) + std::log(u) / shape;
}

double sample_beta(std::mt19937_64& rng, double a, double b) {
  double x = sample_gamma(rng, a, 1.0);
  double y = sample_gamma(rng, b, 1.0);
  return x / (x + y);
}

void sample_dirichlet(std::mt19937_64& rng, std::span<const double> alpha,
                      std::span<double> out) {
  double sum = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    out[i] = sample_gamma(rng, alpha[i], 1.0);
    sum += out[i];
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) out[i] /= sum;
}

std::vector<long long> sample_multinomial(std::mt19937_64& rng, long long n,
                                          std::span<const double> p) {
  std::vector<long long> out(p.size(), 0);
  double remaining_p = 1.0;
  long long remaining_n = n;
  for (std::size_t i = 0; i + 1 < p.size() && remaining_n > 0; ++i) {
    double q = std::clamp(p[i] / remaining_p, 0.0, 1.0);
    out[i] = sample_binomial(rng, remaining_n, q);
    remaining_n -= out[i];
    remaining_p -= p[i];
    if (remaining_p <= 0.0) break;
  }
  out[p.size() - 1] += remaining_n;
  return out;
}

long long sample_poisson(std::mt19937_64& rng, double mu) {
  std::poisson_distribution<long long> pd(mu);
  return pd(rng);
}

long long sample_neg_binomial(std::mt19937_64& rng, double mu, double b) {
  // Gamma-Poisson mixture: rate ~ Gamma(b, b/mu), n ~ Poisson(rate).
  double rate = sample_gamma(rng, b, b / mu);
  return sample_poisson(rng, rate);
}

long long sample_binomial(std::mt19937_64& rng, long long n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  std::binomial_distribution<long long> bd(n, p);
  return bd(rng);
}

double logit(double p) { return std::log(p / (1.0 - p)); }

double inv_logit(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

double signed_pow(double s, double q) {
  if (s == 0.0) return 0.0;
  return (s < 0.0 ? -1.0 : 1.0) * std::pow(std::fabs(s), q);
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw std::invalid_argument("quantile of empty vector");
  std::sort(v.begin(), v.end());
  double pos = q * (v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= v.size()) return v.back();
  double frac = pos - lo;
  return v[lo] * (1.0 - frac) + v[lo + 1] * frac;
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> start, double step,
                             double tol, int max_evals) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, std::vector<double>(start.begin(), start.end()));
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> fv(n + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i) { fv[i] = f(pts[i]); ++evals; }

  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d = std::max(d, std::fabs(pts[i][j] - pts[0][j]));
    return d;
  };

  NelderMeadResult res;
  while (evals < max_evals) {
    // order
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> spts(n + 1);
    std::vector<double> sfv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) { spts[i] = pts[idx[i]]; sfv[i] = fv[idx[i]]; }
    pts = std::move(spts);
    fv = std::move(sfv);

    if (diameter() < tol) { res.converged = true; break; }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / n;

    auto mix = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j)
        x[j] = centroid[j] + coef * (pts[n][j] - centroid[j]);
      return x;
    };

    auto xr = mix(-1.0);
    double fr = f(xr); ++evals;
    if (fr < fv[0]) {
      auto xe = mix(-2.0);
      double fe = f(xe); ++evals;
      if (fe < fr) { pts[n] = xe; fv[n] = fe; }
      else { pts[n] = xr; fv[n] = fr; }
    } else if (fr < fv[n - 1]) {
      pts[n] = xr; fv[n] = fr;
    } else {
      auto xc = mix(fr < fv[n] ? -0.5 : 0.5);
      double fc = f(xc); ++evals;
      if (fc < std::min(fr, fv[n])) {
        pts[n] = xc; fv[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
          fv[i] = f(pts[i]); ++evals;
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  res.x = pts[best];
  res.value = fv[best];
  res.evals = evals;
  return res;
}

}  // namespace wordle::math
