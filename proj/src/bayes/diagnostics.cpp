#include "wordle/bayes/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wordle::bayes {

namespace {

// Rank-normalize all sequences jointly (average ranks for ties), then map
// through the standard normal quantile (Beasley-Springer-Moro inverse).
double inv_normal_cdf(double p) {
  // Acklam's rational approximation; ample for diagnostics.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p <= phigh) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  }
  q = std::sqrt(-2 * std::log(1 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
}

std::vector<std::vector<double>> rank_normalize(
    const std::vector<std::vector<double>>& seqs) {
  std::size_t total = 0;
  for (const auto& s : seqs) total += s.size();
  struct Entry { double v; std::size_t seq, pos; };
  std::vector<Entry> all;
  all.reserve(total);
  for (std::size_t s = 0; s < seqs.size(); ++s)
    for (std::size_t i = 0; i < seqs[s].size(); ++i)
      all.push_back({seqs[s][i], s, i});
  std::sort(all.begin(), all.end(),
            [](const Entry& a, const Entry& b) { return a.v < b.v; });

  auto out = seqs;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].v == all[i].v) ++j;
    double avg_rank = (static_cast<double>(i) + static_cast<double>(j - 1)) / 2.0 + 1.0;
    double z = inv_normal_cdf((avg_rank - 0.375) / (total + 0.25));
    for (std::size_t k = i; k < j; ++k) out[all[k].seq][all[k].pos] = z;
    i = j;
  }
  return out;
}

struct SplitStats {
  double rhat;
  double w;  // within-chain variance
  double var_plus;
};

SplitStats split_rhat(const std::vector<std::vector<double>>& seqs) {
  const std::size_t m = seqs.size();
  const std::size_t n = seqs[0].size();
  std::vector<double> means(m), vars(m);
  for (std::size_t c = 0; c < m; ++c) {
    double mu = std::accumulate(seqs[c].begin(), seqs[c].end(), 0.0) / n;
    double v = 0.0;
    for (double x : seqs[c]) v += (x - mu) * (x - mu);
    means[c] = mu;
    vars[c] = v / (n - 1);
  }
  double grand = std::accumulate(means.begin(), means.end(), 0.0) / m;
  double b = 0.0;
  for (double mu : means) b += (mu - grand) * (mu - grand);
  b *= static_cast<double>(n) / (m - 1);
  double w = std::accumulate(vars.begin(), vars.end(), 0.0) / m;
  double var_plus = (n - 1.0) / n * w + b / n;
  double rhat = w > 0 ? std::sqrt(var_plus / w)
                      : std::numeric_limits<double>::quiet_NaN();
  return {rhat, w, var_plus};
}

double ess_of(const std::vector<std::vector<double>>& seqs, double var_plus) {
  // Geyer initial-monotone positive-sequence estimator on the mean
  // autocorrelation across chains.
  const std::size_t m = seqs.size();
  const std::size_t n = seqs[0].size();
  if (var_plus <= 0 || !std::isfinite(var_plus))
    return std::numeric_limits<double>::quiet_NaN();

  std::vector<double> means(m);
  for (std::size_t c = 0; c < m; ++c)
    means[c] = std::accumulate(seqs[c].begin(), seqs[c].end(), 0.0) / n;

  auto acov = [&](std::size_t c, std::size_t lag) {
    double s = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i)
      s += (seqs[c][i] - means[c]) * (seqs[c][i + lag] - means[c]);
    return s / n;
  };

  double w = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    double v = 0.0;
    for (double x : seqs[c]) v += (x - means[c]) * (x - means[c]);
    w += v / (n - 1);
  }
  w /= m;

  double rho_sum = 0.0;
  double prev_pair = std::numeric_limits<double>::infinity();
  for (std::size_t lag = 1; lag + 1 < n; lag += 2) {
    // mean autocovariance across chains at the two lags of this pair
    double g1 = 0.0, g2 = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      g1 += acov(c, lag);
      g2 += acov(c, lag + 1);
    }
    g1 /= m;
    g2 /= m;
    double rho_a = 1.0 - (w - g1) / var_plus;
    double rho_b = 1.0 - (w - g2) / var_plus;
    double pair = rho_a + rho_b;
    if (pair < 0) break;
    pair = std::min(pair, prev_pair);  // enforce monotone decrease
    prev_pair = pair;
    rho_sum += pair;
  }
  double tau = 1.0 + 2.0 * rho_sum;
  double total = static_cast<double>(m * n);
  return total / std::max(tau, 1e-12);
}

}  // namespace

std::vector<ParamDiagnostics> diagnostics(const PosteriorChains& chains) {
  if (chains.chains.size() < 2)
    throw std::invalid_argument("diagnostics: need >= 2 chains");
  if (chains.n_draws < 100)
    throw std::invalid_argument("diagnostics: need >= 100 kept draws");

  const std::size_t n_param = chains.n_params();
  const std::size_t half = chains.n_draws / 2;
  std::vector<ParamDiagnostics> out;
  out.reserve(n_param);

  for (std::size_t p = 0; p < n_param; ++p) {
    // split each chain in half
    std::vector<std::vector<double>> seqs;
    for (std::size_t c = 0; c < chains.chains.size(); ++c) {
      std::vector<double> first, second;
      for (std::size_t d = 0; d < half; ++d)
        first.push_back(chains.at(c, d, p));
      for (std::size_t d = half; d < 2 * half; ++d)
        second.push_back(chains.at(c, d, p));
      seqs.push_back(std::move(first));
      seqs.push_back(std::move(second));
    }
    // constant chains: R-hat undefined
    bool constant = true;
    double v0 = seqs[0][0];
    for (const auto& s : seqs)
      for (double x : s)
        if (x != v0) { constant = false; break; }

    ParamDiagnostics d;
    d.name = chains.param_names[p];
    if (constant) {
      d.rhat = std::numeric_limits<double>::quiet_NaN();
      d.ess = std::numeric_limits<double>::quiet_NaN();
    } else {
      auto ranked = rank_normalize(seqs);
      auto st = split_rhat(ranked);
      d.rhat = st.rhat;
      d.ess = ess_of(ranked, st.var_plus);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace wordle::bayes
