#include "wordle/bayes/predict.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wordle/mathutil.hpp"
#include "wordle/rng.hpp"

namespace wordle::bayes {

namespace {
// Draw index -> (chain, row) walking chains in index order.
struct DrawCursor {
  const PosteriorChains& chains;
  std::size_t total() const {
    return chains.chains.size() * static_cast<std::size_t>(chains.n_draws);
  }
  double value(std::size_t flat, std::size_t param) const {
    std::size_t per = static_cast<std::size_t>(chains.n_draws);
    return chains.at(flat / per, flat % per, param);
  }
};
}  // namespace

std::vector<long long> predict_reports(const PosteriorChains& chains,
                                       const std::array<double, 4>& x, double T,
                                       int day_of_week, std::uint64_t seed) {
  DrawCursor cur{chains};
  auto rng = make_stream(seed, 11);
  std::vector<long long> out;
  out.reserve(cur.total());

  std::size_t ib = chains.param_index("b1");
  std::size_t itheta = chains.param_index("theta1");
  std::size_t igamma = chains.param_index("gamma1");
  std::size_t iB = chains.param_index("B");

  for (std::size_t k = 0; k < cur.total(); ++k) {
    std::array<double, 4> b;
    std::array<double, 7> theta;
    std::array<double, 5> gamma;
    for (int j = 0; j < 4; ++j) b[j] = cur.value(k, ib + j);
    for (int j = 0; j < 7; ++j) theta[j] = cur.value(k, itheta + j);
    for (int j = 0; j < 5; ++j) gamma[j] = cur.value(k, igamma + j);
    double B = cur.value(k, iB);

    double eta = reports_trend(gamma, T) + periodic_effect(theta, day_of_week) +
                 scalar_linear(b, x);
    if (eta > 700.0)
      throw std::runtime_error("predict_reports: mean overflow (exp argument > 700)");
    double mu = std::exp(eta);
    out.push_back(math::sample_neg_binomial(rng, mu, B));
  }
  return out;
}

std::vector<TryDraw> predict_try(const PosteriorChains& chains,
                                 const std::array<double, 4>& x,
                                 const std::vector<long long>& n_draws,
                                 std::uint64_t seed) {
  if (n_draws.empty()) throw std::invalid_argument("predict_try: no report draws");
  DrawCursor cur{chains};
  auto rng = make_stream(seed, 12);
  std::vector<TryDraw> out;
  out.reserve(cur.total());

  std::size_t ia = chains.param_index("a0_1");
  std::size_t isigma = chains.param_index("sigma");

  for (std::size_t k = 0; k < cur.total(); ++k) {
    std::array<std::array<double, 7>, 5> a;
    for (int kk = 0; kk < 5; ++kk)
      for (int i = 0; i < 7; ++i) a[kk][i] = cur.value(k, ia + kk * 7 + i);
    double sigma = cur.value(k, isigma);

    auto dtry = try_linear(a, x);
    std::array<double, 7> conc;
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int i = 0; i < 7; ++i)
      conc[i] = std::exp(dtry[i] + sigma * nd(rng));

    TryDraw draw;
    math::sample_dirichlet(rng, conc, draw.p);
    long long n = n_draws[k % n_draws.size()];
    auto counts = math::sample_multinomial(rng, n, draw.p);
    for (int i = 0; i < 7; ++i) draw.counts[i] = counts[i];
    out.push_back(draw);
  }
  return out;
}

std::vector<long long> predict_hardmoders(const PosteriorChains& chains,
                                          const std::array<double, 4>& x, double T,
                                          int day_of_week,
                                          const std::vector<long long>& n_draws,
                                          std::uint64_t seed) {
  if (n_draws.empty())
    throw std::invalid_argument("predict_hardmoders: no report draws");
  DrawCursor cur{chains};
  auto rng = make_stream(seed, 13);
  std::vector<long long> out;
  out.reserve(cur.total());

  std::size_t ic = chains.param_index("c1");
  std::size_t iomega = chains.param_index("omega1");
  std::size_t ilambda = chains.param_index("lambda1");
  std::size_t ikappa = chains.param_index("kappa");

  for (std::size_t k = 0; k < cur.total(); ++k) {
    std::array<double, 4> c;
    std::array<double, 7> omega;
    std::array<double, 4> lambda;
    for (int j = 0; j < 4; ++j) c[j] = cur.value(k, ic + j);
    for (int j = 0; j < 7; ++j) omega[j] = cur.value(k, iomega + j);
    for (int j = 0; j < 4; ++j) lambda[j] = cur.value(k, ilambda + j);
    double kappa = cur.value(k, ikappa);

    double eta = math::inv_logit(hardmoders_trend(lambda, T) +
                                 periodic_effect(omega, day_of_week) +
                                 scalar_linear(c, x));
    eta = std::clamp(eta, 1e-12, 1.0 - 1e-12);
    double p = math::sample_beta(rng, eta * kappa, (1.0 - eta) * kappa);
    long long n = n_draws[k % n_draws.size()];
    out.push_back(n > 0 ? math::sample_binomial(rng, n, p) : 0);
  }
  return out;
}

}  // namespace wordle::bayes
