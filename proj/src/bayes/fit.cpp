#include "wordle/bayes/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wordle/mathutil.hpp"
#include "wordle/rng.hpp"

namespace wordle::bayes {

namespace {

std::vector<std::string> try_param_names() {
  std::vector<std::string> names;
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 7; ++i)
      names.push_back("a" + std::to_string(k) + "_" + std::to_string(i + 1));
  names.push_back("sigma");
  return names;
}

std::vector<std::string> reports_param_names() {
  std::vector<std::string> names;
  for (int k = 0; k < 4; ++k) names.push_back("b" + std::to_string(k + 1));
  for (int i = 0; i < 7; ++i) names.push_back("theta" + std::to_string(i + 1));
  for (int k = 0; k < 5; ++k) names.push_back("gamma" + std::to_string(k + 1));
  names.push_back("B");
  return names;
}

std::vector<std::string> hardmoders_param_names() {
  std::vector<std::string> names;
  for (int k = 0; k < 4; ++k) names.push_back("c" + std::to_string(k + 1));
  for (int i = 0; i < 7; ++i) names.push_back("omega" + std::to_string(i + 1));
  for (int k = 0; k < 4; ++k) names.push_back("lambda" + std::to_string(k + 1));
  names.push_back("kappa");
  return names;
}

constexpr double kCoefPriorSd = 20.0;

// Hard support bound on the log concentrations.  Outside +-300, exp() and
// lgamma() degrade into inf/NaN one-way valves that break detailed balance
// and let sigma run away; the posterior mass beyond the bound is below
// 1e-100, so truncating there is numerically invisible.
constexpr double kLnABound = 300.0;

double log_normal_term(double x, double mu, double sigma) {
  double z = (x - mu) / sigma;
  return -0.5 * z * z - std::log(sigma);
}

// lgamma(x + k) - lgamma(x) without cancellation.  The direct difference
// loses all significant digits once lgamma(x) ~ 1e16; past 1e8 a Stirling
// expansion of the difference keeps the absolute error near k*log(x)*1e-16.
double lgamma_diff(double x, double k) {
  if (k == 0.0) return 0.0;
  if (x < 1e8) return std::lgamma(x + k) - std::lgamma(x);
  double q = k / x;
  return k * std::log(x) + (x + k - 0.5) * std::log1p(q) - k +
         (1.0 / (x + k) - 1.0 / x) / 12.0;
}

// Dirichlet-multinomial log likelihood of one day's try counts given the
// log concentrations, up to the t-only multinomial constant.  The simplex
// is integrated out analytically, which keeps every term bounded by
// O(n log A) -- evaluating the Dirichlet density itself at extreme
// concentrations is numerically hopeless.
double log_dir_mult(const std::array<double, 7>& ln_a,
                    const std::array<long long, 7>& t, long long n) {
  if (n == 0) return 0.0;
  double sum_a = 0.0;
  for (int j = 0; j < 7; ++j) sum_a += std::exp(ln_a[j]);
  double v = -lgamma_diff(sum_a, static_cast<double>(n));
  for (int j = 0; j < 7; ++j)
    if (t[j] > 0)
      v += lgamma_diff(std::exp(ln_a[j]), static_cast<double>(t[j]));
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Try model
// ---------------------------------------------------------------------------

PosteriorChains fit_try(const ModelData& data, const McmcConfig& config) {
  const std::size_t days = data.days.size();
  if (days == 0) throw std::invalid_argument("fit_try: no data");
  if (config.chains < 2) throw std::invalid_argument("fit_try: need >= 2 chains");

  PosteriorChains out;
  out.param_names = try_param_names();
  out.n_draws = config.draws;
  out.warmup = config.warmup;
  out.seed = config.seed;
  out.chains.assign(config.chains, {});
  out.acceptance.assign(config.chains, 0.0);
  std::vector<char> collapsed(config.chains, 0);

  const std::size_t n_latent_sites = days * 7;
  // latents + 35 coefficients + sigma + 35 coefficient/latent ridge moves
  // + 5 per-predictor concentration-scale moves + the sigma interweave
  const std::size_t n_sites = n_latent_sites + 35 + 1 + 35 + 5 + 1;
  const int batch_size = 50;

  std::vector<long long> n_tries(days, 0);
  for (std::size_t d = 0; d < days; ++d)
    for (int i = 0; i < 7; ++i) n_tries[d] += data.days[d].t[i];

#pragma omp parallel for schedule(static)
  for (int chain = 0; chain < config.chains; ++chain) {
    auto rng = make_stream(config.seed, 2000 + static_cast<std::uint64_t>(chain));
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 1.0);

    // state
    std::array<std::array<double, 7>, 5> a{};
    for (int k = 0; k < 5; ++k)
      for (int i = 0; i < 7; ++i) a[k][i] = 0.2 * config.init_jitter * nd(rng);
    double log_sigma = 0.3 * config.init_jitter * nd(rng);

    std::vector<std::array<double, 7>> dtry(days);
    for (std::size_t d = 0; d < days; ++d)
      dtry[d] = try_linear(a, data.days[d].x);

    // latents (log concentrations); the simplex itself is integrated out,
    // so each day's likelihood is the Dirichlet-multinomial ld[d]
    std::vector<std::array<double, 7>> ln_a(days);
    for (std::size_t d = 0; d < days; ++d)
      for (int i = 0; i < 7; ++i)
        ln_a[d][i] = 0.2 * config.init_jitter * nd(rng);
    std::vector<double> ld(days);
    for (std::size_t d = 0; d < days; ++d)
      ld[d] = log_dir_mult(ln_a[d], data.days[d].t, n_tries[d]);

    ScaleAdapter adapter(n_sites);
    long long warm_acc = 0, warm_prop = 0, kept_acc = 0, kept_prop = 0;
    auto& store = out.chains[chain];
    store.reserve(static_cast<std::size_t>(config.draws) * out.param_names.size());

    for (int iter = 0; iter < config.warmup + config.draws; ++iter) {
      bool warming = iter < config.warmup;
      double sigma = std::exp(log_sigma);

      if (iter % 200 == 199)  // flush incremental-update drift
        for (std::size_t d = 0; d < days; ++d)
          dtry[d] = try_linear(a, data.days[d].x);

      // 1. single-site MH on ln A_{d,i}
      for (std::size_t d = 0; d < days; ++d) {
        for (int i = 0; i < 7; ++i) {
          std::size_t site = d * 7 + i;
          double old = ln_a[d][i];
          double cand = old + adapter.scale(site) * nd(rng);
          bool accept = false;
          if (std::abs(cand) <= kLnABound) {
            ln_a[d][i] = cand;
            double ld_new = log_dir_mult(ln_a[d], data.days[d].t, n_tries[d]);
            ln_a[d][i] = old;
            double delta = log_normal_term(cand, dtry[d][i], sigma) -
                           log_normal_term(old, dtry[d][i], sigma) +
                           ld_new - ld[d];
            accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
            if (accept) {
              ln_a[d][i] = cand;
              ld[d] = ld_new;
            }
          }
          if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
          else { ++kept_prop; kept_acc += accept; }
        }
      }

      // 2. single-site MH on the regression coefficients
      for (int k = 0; k < 5; ++k) {
        for (int i = 0; i < 7; ++i) {
          std::size_t site = n_latent_sites + k * 7 + i;
          double old = a[k][i];
          double step = adapter.scale(site) * nd(rng);
          double cand = old + step;
          double delta = log_normal_term(cand, 0.0, kCoefPriorSd) -
                         log_normal_term(old, 0.0, kCoefPriorSd);
          for (std::size_t d = 0; d < days; ++d) {
            double xk = k == 0 ? 1.0 : data.days[d].x[k - 1];
            double mu_new = dtry[d][i] + step * xk;
            delta += log_normal_term(ln_a[d][i], mu_new, sigma) -
                     log_normal_term(ln_a[d][i], dtry[d][i], sigma);
          }
          bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
          if (accept) {
            a[k][i] = cand;
            for (std::size_t d = 0; d < days; ++d) {
              double xk = k == 0 ? 1.0 : data.days[d].x[k - 1];
              dtry[d][i] += step * xk;
            }
          }
          if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
          else { ++kept_prop; kept_acc += accept; }
        }
      }

      // 3. MH on log sigma (Exponential(1) prior + Jacobian)
      {
        std::size_t site = n_latent_sites + 35;
        double cand = log_sigma + adapter.scale(site) * nd(rng);
        double s_old = std::exp(log_sigma), s_new = std::exp(cand);
        double delta = -(s_new - s_old) + (cand - log_sigma);  // prior + Jacobian
        for (std::size_t d = 0; d < days; ++d)
          for (int i = 0; i < 7; ++i)
            delta += log_normal_term(ln_a[d][i], dtry[d][i], s_new) -
                     log_normal_term(ln_a[d][i], dtry[d][i], s_old);
        bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
        if (accept) log_sigma = cand;
        if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      }

      // 4. ridge moves: a coefficient a_{k,i} and the per-day latents
      // lnA_{d,i} shift together (by step * x_{d,k}), so the
      // Normal(lnA | dtry, sigma) terms are invariant; only the coefficient
      // prior and the per-day likelihoods change.
      for (int k = 0; k < 5; ++k) {
        for (int i = 0; i < 7; ++i) {
          std::size_t site = n_latent_sites + 36 + k * 7 + i;
          double step = adapter.scale(site) * nd(rng);
          double delta = log_normal_term(a[k][i] + step, 0.0, kCoefPriorSd) -
                         log_normal_term(a[k][i], 0.0, kCoefPriorSd);
          std::vector<double> ld_new(days);
          for (std::size_t d = 0; d < days; ++d) {
            double xk = k == 0 ? 1.0 : data.days[d].x[k - 1];
            std::array<double, 7> cand = ln_a[d];
            cand[i] += step * xk;
            if (std::abs(cand[i]) > kLnABound) {
              delta = -std::numeric_limits<double>::infinity();
              break;
            }
            ld_new[d] = log_dir_mult(cand, data.days[d].t, n_tries[d]);
            delta += ld_new[d] - ld[d];
          }
          bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
          if (accept) {
            a[k][i] += step;
            for (std::size_t d = 0; d < days; ++d) {
              double xk = k == 0 ? 1.0 : data.days[d].x[k - 1];
              ln_a[d][i] += step * xk;
              dtry[d][i] += step * xk;
              ld[d] = ld_new[d];
            }
          }
          if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
          else { ++kept_prop; kept_acc += accept; }
        }
      }

      // 5. concentration-scale moves: all seven a_{k,.} and the matching
      // latents shift together, sliding the overall Dirichlet concentration
      // along predictor k without moving the category contrasts.
      auto conc_scale_move = [&](int k) {
        std::size_t site = n_latent_sites + 71 + k;
        double step = adapter.scale(site) * nd(rng);
        double delta = 0.0;
        for (int i = 0; i < 7; ++i)
          delta += log_normal_term(a[k][i] + step, 0.0, kCoefPriorSd) -
                   log_normal_term(a[k][i], 0.0, kCoefPriorSd);
        std::vector<double> ld_new(days);
        for (std::size_t d = 0; d < days; ++d) {
          double xk = k == 0 ? 1.0 : data.days[d].x[k - 1];
          std::array<double, 7> cand = ln_a[d];
          bool in_range = true;
          for (int j = 0; j < 7; ++j) {
            cand[j] += step * xk;
            in_range = in_range && std::abs(cand[j]) <= kLnABound;
          }
          if (!in_range) {
            delta = -std::numeric_limits<double>::infinity();
            break;
          }
          ld_new[d] = log_dir_mult(cand, data.days[d].t, n_tries[d]);
          delta += ld_new[d] - ld[d];
        }
        bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
        if (accept) {
          for (int i = 0; i < 7; ++i) a[k][i] += step;
          for (std::size_t d = 0; d < days; ++d) {
            double xk = k == 0 ? 1.0 : data.days[d].x[k - 1];
            for (int i = 0; i < 7; ++i) {
              ln_a[d][i] += step * xk;
              dtry[d][i] += step * xk;
            }
            ld[d] = ld_new[d];
          }
        }
        if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      };
      for (int k = 0; k < 5; ++k) conc_scale_move(k);

      // 6. sigma interweave: rescale the latent residuals together with
      // sigma (lnA' = dtry + e^step (lnA - dtry)).  The Normal terms cancel
      // against the transformation Jacobian, leaving the sigma prior (plus
      // its log-scale Jacobian) and the per-day likelihoods.
      auto interweave_move = [&]() {
        std::size_t site = n_sites - 1;
        double step = adapter.scale(site) * nd(rng);
        double r = std::exp(step);
        double s_old = std::exp(log_sigma);
        double s_new = s_old * r;
        double delta = -(s_new - s_old) + step;
        std::vector<std::array<double, 7>> ln_a_new(days);
        std::vector<double> ld_new(days);
        for (std::size_t d = 0; d < days; ++d) {
          bool in_range = true;
          for (int j = 0; j < 7; ++j) {
            ln_a_new[d][j] = dtry[d][j] + r * (ln_a[d][j] - dtry[d][j]);
            in_range = in_range && std::abs(ln_a_new[d][j]) <= kLnABound;
          }
          if (!in_range) {
            delta = -std::numeric_limits<double>::infinity();
            break;
          }
          ld_new[d] = log_dir_mult(ln_a_new[d], data.days[d].t, n_tries[d]);
          delta += ld_new[d] - ld[d];
        }
        bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
        if (accept) {
          log_sigma += step;
          ln_a = std::move(ln_a_new);
          ld = std::move(ld_new);
        }
        if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      };
      interweave_move();

      // the intercept-level/sigma subspace is the slowest direction
      // (Dirichlet-multinomial saturation leaves it mostly prior-driven),
      // so give that pair extra sweeps -- they cost O(days) each.
      for (int rep = 0; rep < 3; ++rep) {
        conc_scale_move(0);
        interweave_move();
      }

      if (warming && (iter + 1) % batch_size == 0)
        adapter.adapt((iter + 1) / batch_size);

      if (!warming) {
        for (int k = 0; k < 5; ++k)
          for (int i = 0; i < 7; ++i) store.push_back(a[k][i]);
        store.push_back(std::exp(log_sigma));
      }
    }
    out.acceptance[chain] =
        kept_prop == 0 ? 0.0 : static_cast<double>(kept_acc) / kept_prop;
    if (warm_prop > 0 && static_cast<double>(warm_acc) / warm_prop < 0.01)
      collapsed[chain] = 1;
  }

  for (int chain = 0; chain < config.chains; ++chain)
    if (collapsed[chain])
      throw std::runtime_error("fit_try: warmup acceptance below 1% on chain " +
                               std::to_string(chain));
  return out;
}

// ---------------------------------------------------------------------------
// Reports model (no latents): generic adaptive RWM on transformed params
// ---------------------------------------------------------------------------

PosteriorChains fit_reports(const ModelData& data, const McmcConfig& config) {
  if (data.days.empty()) throw std::invalid_argument("fit_reports: no data");

  // unconstrained vector: b1..b4, theta1..7, log g1..g3, log g4, g5, log B
  auto unpack = [](std::span<const double> v) {
    ReportsParams p;
    for (int k = 0; k < 4; ++k) p.b[k] = v[k];
    for (int i = 0; i < 7; ++i) p.theta[i] = v[4 + i];
    p.gamma[0] = std::exp(v[11]);
    p.gamma[1] = std::exp(v[12]);
    p.gamma[2] = std::exp(v[13]);
    p.gamma[3] = std::exp(v[14]);
    p.gamma[4] = v[15];
    p.overdispersion = std::exp(v[16]);
    return p;
  };

  auto target = [&](std::span<const double> v) {
    double jac = v[11] + v[12] + v[13] + v[14] + v[16];
    return reports_log_posterior(unpack(v), data) + jac;
  };

  double mean_n = 0.0;
  for (const auto& d : data.days) mean_n += static_cast<double>(d.n);
  mean_n /= static_cast<double>(data.days.size());

  std::vector<double> init(17, 0.0);
  init[11] = init[12] = init[13] = 0.0;                       // gamma1..3 = 1
  // gamma4 is the additive constant of the log-mean, so start it near
  // log(mean reports); v[14] holds log(gamma4)
  init[14] = std::log(std::max(std::log(std::max(mean_n, 2.0)), 0.1));
  init[16] = std::log(10.0);                                  // B = 10

  // gamma4 and the day-of-week effects are additively confounded in the
  // log-mean (only the priors separate them); translate along that ridge
  // jointly or single-site moves crawl.  The correction term is the
  // proposal asymmetry from moving gamma4 on its log scale.
  std::vector<ExtraMove> moves;
  moves.push_back({[](std::vector<double>& v, double step) {
    double g4 = std::exp(v[14]) + step;
    if (g4 <= 0.0) return -std::numeric_limits<double>::infinity();
    double v14_new = std::log(g4);
    double corr = v[14] - v14_new;
    v[14] = v14_new;
    for (int i = 4; i < 11; ++i) v[i] -= step;
    return corr;
  }});

  // trend-shape moves: changing gamma2/gamma3/gamma5 rescales the bump, so
  // compensate log gamma1 to keep the mean bump magnitude fixed.  On the
  // unconstrained coordinates these are unit-Jacobian translations; the
  // priors enter through the target.
  std::vector<double> Ts(data.days.size());
  for (std::size_t d = 0; d < data.days.size(); ++d) Ts[d] = data.days[d].T;
  auto mean_bump = [Ts](double g2, double g3, double g5) {
    double s = 0.0;
    for (double T : Ts)
      s += std::pow(std::abs(T - g5), g2) * std::exp(-(T - g5) / g3);
    return s / static_cast<double>(Ts.size());
  };
  // which: 0 shifts gamma5, 1 scales gamma2, 2 scales gamma3, 3 trades
  // gamma2 against gamma3 keeping the bump peak position gamma2*gamma3
  for (int which = 0; which < 4; ++which) {
    moves.push_back({[which, mean_bump](std::vector<double>& v, double step) {
      double g2 = std::exp(v[12]), g3 = std::exp(v[13]), g5 = v[15];
      double m_old = mean_bump(g2, g3, g5);
      if (which == 0) g5 += step;
      else if (which == 1) g2 *= std::exp(step);
      else if (which == 2) g3 *= std::exp(step);
      else { g2 *= std::exp(step); g3 *= std::exp(-step); }
      double m_new = mean_bump(g2, g3, g5);
      if (!(m_new > 0.0) || !std::isfinite(m_new) || !(m_old > 0.0))
        return -std::numeric_limits<double>::infinity();
      v[11] += std::log(m_old / m_new);
      if (which == 0) v[15] = g5;
      else if (which == 1) v[12] += step;
      else if (which == 2) v[13] += step;
      else { v[12] += step; v[13] -= step; }
      return 0.0;
    }});
  }
  // these directions are the slow ones; give each move several slots (each
  // with its own adapted scale) so they run multiple times per sweep
  {
    auto base = moves;
    for (int rep = 0; rep < 2; ++rep)
      for (const auto& m : base) moves.push_back(m);
  }

  McmcConfig cfg = config;
  auto raw = mcmc_sample(target, init, cfg, reports_param_names(), moves);

  // store constrained values
  for (auto& chain : raw.chains) {
    const std::size_t np = raw.n_params();
    for (std::size_t d = 0; d < static_cast<std::size_t>(raw.n_draws); ++d) {
      for (std::size_t j : {11u, 12u, 13u, 14u, 16u})
        chain[d * np + j] = std::exp(chain[d * np + j]);
    }
  }
  return raw;
}

// ---------------------------------------------------------------------------
// Hardmoders model
// ---------------------------------------------------------------------------

PosteriorChains fit_hardmoders(const ModelData& data, const McmcConfig& config) {
  const std::size_t days = data.days.size();
  if (days == 0) throw std::invalid_argument("fit_hardmoders: no data");
  if (config.chains < 2)
    throw std::invalid_argument("fit_hardmoders: need >= 2 chains");

  PosteriorChains out;
  out.param_names = hardmoders_param_names();
  out.n_draws = config.draws;
  out.warmup = config.warmup;
  out.seed = config.seed;
  out.chains.assign(config.chains, {});
  out.acceptance.assign(config.chains, 0.0);
  std::vector<char> collapsed(config.chains, 0);

  // global sites: c(4), omega(7), log l1..l3, l4, log kappa, the
  // lambda3/omega and lambda1/lambda3 ridge translations, and the two
  // trend-shape moves (lambda4 and lambda2 with lambda1 compensation) = 20
  const std::size_t n_sites = 20;
  const int batch_size = 50;

#pragma omp parallel for schedule(static)
  for (int chain = 0; chain < config.chains; ++chain) {
    auto rng = make_stream(config.seed, 3000 + static_cast<std::uint64_t>(chain));
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 1.0);

    std::array<double, 4> c{};
    std::array<double, 7> omega{};
    std::array<double, 4> lambda = {1.0, 1.0, 1.0, 0.0};
    double log_l1 = 0.2 * config.init_jitter * nd(rng);
    double log_l2 = 0.2 * config.init_jitter * nd(rng);
    double log_l3 = 0.2 * config.init_jitter * nd(rng);
    double l4 = 0.2 * config.init_jitter * nd(rng);
    double log_kappa = std::log(50.0) + 0.3 * config.init_jitter * nd(rng);
    for (auto& v : c) v = 0.2 * config.init_jitter * nd(rng);
    for (auto& v : omega) v = 0.2 * config.init_jitter * nd(rng);
    lambda = {std::exp(log_l1), std::exp(log_l2), std::exp(log_l3), l4};

    auto linpred = [&](std::size_t d) {
      return hardmoders_trend(lambda, data.days[d].T) +
             periodic_effect(omega, data.days[d].dow) +
             scalar_linear(c, data.days[d].x);
    };
    auto eta_of = [](double lp) {
      return std::clamp(math::inv_logit(lp), 1e-12, 1.0 - 1e-12);
    };

    std::vector<double> lp_cache(days);
    for (std::size_t d = 0; d < days; ++d) lp_cache[d] = linpred(d);
    std::vector<double> ll(days, 0.0);  // per-day collapsed likelihood

    // Beta-binomial log likelihood of one day with the per-day probability
    // integrated out; evaluating the Beta density itself is numerically
    // hopeless at large kappa.
    auto day_ll = [&](std::size_t d, double lp, double kappa) {
      long long n = data.days[d].n, nh = data.days[d].nh;
      if (n == 0) return 0.0;
      double eta = eta_of(lp);
      return lgamma_diff(eta * kappa, static_cast<double>(nh)) +
             lgamma_diff((1.0 - eta) * kappa, static_cast<double>(n - nh)) -
             lgamma_diff(kappa, static_cast<double>(n));
    };
    for (std::size_t d = 0; d < days; ++d)
      ll[d] = day_ll(d, lp_cache[d], std::exp(log_kappa));

    ScaleAdapter adapter(n_sites);
    long long warm_acc = 0, warm_prop = 0, kept_acc = 0, kept_prop = 0;
    auto& store = out.chains[chain];
    store.reserve(static_cast<std::size_t>(config.draws) * out.param_names.size());

    for (int iter = 0; iter < config.warmup + config.draws; ++iter) {
      bool warming = iter < config.warmup;
      double kappa = std::exp(log_kappa);

      if (iter % 200 == 199) {  // flush incremental-update drift
        for (std::size_t d = 0; d < days; ++d) lp_cache[d] = linpred(d);
        for (std::size_t d = 0; d < days; ++d)
          ll[d] = day_ll(d, lp_cache[d], kappa);
      }

      // 1. single-site MH on globals
      auto mh_linear = [&](std::size_t site, double& coef,
                           auto&& day_factor, double prior_mu, double prior_sd) {
        double step = adapter.scale(site) * nd(rng);
        double cand = coef + step;
        double delta = log_normal_term(cand, prior_mu, prior_sd) -
                       log_normal_term(coef, prior_mu, prior_sd);
        std::vector<double> ll_new(days);
        for (std::size_t d = 0; d < days; ++d) {
          double f = day_factor(d);
          if (f == 0.0) {
            ll_new[d] = ll[d];
            continue;
          }
          ll_new[d] = day_ll(d, lp_cache[d] + step * f, kappa);
          delta += ll_new[d] - ll[d];
        }
        bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
        if (accept) {
          coef = cand;
          for (std::size_t d = 0; d < days; ++d)
            lp_cache[d] += step * day_factor(d);
          ll = std::move(ll_new);
        }
        if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      };

      for (int k = 0; k < 4; ++k)
        mh_linear(k, c[k], [&](std::size_t d) { return data.days[d].x[k]; },
                  0.0, kCoefPriorSd);
      for (int i = 0; i < 7; ++i)
        mh_linear(4 + i, omega[i],
                  [&](std::size_t d) { return data.days[d].dow == i + 1 ? 1.0 : 0.0; },
                  0.0, 1.0);

      // trend parameters change the whole trend curve; recompute it
      auto mh_trend = [&](std::size_t site, double& uncon, bool is_log,
                          double prior_term_old, double prior_term_new,
                          const std::array<double, 4>& lam_cand) {
        double delta = prior_term_new - prior_term_old;
        std::vector<double> lp_new(days), ll_new(days);
        for (std::size_t d = 0; d < days; ++d) {
          double base = lp_cache[d] - hardmoders_trend(lambda, data.days[d].T);
          lp_new[d] = base + hardmoders_trend(lam_cand, data.days[d].T);
          ll_new[d] = day_ll(d, lp_new[d], kappa);
          delta += ll_new[d] - ll[d];
        }
        bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
        if (accept) {
          lambda = lam_cand;
          lp_cache = std::move(lp_new);
          ll = std::move(ll_new);
        }
        (void)uncon; (void)is_log;
        if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
        return accept;
      };

      {  // lambda1..3 on log scale (Exp(1) prior + Jacobian), lambda4 normal
        double cand = log_l1 + adapter.scale(11) * nd(rng);
        auto lam = lambda; lam[0] = std::exp(cand);
        if (mh_trend(11, log_l1, true, -lambda[0] + log_l1, -lam[0] + cand, lam))
          log_l1 = cand;
      }
      {
        double cand = log_l2 + adapter.scale(12) * nd(rng);
        auto lam = lambda; lam[1] = std::exp(cand);
        if (mh_trend(12, log_l2, true, -lambda[1] + log_l2, -lam[1] + cand, lam))
          log_l2 = cand;
      }
      {
        double cand = log_l3 + adapter.scale(13) * nd(rng);
        auto lam = lambda; lam[2] = std::exp(cand);
        if (mh_trend(13, log_l3, true, -lambda[2] + log_l3, -lam[2] + cand, lam))
          log_l3 = cand;
      }
      {
        double cand = l4 + adapter.scale(14) * nd(rng);
        auto lam = lambda; lam[3] = cand;
        if (mh_trend(14, l4, false, log_normal_term(l4, 0.0, 1.0),
                     log_normal_term(cand, 0.0, 1.0), lam))
          l4 = cand;
      }

      {  // kappa on log scale, HalfCauchy(0.5) prior + Jacobian
        double cand = log_kappa + adapter.scale(15) * nd(rng);
        double k_new = std::exp(cand);
        double delta = math::log_half_cauchy_pdf(k_new, 0.5) -
                       math::log_half_cauchy_pdf(kappa, 0.5) +
                       (cand - log_kappa);
        std::vector<double> ll_new(days);
        for (std::size_t d = 0; d < days; ++d) {
          ll_new[d] = day_ll(d, lp_cache[d], k_new);
          delta += ll_new[d] - ll[d];
        }
        bool accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
        if (accept) {
          log_kappa = cand;
          ll = std::move(ll_new);
        }
        if (warming) { adapter.record(15, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      }

      // ridge: lambda3 and omega are additively confounded in the linear
      // predictor; translate jointly (likelihood-invariant, lp_cache
      // unchanged), only the priors enter the ratio
      auto ridge_l3_omega = [&]() {
        double step = adapter.scale(16) * nd(rng);
        double l3_new = lambda[2] + step;
        bool accept = false;
        if (l3_new > 0.0) {
          double delta = -(l3_new - lambda[2]);  // Exp(1) prior on lambda3
          for (int i = 0; i < 7; ++i)
            delta += log_normal_term(omega[i] - step, 0.0, 1.0) -
                     log_normal_term(omega[i], 0.0, 1.0);
          accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
          if (accept) {
            lambda[2] = l3_new;
            log_l3 = std::log(l3_new);
            for (auto& w : omega) w -= step;
          }
        }
        if (warming) { adapter.record(16, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      };

      // ridge: lambda1 up, lambda3 down by step * mean power term, the
      // direction along which the two trade off in the trend.  The
      // compensation factor depends only on lambda2/lambda4, which the
      // move leaves fixed, so the proposal is symmetric.
      auto ridge_l1_l3 = [&]() {
        double mean_s = 0.0;
        for (std::size_t d = 0; d < days; ++d)
          mean_s += math::signed_pow(data.days[d].T - lambda[3], lambda[1]);
        mean_s /= static_cast<double>(days);
        double step = adapter.scale(17) * nd(rng);
        auto lam = lambda;
        lam[0] = lambda[0] + step;
        lam[2] = lambda[2] - step * mean_s;
        bool accept = false;
        if (lam[0] > 0.0 && lam[2] > 0.0) {
          double delta = -(lam[0] - lambda[0]) - (lam[2] - lambda[2]);  // Exp(1)
          std::vector<double> lp_new(days), ll_new(days);
          for (std::size_t d = 0; d < days; ++d) {
            double base = lp_cache[d] - hardmoders_trend(lambda, data.days[d].T);
            lp_new[d] = base + hardmoders_trend(lam, data.days[d].T);
            ll_new[d] = day_ll(d, lp_new[d], kappa);
            delta += ll_new[d] - ll[d];
          }
          accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
          if (accept) {
            lambda = lam;
            log_l1 = std::log(lam[0]);
            log_l3 = std::log(lam[2]);
            lp_cache = std::move(lp_new);
            ll = std::move(ll_new);
          }
        }
        if (warming) { adapter.record(17, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      };

      // trend-shape moves: changing lambda4 (or lambda2) rescales every
      // power term, which single-site moves can only follow through a
      // lambda1 crawl.  Shift the parameter and rescale lambda1 to keep the
      // mean |T - lambda4|^lambda2 contribution fixed; on the unconstrained
      // (log lambda1, .) coordinates this is a unit-Jacobian translation.
      auto mean_abs_pow = [&](double l2, double l4) {
        double s = 0.0;
        for (std::size_t d = 0; d < days; ++d)
          s += std::pow(std::abs(data.days[d].T - l4), l2);
        return s / static_cast<double>(days);
      };
      auto mh_shape = [&](std::size_t site, int which) {
        double step = adapter.scale(site) * nd(rng);
        auto lam = lambda;
        double extra;
        if (which == 0) {
          lam[3] = lambda[3] + step;
          extra = log_normal_term(lam[3], 0.0, 1.0) -
                  log_normal_term(lambda[3], 0.0, 1.0);
        } else {
          lam[1] = lambda[1] * std::exp(step);
          // Exp(1) prior on lambda2 plus the log-scale Jacobian
          extra = -(lam[1] - lambda[1]) + step;
        }
        double g_old = mean_abs_pow(lambda[1], lambda[3]);
        double g_new = mean_abs_pow(lam[1], lam[3]);
        bool accept = false;
        if (g_new > 0.0 && std::isfinite(g_new)) {
          lam[0] = lambda[0] * g_old / g_new;
          double delta = extra - (lam[0] - lambda[0]) +
                         std::log(lam[0]) - std::log(lambda[0]);
          std::vector<double> lp_new(days), ll_new(days);
          for (std::size_t d = 0; d < days; ++d) {
            double base = lp_cache[d] - hardmoders_trend(lambda, data.days[d].T);
            lp_new[d] = base + hardmoders_trend(lam, data.days[d].T);
            ll_new[d] = day_ll(d, lp_new[d], kappa);
            delta += ll_new[d] - ll[d];
          }
          accept = std::isfinite(delta) && std::log(ud(rng)) < delta;
          if (accept) {
            lambda = lam;
            log_l1 = std::log(lam[0]);
            log_l2 = std::log(lam[1]);
            l4 = lam[3];
            lp_cache = std::move(lp_new);
            ll = std::move(ll_new);
          }
        }
        if (warming) { adapter.record(site, accept); ++warm_prop; warm_acc += accept; }
        else { ++kept_prop; kept_acc += accept; }
      };
      // the confounded omega/lambda directions are the slowest part of this
      // chain; run the ridge and shape moves several times per sweep (each
      // is O(days) at most)
      for (int rep = 0; rep < 3; ++rep) {
        ridge_l3_omega();
        ridge_l1_l3();
        mh_shape(18, 0);
        mh_shape(19, 1);
      }

      if (warming && (iter + 1) % batch_size == 0)
        adapter.adapt((iter + 1) / batch_size);

      if (!warming) {
        for (double v : c) store.push_back(v);
        for (double v : omega) store.push_back(v);
        for (double v : lambda) store.push_back(v);
        store.push_back(std::exp(log_kappa));
      }
    }
    out.acceptance[chain] =
        kept_prop == 0 ? 0.0 : static_cast<double>(kept_acc) / kept_prop;
    if (warm_prop > 0 && static_cast<double>(warm_acc) / warm_prop < 0.01)
      collapsed[chain] = 1;
  }

  for (int chain = 0; chain < config.chains; ++chain)
    if (collapsed[chain])
      throw std::runtime_error(
          "fit_hardmoders: warmup acceptance below 1% on chain " +
          std::to_string(chain));
  return out;
}

}  // namespace wordle::bayes
