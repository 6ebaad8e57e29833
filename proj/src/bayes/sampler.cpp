#include "wordle/bayes/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wordle/rng.hpp"

namespace wordle::bayes {

std::vector<double> PosteriorChains::merged(std::size_t param) const {
  std::vector<double> out;
  out.reserve(chains.size() * n_draws);
  for (const auto& c : chains)
    for (int d = 0; d < n_draws; ++d)
      out.push_back(c[d * n_params() + param]);
  return out;
}

std::size_t PosteriorChains::param_index(const std::string& name) const {
  for (std::size_t i = 0; i < param_names.size(); ++i)
    if (param_names[i] == name) return i;
  throw std::invalid_argument("no such parameter: " + name);
}

void ScaleAdapter::adapt(int batch) {
  double delta = std::min(0.25, 1.0 / std::sqrt(static_cast<double>(batch + 1)));
  for (std::size_t i = 0; i < scale_.size(); ++i) {
    if (proposed_[i] == 0) continue;
    double rate = static_cast<double>(accepted_[i]) / proposed_[i];
    if (rate > 0.45) scale_[i] *= std::exp(delta);
    else if (rate < 0.25) scale_[i] *= std::exp(-delta);
    accepted_[i] = 0;
    proposed_[i] = 0;
  }
}

double ScaleAdapter::overall_acceptance() const {
  long long acc = 0, prop = 0;
  for (std::size_t i = 0; i < scale_.size(); ++i) {
    acc += accepted_[i];
    prop += proposed_[i];
  }
  return prop == 0 ? 0.0 : static_cast<double>(acc) / prop;
}

PosteriorChains mcmc_sample(
    const std::function<double(std::span<const double>)>& target,
    std::span<const double> init, const McmcConfig& config,
    std::vector<std::string> param_names,
    const std::vector<ExtraMove>& extra_moves) {
  const std::size_t dim = init.size();
  if (dim == 0) throw std::invalid_argument("mcmc_sample: empty parameter vector");
  if (config.chains < 2) throw std::invalid_argument("mcmc_sample: need >= 2 chains");
  if (param_names.empty())
    for (std::size_t i = 0; i < dim; ++i)
      param_names.push_back("p" + std::to_string(i + 1));
  if (param_names.size() != dim)
    throw std::invalid_argument("mcmc_sample: name/parameter count mismatch");

  {
    double f0 = target(init);
    if (!std::isfinite(f0))
      throw std::invalid_argument("mcmc_sample: log posterior not finite at init");
  }

  PosteriorChains out;
  out.param_names = std::move(param_names);
  out.n_draws = config.draws;
  out.warmup = config.warmup;
  out.seed = config.seed;
  out.chains.assign(config.chains, {});
  out.acceptance.assign(config.chains, 0.0);
  std::vector<char> collapsed(config.chains, 0);

  const int batch_size = 50;
#pragma omp parallel for schedule(static)
  for (int chain = 0; chain < config.chains; ++chain) {
    auto rng = make_stream(config.seed, 1000 + static_cast<std::uint64_t>(chain));
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 1.0);

    std::vector<double> x(init.begin(), init.end());
    // jittered init, redrawn until the target is finite
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<double> cand(init.begin(), init.end());
      for (auto& v : cand) v += config.init_jitter * nd(rng);
      if (std::isfinite(target(cand))) { x = cand; break; }
    }
    double fx = target(x);

    ScaleAdapter adapter(dim + extra_moves.size());
    long long warm_acc = 0, warm_prop = 0, kept_acc = 0, kept_prop = 0;
    auto& store = out.chains[chain];
    store.reserve(static_cast<std::size_t>(config.draws) * dim);

    for (int iter = 0; iter < config.warmup + config.draws; ++iter) {
      bool warming = iter < config.warmup;
      for (std::size_t j = 0; j < dim; ++j) {
        double old = x[j];
        x[j] = old + adapter.scale(j) * nd(rng);
        double fy = target(x);
        bool accept = std::log(ud(rng)) < fy - fx;
        if (accept) fx = fy;
        else x[j] = old;
        if (warming) {
          adapter.record(j, accept);
          warm_prop++; warm_acc += accept;
        } else {
          kept_prop++; kept_acc += accept;
        }
      }
      for (std::size_t m = 0; m < extra_moves.size(); ++m) {
        std::size_t site = dim + m;
        std::vector<double> cand = x;
        double corr = extra_moves[m].apply(cand, adapter.scale(site) * nd(rng));
        bool accept = false;
        if (std::isfinite(corr)) {
          double fy = target(cand);
          accept = std::log(ud(rng)) < fy - fx + corr;
          if (accept) { x = std::move(cand); fx = fy; }
        }
        if (warming) {
          adapter.record(site, accept);
          warm_prop++; warm_acc += accept;
        } else {
          kept_prop++; kept_acc += accept;
        }
      }
      if (warming && (iter + 1) % batch_size == 0)
        adapter.adapt((iter + 1) / batch_size);
      if (!warming)
        store.insert(store.end(), x.begin(), x.end());
    }
    out.acceptance[chain] =
        kept_prop == 0 ? 0.0 : static_cast<double>(kept_acc) / kept_prop;
    if (warm_prop > 0 && static_cast<double>(warm_acc) / warm_prop < 0.01)
      collapsed[chain] = 1;
  }

  for (int chain = 0; chain < config.chains; ++chain)
    if (collapsed[chain])
      throw std::runtime_error(
          "mcmc_sample: warmup acceptance below 1% on chain " +
          std::to_string(chain) + "; consider re-parameterizing the target");
  return out;
}

}  // namespace wordle::bayes
