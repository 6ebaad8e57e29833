#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wordle::bayes {

struct McmcConfig {
  int chains = 4;
  int warmup = 1000;
  int draws = 1000;
  std::uint64_t seed = 0;
  double init_jitter = 0.5;  // sd of the per-chain init perturbation
};

// Per-submodel (or per-target) posterior draws.  Warmup is excluded.
struct PosteriorChains {
  std::vector<std::string> param_names;
  // chains[c] is draws x params, row-major.
  std::vector<std::vector<double>> chains;
  int n_draws = 0;
  int warmup = 0;
  std::uint64_t seed = 0;
  std::vector<double> acceptance;  // mean acceptance per chain

  std::size_t n_params() const { return param_names.size(); }
  double at(std::size_t chain, std::size_t draw, std::size_t param) const {
    return chains[chain][draw * n_params() + param];
  }
  // All kept draws of one parameter, chains concatenated in index order.
  std::vector<double> merged(std::size_t param) const;
  std::size_t param_index(const std::string& name) const;
};

// A joint proposal used alongside the single-site sweep, typically a
// translation along a weakly identified ridge of the posterior.  `apply`
// mutates the vector for a scalar step drawn N(0, adapted scale) and
// returns the log proposal correction log q(v|v') - log q(v'|v) (-inf to
// reject outright, 0 for symmetric moves).
struct ExtraMove {
  std::function<double(std::vector<double>& v, double step)> apply;
};

// Adaptive random-walk Metropolis with per-coordinate proposal scales,
// single-site sweeps.  Scales adapt during warmup toward 0.25-0.45
// acceptance and freeze afterwards.  The target acts on an unconstrained
// vector; constrained parameters should be passed through log /
// stick-breaking style transforms with the Jacobian folded into `target`.
// Chains start from `init` plus seed-derived jitter and run independently.
// Throws if warmup acceptance collapses below 1%.
PosteriorChains mcmc_sample(
    const std::function<double(std::span<const double>)>& target,
    std::span<const double> init, const McmcConfig& config,
    std::vector<std::string> param_names = {},
    const std::vector<ExtraMove>& extra_moves = {});

// --- adaptation helper shared by the structured submodel samplers ---
class ScaleAdapter {
 public:
  explicit ScaleAdapter(std::size_t n, double initial = 0.5)
      : scale_(n, initial), accepted_(n, 0), proposed_(n, 0) {}

  double scale(std::size_t i) const { return scale_[i]; }
  void record(std::size_t i, bool accepted) {
    ++proposed_[i];
    if (accepted) ++accepted_[i];
  }
  // Call at the end of each warmup batch; nudges scales toward the
  // 0.25-0.45 acceptance window.
  void adapt(int batch);
  double overall_acceptance() const;

 private:
  std::vector<double> scale_;
  std::vector<long long> accepted_, proposed_;
};

}  // namespace wordle::bayes
