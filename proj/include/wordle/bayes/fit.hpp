#pragma once

#include "wordle/bayes/model.hpp"
#include "wordle/bayes/sampler.hpp"

namespace wordle::bayes {

// Structured samplers for the three submodels, targeting the marginals of
// the corresponding *_log_posterior.  The Try sampler collapses the per-day
// simplexes into Dirichlet-multinomial likelihoods and runs adaptive
// random-walk moves on the remaining state (including joint ridge /
// interweave moves along the weakly identified directions); the Hardmoders
// sampler likewise collapses the per-day probabilities into Beta-binomial
// likelihoods; the Reports model has no latents and uses the generic
// sampler.  Chains run
// independently (OpenMP) with seed-derived RNG streams and merge
// deterministically by chain index.

// Try model globals: a0_1..a0_7, a1_1..a1_7, ..., a4_7, sigma (36 columns).
PosteriorChains fit_try(const ModelData& data, const McmcConfig& config);

// Reports model: b1..b4, theta1..theta7, gamma1..gamma5, B (17 columns).
// Sampled with the generic mcmc_sample (no latents in this submodel).
PosteriorChains fit_reports(const ModelData& data, const McmcConfig& config);

// Hardmoders model: c1..c4, omega1..omega7, lambda1..lambda4, kappa
// (16 columns).
PosteriorChains fit_hardmoders(const ModelData& data, const McmcConfig& config);

}  // namespace wordle::bayes
