#pragma once

#include <string>
#include <vector>

#include "wordle/bayes/sampler.hpp"

namespace wordle::bayes {

struct ParamDiagnostics {
  std::string name;
  double rhat = 0.0;  // NaN when chains have zero variance
  double ess = 0.0;
};

// Split rank-normalized R-hat and bulk ESS.  Requires >= 2 chains and
// >= 100 kept draws per chain.
std::vector<ParamDiagnostics> diagnostics(const PosteriorChains& chains);

}  // namespace wordle::bayes
