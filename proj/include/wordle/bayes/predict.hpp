#pragma once

#include <cstdint>

#include "wordle/bayes/model.hpp"
#include "wordle/bayes/sampler.hpp"

namespace wordle::bayes {

struct TryDraw {
  std::array<double, 7> p{};
  std::array<long long, 7> counts{};
};

// One posterior predictive draw per kept posterior draw, cycling through
// `n_draws` for the report totals (Reports predictive feeds the Try and
// Hardmoders predictives).

std::vector<long long> predict_reports(const PosteriorChains& chains,
                                       const std::array<double, 4>& x, double T,
                                       int day_of_week, std::uint64_t seed);

std::vector<TryDraw> predict_try(const PosteriorChains& chains,
                                 const std::array<double, 4>& x,
                                 const std::vector<long long>& n_draws,
                                 std::uint64_t seed);

std::vector<long long> predict_hardmoders(const PosteriorChains& chains,
                                          const std::array<double, 4>& x, double T,
                                          int day_of_week,
                                          const std::vector<long long>& n_draws,
                                          std::uint64_t seed);

}  // namespace wordle::bayes
