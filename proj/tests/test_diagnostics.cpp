#include <doctest.h>

#include <cmath>
#include <random>

#include "wordle/bayes/diagnostics.hpp"
#include "wordle/rng.hpp"

using namespace wordle;
using namespace wordle::bayes;

namespace {

PosteriorChains make_chains(int n_chains, int n_draws, int n_params) {
  PosteriorChains c;
  for (int p = 0; p < n_params; ++p)
    c.param_names.push_back("p" + std::to_string(p + 1));
  c.n_draws = n_draws;
  c.chains.assign(n_chains, std::vector<double>(
                                static_cast<std::size_t>(n_draws) * n_params));
  return c;
}

}  // namespace

TEST_CASE("constant chains report NaN R-hat") {
  auto c = make_chains(4, 200, 1);
  for (auto& ch : c.chains)
    for (auto& v : ch) v = 3.5;
  auto d = diagnostics(c);
  REQUIRE(d.size() == 1);
  CHECK(std::isnan(d[0].rhat));
}

TEST_CASE("independent white noise: R-hat near 1, high ESS") {
  auto c = make_chains(4, 5000, 2);
  auto rng = make_stream(404, 0);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (auto& ch : c.chains)
    for (auto& v : ch) v = nd(rng);
  auto d = diagnostics(c);
  REQUIRE(d.size() == 2);
  for (const auto& p : d) {
    CHECK(p.rhat > 0.99);
    CHECK(p.rhat < 1.01);
    CHECK(p.ess >= 0.8 * 4 * 5000);
  }
}

TEST_CASE("deliberately unmixed chains: large R-hat") {
  auto c = make_chains(2, 1000, 1);
  auto rng = make_stream(405, 0);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int chain = 0; chain < 2; ++chain)
    for (auto& v : c.chains[chain]) v = nd(rng) + (chain == 0 ? 0.0 : 10.0);
  auto d = diagnostics(c);
  CHECK(d[0].rhat > 1.5);
}

TEST_CASE("strongly autocorrelated chains: low ESS") {
  auto c = make_chains(4, 2000, 1);
  auto rng = make_stream(406, 0);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (auto& ch : c.chains) {
    double x = 0.0;
    for (auto& v : ch) {
      x = 0.99 * x + std::sqrt(1 - 0.99 * 0.99) * nd(rng);  // AR(1), rho 0.99
      v = x;
    }
  }
  auto d = diagnostics(c);
  CHECK(d[0].ess < 0.1 * 4 * 2000);
}

TEST_CASE("preconditions") {
  auto one = make_chains(1, 500, 1);
  CHECK_THROWS(diagnostics(one));
  auto few = make_chains(4, 50, 1);
  CHECK_THROWS(diagnostics(few));
}
