#include <doctest.h>

#include <cmath>

#include "wordle/bayes/model.hpp"
#include "wordle/mathutil.hpp"

using namespace wordle;
using namespace wordle::bayes;

namespace {

ModelData two_day_data() {
  ModelData data;
  DayData d1;
  d1.n = 40;
  d1.nh = 4;
  d1.t = {2, 6, 12, 11, 6, 2, 1};
  d1.T = 0.0;
  d1.dow = 1;
  d1.x = {0.5, -0.3, 0.2, -0.1};
  DayData d2;
  d2.n = 55;
  d2.nh = 9;
  d2.t = {3, 9, 15, 14, 9, 4, 1};
  d2.T = 1.0;
  d2.dow = 6;
  d2.x = {-0.7, 0.4, -0.2, 0.9};
  data.days = {d1, d2};
  return data;
}

}  // namespace

TEST_CASE("linear and trend components") {
  std::array<std::array<double, 7>, 5> a{};
  a[0] = {1, 2, 3, 4, 5, 6, 7};
  a[2] = {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  std::array<double, 4> x = {0.0, 2.0, 0.0, 0.0};
  auto d = try_linear(a, x);
  for (int i = 0; i < 7; ++i) CHECK(d[i] == doctest::Approx(a[0][i] + 1.0));

  CHECK(scalar_linear({1, 2, 3, 4}, {1, 1, 1, 1}) == doctest::Approx(10.0));
  CHECK(scalar_linear({1, 2, 3, 4}, {0, 0, 0, 0}) == 0.0);

  std::array<double, 7> theta = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  CHECK(periodic_effect(theta, 1) == doctest::Approx(0.1));
  CHECK(periodic_effect(theta, 7) == doctest::Approx(0.7));
  CHECK_THROWS(periodic_effect(theta, 0));
  CHECK_THROWS(periodic_effect(theta, 8));

  // g1*(T-g5)^g2 * exp(-(T-g5)/g3) + g4 with the signed-power convention
  std::array<double, 5> gamma = {2.0, 1.5, 0.4, 9.0, -0.1};
  double s = 0.5 - (-0.1);
  CHECK(reports_trend(gamma, 0.5) ==
        doctest::Approx(2.0 * std::pow(s, 1.5) * std::exp(-s / 0.4) + 9.0));
  std::array<double, 5> neg = {2.0, 1.5, 0.4, 9.0, 0.5};
  double sn = 0.2 - 0.5;
  CHECK(reports_trend(neg, 0.2) ==
        doctest::Approx(2.0 * (-std::pow(0.3, 1.5)) * std::exp(-sn / 0.4) + 9.0));
  CHECK_THROWS(reports_trend({1, 1, 0.0, 1, 0}, 0.5));

  std::array<double, 4> lambda = {2.0, 1.0, 0.3, 1.8};
  CHECK(hardmoders_trend(lambda, 0.5) ==
        doctest::Approx(2.0 * (0.5 - 1.8) + 0.3));
  std::array<double, 4> l2 = {1.5, 0.5, 0.1, 0.25};
  CHECK(hardmoders_trend(l2, 1.0) ==
        doctest::Approx(1.5 * std::sqrt(0.75) + 0.1));
}

TEST_CASE("try_log_posterior equals an independent recomposition") {
  auto data = two_day_data();
  TryParams prm;
  prm.a[0] = {-0.5, 0.9, 1.6, 1.7, 1.2, 0.5, -0.8};
  prm.a[1] = {0.1, 0.0, -0.1, 0.1, 0.0, 0.1, -0.1};
  prm.a[3] = {-0.2, 0.1, 0.0, 0.0, 0.1, -0.1, 0.2};
  prm.sigma = 0.4;
  prm.ln_a = {{-0.4, 1.0, 1.5, 1.8, 1.1, 0.4, -0.9},
              {-0.6, 0.8, 1.7, 1.6, 1.3, 0.6, -0.7}};
  prm.p = {{0.05, 0.15, 0.3, 0.27, 0.15, 0.05, 0.03},
           {0.06, 0.16, 0.28, 0.26, 0.16, 0.06, 0.02}};

  double want = 0.0;
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 7; ++i) want += math::log_normal_pdf(prm.a[k][i], 0, 20);
  want += math::log_exponential_pdf(prm.sigma, 1.0);
  for (int d = 0; d < 2; ++d) {
    auto dtry = try_linear(prm.a, data.days[d].x);
    std::array<double, 7> conc;
    for (int i = 0; i < 7; ++i) {
      want += math::log_normal_pdf(prm.ln_a[d][i], dtry[i], prm.sigma);
      conc[i] = std::exp(prm.ln_a[d][i]);
    }
    want += math::log_dirichlet_pdf(prm.p[d], conc);
    want += math::log_multinomial_pmf(data.days[d].t, prm.p[d]);
  }
  CHECK(try_log_posterior(prm, data) == doctest::Approx(want).epsilon(1e-10));

  prm.sigma = -0.1;
  CHECK(try_log_posterior(prm, data) == -INFINITY);
  prm.sigma = 0.4;
  prm.ln_a.pop_back();
  CHECK_THROWS(try_log_posterior(prm, data));
}

TEST_CASE("reports_log_posterior equals an independent recomposition") {
  auto data = two_day_data();
  ReportsParams prm;
  prm.b = {0.05, -0.08, 0.03, 0.06};
  prm.theta = {0.05, 0.02, -0.03, 0.0, -0.05, 0.04, -0.02};
  prm.gamma = {2.0, 1.2, 0.4, 4.0, -0.1};
  prm.overdispersion = 50.0;

  double want = 0.0;
  for (double bk : prm.b) want += math::log_normal_pdf(bk, 0, 20);
  for (double th : prm.theta) want += math::log_normal_pdf(th, 0, 1);
  want += math::log_exponential_pdf(prm.gamma[0], 1.0);
  want += math::log_exponential_pdf(prm.gamma[1], 1.0);
  want += math::log_exponential_pdf(prm.gamma[2], 1.0);
  want += math::log_exponential_pdf(prm.gamma[3], 0.01);
  want += math::log_normal_pdf(prm.gamma[4], 0, 1);
  want += math::log_exponential_pdf(prm.overdispersion, 0.01);
  for (const auto& day : data.days) {
    double mu = std::exp(reports_trend(prm.gamma, day.T) +
                         periodic_effect(prm.theta, day.dow) +
                         scalar_linear(prm.b, day.x));
    want += math::log_neg_binomial_pmf(day.n, mu, prm.overdispersion);
  }
  CHECK(reports_log_posterior(prm, data) == doctest::Approx(want).epsilon(1e-10));

  prm.gamma[0] = -1.0;
  CHECK(reports_log_posterior(prm, data) == -INFINITY);
}

TEST_CASE("hardmoders_log_posterior: recomposition, grid maximum, trivia") {
  auto data = two_day_data();
  HardmodersParams prm;
  prm.c = {0.06, -0.04, 0.03, 0.05};
  prm.omega = {0.15, -0.2, 0.1, 0.25, -0.1, 0.05, -0.15};
  prm.lambda = {2.0, 1.0, 0.3, 1.8};
  prm.kappa = 5.0;
  prm.p = {0.1, 0.17};

  double want = 0.0;
  for (double ck : prm.c) want += math::log_normal_pdf(ck, 0, 20);
  for (double om : prm.omega) want += math::log_normal_pdf(om, 0, 1);
  for (int k = 0; k < 3; ++k)
    want += math::log_exponential_pdf(prm.lambda[k], 1.0);
  want += math::log_normal_pdf(prm.lambda[3], 0, 1);
  want += math::log_half_cauchy_pdf(prm.kappa, 0.5);
  for (int d = 0; d < 2; ++d) {
    const auto& day = data.days[d];
    double eta = math::inv_logit(hardmoders_trend(prm.lambda, day.T) +
                                 periodic_effect(prm.omega, day.dow) +
                                 scalar_linear(prm.c, day.x));
    want += math::log_beta_pdf(prm.p[d], eta * prm.kappa, (1 - eta) * prm.kappa);
    want += math::log_binomial_pmf(day.nh, day.n, prm.p[d]);
  }
  CHECK(hardmoders_log_posterior(prm, data) ==
        doctest::Approx(want).epsilon(1e-10));

  // eta = 0.5, kappa = 2 gives a Beta(1,1) latent density: moving p changes
  // the posterior only through the binomial term
  ModelData one;
  DayData day;
  day.n = 20;
  day.nh = 7;
  day.T = 0.0;
  day.dow = 1;
  day.x = {};
  one.days = {day};
  HardmodersParams flat;
  flat.lambda = {1.0, 1.0, 1.0, 1.0};  // trend = 1*(0-1)^1 + 1 = 0
  flat.kappa = 2.0;
  flat.p = {0.3};
  double base = hardmoders_log_posterior(flat, one) -
                math::log_binomial_pmf(7, 20, 0.3);
  flat.p = {0.6};
  CHECK(hardmoders_log_posterior(flat, one) -
            math::log_binomial_pmf(7, 20, 0.6) ==
        doctest::Approx(base).epsilon(1e-10));

  // 1-D grid oracle: with the flat latent prior the posterior over p peaks
  // at the empirical proportion nh/n
  double best_p = -1, best_lp = -INFINITY;
  for (int g = 1; g < 200; ++g) {
    flat.p = {g / 200.0};
    double lp = hardmoders_log_posterior(flat, one);
    if (lp > best_lp) { best_lp = lp; best_p = g / 200.0; }
  }
  CHECK(best_p == doctest::Approx(0.35).epsilon(1e-9));

  flat.p = {1.2};
  CHECK(hardmoders_log_posterior(flat, one) == -INFINITY);
  flat.p = {0.3};
  flat.kappa = -1.0;
  CHECK(hardmoders_log_posterior(flat, one) == -INFINITY);
}
