#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordle/lasso.hpp"
#include "wordle/rng.hpp"

using namespace wordle;

namespace {

DesignMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> nd(0.0, 1.0);
  DesignMatrix x;
  x.rows = rows;
  x.cols = cols;
  x.data.resize(rows * cols);
  for (auto& v : x.data) v = nd(rng);
  return x;
}

// OLS on centered y via normal equations (Gaussian elimination with partial
// pivoting); the independent oracle for lambda = 0.
std::vector<double> ols(const DesignMatrix& x, std::vector<double> y) {
  const std::size_t n = x.rows, p = x.cols;
  double ym = 0;
  for (double v : y) ym += v;
  ym /= static_cast<double>(n);
  for (auto& v : y) v -= ym;

  std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0.0));
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t i = 0; i < n; ++i) a[j][k] += x.at(i, j) * x.at(i, k);
    for (std::size_t i = 0; i < n; ++i) a[j][p] += x.at(i, j) * y[i];
  }
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= p; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> beta(p);
  for (std::size_t j = 0; j < p; ++j) beta[j] = a[j][p] / a[j][j];
  return beta;
}

}  // namespace

TEST_CASE("standardize: analytic case, idempotence, constant rejection") {
  DesignMatrix x;
  x.rows = 2;
  x.cols = 1;
  x.data = {0.0, 2.0};
  auto s = standardize(x);
  CHECK(s.at(0, 0) == doctest::Approx(-1.0));  // population-std convention
  CHECK(s.at(1, 0) == doctest::Approx(1.0));
  CHECK(s.means[0] == doctest::Approx(1.0));
  CHECK(s.sds[0] == doctest::Approx(1.0));

  auto s2 = standardize(s);
  for (std::size_t i = 0; i < s.data.size(); ++i)
    CHECK(s2.data[i] == doctest::Approx(s.data[i]).epsilon(1e-12));

  DesignMatrix c;
  c.rows = 3;
  c.cols = 2;
  c.col_names = {"ok", "flat"};
  c.data = {1, 5, 2, 5, 3, 5};
  try {
    standardize(c);
    FAIL("constant column accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("flat") != std::string::npos);
  }
}

TEST_CASE("soft_threshold") {
  CHECK(soft_threshold(3.0, 1.0) == doctest::Approx(2.0));
  CHECK(soft_threshold(-0.5, 1.0) == 0.0);
  CHECK(soft_threshold(-3.0, 1.0) == doctest::Approx(-2.0));
  CHECK(soft_threshold(0.7, 0.0) == doctest::Approx(0.7));
}

TEST_CASE("lambda = 0 equals OLS") {
  std::mt19937_64 rng(314);
  auto x = standardize(random_matrix(rng, 40, 5));
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> y(40);
  for (std::size_t i = 0; i < 40; ++i)
    y[i] = 3.0 + 1.2 * x.at(i, 0) - 0.7 * x.at(i, 3) + 0.3 * nd(rng);

  auto fit = lasso_fit(x, y, 0.0);
  auto want = ols(x, y);
  for (std::size_t j = 0; j < 5; ++j)
    CHECK(fit.coefficients[j] == doctest::Approx(want[j]).epsilon(1e-6));
  double ym = 0;
  for (double v : y) ym += v;
  CHECK(fit.intercept == doctest::Approx(ym / 40).epsilon(1e-9));
}

TEST_CASE("lambda above lambda_max zeroes every coefficient") {
  std::mt19937_64 rng(2718);
  auto x = standardize(random_matrix(rng, 30, 4));
  std::vector<double> y(30);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (auto& v : y) v = nd(rng);

  double ym = 0;
  for (double v : y) ym += v;
  ym /= 30;
  double lmax = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    double dot = 0;
    for (std::size_t i = 0; i < 30; ++i) dot += x.at(i, j) * (y[i] - ym);
    lmax = std::max(lmax, std::abs(dot));
  }
  auto fit = lasso_fit(x, y, lmax * 1.0001);
  for (double b : fit.coefficients) CHECK(b == 0.0);
  CHECK(fit.selected.empty());
}

TEST_CASE("KKT conditions hold at the solution") {
  std::mt19937_64 rng(55);
  auto x = standardize(random_matrix(rng, 60, 6));
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> y(60);
  for (std::size_t i = 0; i < 60; ++i)
    y[i] = 2.0 * x.at(i, 1) - 1.0 * x.at(i, 4) + 0.5 * nd(rng);

  double lambda = 3.0;
  auto fit = lasso_fit(x, y, lambda);
  double ym = 0;
  for (double v : y) ym += v;
  ym /= 60;
  std::vector<double> r(60);
  for (std::size_t i = 0; i < 60; ++i) {
    r[i] = y[i] - ym;
    for (std::size_t j = 0; j < 6; ++j) r[i] -= x.at(i, j) * fit.coefficients[j];
  }
  for (std::size_t j = 0; j < 6; ++j) {
    double dot = 0;
    for (std::size_t i = 0; i < 60; ++i) dot += x.at(i, j) * r[i];
    if (fit.coefficients[j] == 0.0) {
      CHECK(std::abs(dot) <= lambda + 1e-6);
    } else {
      CHECK(dot ==
            doctest::Approx(lambda * (fit.coefficients[j] > 0 ? 1.0 : -1.0))
                .epsilon(1e-6));
    }
  }
  CHECK(fit.selected.size() == static_cast<std::size_t>(std::count_if(
                                   fit.coefficients.begin(), fit.coefficients.end(),
                                   [](double b) { return b != 0.0; })));
}

TEST_CASE("sparse recovery and monotone selection") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto rng = make_stream(seed, 17);
    auto x = standardize(random_matrix(rng, 100, 8));
    std::normal_distribution<double> nd(0.0, 0.01);
    std::vector<double> y(100);
    for (std::size_t i = 0; i < 100; ++i)
      y[i] = 2.0 * x.at(i, 0) - 3.0 * x.at(i, 2) + nd(rng);

    auto fit = lasso_fit(x, y, 0.1);
    CHECK(fit.selected.count(0) == 1);
    CHECK(fit.selected.count(2) == 1);
    for (std::size_t j = 0; j < 8; ++j)
      if (j != 0 && j != 2) CHECK(std::abs(fit.coefficients[j]) < 0.05);

    // increasing lambda never grows the selected set
    auto prev = fit.selected;
    for (double lam : {1.0, 10.0, 100.0}) {
      auto next = lasso_fit(x, y, lam).selected;
      for (std::size_t j : next) CHECK(prev.count(j) == 1);
      prev = next;
    }
  }
}

TEST_CASE("select_features hit thresholds") {
  std::mt19937_64 rng(808);
  auto x = standardize(random_matrix(rng, 80, 5));
  std::normal_distribution<double> nd(0.0, 0.05);
  std::vector<std::vector<double>> ys(7, std::vector<double>(80));
  for (int c = 0; c < 7; ++c)
    for (std::size_t i = 0; i < 80; ++i)
      ys[c][i] = 1.5 * x.at(i, 1) + (c < 4 ? 0.8 : 0.0) * x.at(i, 3) + nd(rng);

  // predictor 1 hits all 7 regressions, predictor 3 only 4; lambda = 2 sits
  // between the noise scale |X'eps| ~ 0.45 and the signal scale ~ 60
  auto sel7 = select_features(x, ys, 2.0, 7);
  CHECK(sel7.count(1) == 1);
  CHECK(sel7.count(3) == 0);
  auto sel4 = select_features(x, ys, 2.0, 4);
  CHECK(sel4.count(1) == 1);
  CHECK(sel4.count(3) == 1);
  CHECK(select_features(x, ys, 2.0, 8).empty());  // impossible threshold
  auto sel1 = select_features(x, ys, 1e-9, 1);
  CHECK(sel1.size() == 5);  // essentially unpenalized: everything nonzero
}
