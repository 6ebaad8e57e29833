#include "wordle/lasso.hpp"

#include <cmath>
#include <stdexcept>

namespace wordle {

DesignMatrix standardize(const DesignMatrix& x) {
  if (x.rows < 2) throw std::invalid_argument("standardize: need >= 2 rows");
  DesignMatrix out = x;
  out.means.assign(x.cols, 0.0);
  out.sds.assign(x.cols, 0.0);
  for (std::size_t c = 0; c < x.cols; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) mean += x.at(r, c);
    mean /= static_cast<double>(x.rows);
    double var = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) {
      double d = x.at(r, c) - mean;
      var += d * d;
    }
    var /= static_cast<double>(x.rows);
    if (var <= 0.0) {
      std::string name = c < x.col_names.size() ? x.col_names[c]
                                                : "#" + std::to_string(c);
      throw std::invalid_argument("standardize: constant column " + name);
    }
    double sd = std::sqrt(var);
    out.means[c] = mean;
    out.sds[c] = sd;
    for (std::size_t r = 0; r < x.rows; ++r)
      out.at(r, c) = (x.at(r, c) - mean) / sd;
  }
  return out;
}

double soft_threshold(double z, double t) {
  if (t < 0.0) throw std::invalid_argument("soft_threshold: negative threshold");
  if (z > t) return z - t;
  if (z < -t) return -(-z - t);
  return 0.0;
}

LassoResult lasso_fit(const DesignMatrix& x, const std::vector<double>& y,
                      double lambda) {
  if (y.size() != x.rows) throw std::invalid_argument("lasso_fit: y size mismatch");
  if (lambda < 0.0) throw std::invalid_argument("lasso_fit: negative lambda");
  const std::size_t n = x.rows, p = x.cols;

  double ybar = 0.0;
  for (double v : y) ybar += v;
  ybar /= static_cast<double>(n);

  std::vector<double> beta(p, 0.0);
  std::vector<double> resid(n);  // r = yc - X beta
  for (std::size_t i = 0; i < n; ++i) resid[i] = y[i] - ybar;

  std::vector<double> col_sq(p, 0.0);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i) col_sq[j] += x.at(i, j) * x.at(i, j);

  auto objective = [&] {
    double sse = 0.0;
    for (double r : resid) sse += r * r;
    double l1 = 0.0;
    for (double b : beta) l1 += std::fabs(b);
    return 0.5 * sse + lambda * l1;
  };

  const double tol = 1e-8;
  const int max_sweeps = 10000;
  double prev_obj = objective();
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      double z = 0.0;
      for (std::size_t i = 0; i < n; ++i) z += x.at(i, j) * resid[i];
      z += col_sq[j] * beta[j];  // partial residual correlation
      double bj = soft_threshold(z, lambda) / col_sq[j];
      double delta = bj - beta[j];
      if (delta != 0.0) {
        for (std::size_t i = 0; i < n; ++i) resid[i] -= delta * x.at(i, j);
        beta[j] = bj;
        max_change = std::max(max_change, std::fabs(delta));
      }
    }
    double obj = objective();
    if (obj > prev_obj + 1e-9 * std::max(1.0, prev_obj))
      throw std::runtime_error("lasso_fit: objective increased (numerical issue)");
    prev_obj = obj;
    if (max_change < tol) break;
  }
  if (sweep == max_sweeps)
    throw std::runtime_error("lasso_fit: no convergence, objective " +
                             std::to_string(prev_obj));

  LassoResult res;
  res.coefficients = beta;
  res.intercept = ybar;
  res.lambda = lambda;
  res.objective = prev_obj;
  res.sweeps = sweep + 1;
  for (std::size_t j = 0; j < p; ++j)
    if (beta[j] != 0.0) res.selected.insert(j);
  return res;
}

std::set<std::size_t> select_features(const DesignMatrix& x,
                                      const std::vector<std::vector<double>>& ys,
                                      double lambda, int min_hits) {
  std::vector<int> hits(x.cols, 0);
  for (const auto& y : ys) {
    auto fit = lasso_fit(x, y, lambda);
    for (auto j : fit.selected) ++hits[j];
  }
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < x.cols; ++j)
    if (hits[j] >= min_hits) out.insert(j);
  return out;
}

}  // namespace wordle
