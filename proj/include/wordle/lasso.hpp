#pragma once

#include <set>
#include <string>
#include <vector>

namespace wordle {

// Row-major design matrix with per-column standardization stats.
struct DesignMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;            // rows*cols
  std::vector<std::string> col_names;  // optional, size cols or empty
  std::vector<double> means;           // populated by standardize()
  std::vector<double> sds;             // population std

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Zero-mean, unit-variance columns (population convention); the stats are
// retained on the result for inverse transforms.  Constant columns are an
// error.
DesignMatrix standardize(const DesignMatrix& x);

double soft_threshold(double z, double t);

struct LassoResult {
  std::vector<double> coefficients;
  double intercept = 0.0;
  double lambda = 0.0;
  std::set<std::size_t> selected;  // indices with nonzero coefficients
  double objective = 0.0;
  int sweeps = 0;
};

// Cyclic coordinate descent for min 0.5*||y - Xb||^2 + lambda*||b||_1 on a
// standardized X, intercept handled by centering y and never penalized.
// With this scaling the KKT conditions read |X_j' r| <= lambda for zero
// coefficients and the all-zero solution appears at lambda >= max|X_j' y|.
LassoResult lasso_fit(const DesignMatrix& x, const std::vector<double>& y,
                      double lambda);

// Predictors with nonzero coefficients in >= min_hits of the per-category
// regressions.  ys holds the 7 response vectors.
std::set<std::size_t> select_features(const DesignMatrix& x,
                                      const std::vector<std::vector<double>>& ys,
                                      double lambda, int min_hits);

}  // namespace wordle
