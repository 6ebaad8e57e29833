#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordle/bayes/fit.hpp"
#include "wordle/bayes/predict.hpp"
#include "wordle/features.hpp"
#include "wordle/ingest.hpp"
#include "wordle/lasso.hpp"

namespace wordle {

// ---- features file ----

using FeatureTable = std::unordered_map<std::string, WordFeatures>;

// CSV: word + the eight canonical feature columns.
void write_features_csv(std::ostream& out, const std::vector<std::string>& words,
                        const std::vector<WordFeatures>& features);
FeatureTable read_features_csv(std::istream& in);
FeatureTable read_features_file(const std::string& path);

// ---- run configuration / fitted-run artifacts ----

const std::vector<std::string>& default_predictors();

struct RunConfig {
  std::uint64_t seed = 0;
  int chains = 4;
  int warmup = 1000;
  int draws = 1000;
  double lambda = 0.1;
  int min_hits = 4;
  std::vector<std::string> predictors = default_predictors();
};

struct StandardizationStats {
  std::vector<double> means;
  std::vector<double> sds;  // population std over training days
};

struct FitRun {
  RunConfig config;
  StandardizationStats stats;
  int first_contest = 0;
  int last_contest = 0;
  Date first_date;
  bayes::PosteriorChains try_chains, reports_chains, hardmoders_chains;
};

// Per-day predictor vectors standardized with training stats.
StandardizationStats predictor_stats(const std::vector<DailyRecord>& records,
                                     const FeatureTable& features,
                                     const std::vector<std::string>& predictors);
std::array<double, 4> standardized_predictors(const WordFeatures& f,
                                              const std::vector<std::string>& predictors,
                                              const StandardizationStats& stats);
bayes::ModelData build_model_data(const std::vector<DailyRecord>& records,
                                  const FeatureTable& features,
                                  const std::vector<std::string>& predictors,
                                  const StandardizationStats& stats);

// Fits the three submodels on the dataset; standardization stats are
// computed here and stored for prediction.
FitRun run_fit(const std::vector<DailyRecord>& records, const FeatureTable& features,
               const RunConfig& config);

// Run directory: config.json, {try,reports,hardmoders}_draws.csv (chain id
// column + one column per parameter), diagnostics.json.
void save_run(const std::string& dir, const FitRun& run);
FitRun load_run(const std::string& dir);

// ---- feature selection ----

struct SelectionReport {
  std::vector<std::string> predictor_names;              // all candidates
  std::array<std::vector<double>, 7> coefficients;       // per try category
  std::vector<std::string> selected;
  double lambda = 0.0;
  int min_hits = 0;
};
SelectionReport run_select(const std::vector<DailyRecord>& records,
                           const FeatureTable& features, double lambda,
                           int min_hits);

// ---- prediction / retrodiction ----

struct IntervalSummary {
  double median = 0, lo50 = 0, hi50 = 0, lo80 = 0, hi80 = 0, lo95 = 0, hi95 = 0;
};
IntervalSummary summarize(std::vector<double> draws);

struct DayPredictive {
  std::vector<long long> reports;
  std::vector<long long> hardmoders;
  std::vector<bayes::TryDraw> tries;
};

// Posterior predictive at an explicit design point.
DayPredictive predictive_draws(const FitRun& run, const std::array<double, 4>& x,
                               double T, int dow, std::uint64_t seed);

// Maps the date through the stored contest calendar (errors before the data
// start; extrapolates T beyond it) and standardizes the word's features.
DayPredictive predict_word(const FitRun& run, const WordFeatures& features,
                           const Date& date, std::uint64_t seed);

struct SummaryRow {
  std::string quantity;
  IntervalSummary interval;
};
// Table rows: reports, hardmoders, hardmoder_pct, pct_try_1..6, pct_fail.
std::vector<SummaryRow> predictive_summary(const DayPredictive& pred);

struct RetrodictRow {
  int contest = 0;
  std::string word;
  long long n_obs = 0, nh_obs = 0;
  IntervalSummary reports, hardmoders, proportion;
  bool n_covered95 = false, nh_covered95 = false, prop_covered95 = false;
};
struct Retrodiction {
  std::vector<RetrodictRow> rows;
  double coverage_reports = 0, coverage_hardmoders = 0, coverage_proportion = 0;
};
Retrodiction retrodict(const FitRun& run, const std::vector<DailyRecord>& records,
                       const FeatureTable& features, std::uint64_t seed);

// ---- difficulty tables ----

struct DifficultyRow {
  std::string word;
  int contest = 0;
  double alpha = 0, beta = 0, score = 0, rmse = 0;
  double percentile = 0;  // of score among all rows, in [0,100]
};
// Direct Beta fits on each observed day's try counts.
std::vector<DifficultyRow> difficulty_table(const std::vector<DailyRecord>& records);
// Per-draw scores from posterior predictive try distributions; degenerate
// draws (all mass in one guess) are skipped.
std::vector<double> difficulty_scores(const std::vector<bayes::TryDraw>& draws);

// ---- synthetic data (model-true generator for validation) ----

struct SynthTruth {
  std::array<std::array<double, 7>, 5> a{};
  double sigma = 0;
  std::array<double, 4> b{};
  std::array<double, 7> theta{};
  std::array<double, 5> gamma{};
  double overdispersion = 0;
  std::array<double, 4> c{};
  std::array<double, 7> omega{};
  std::array<double, 4> lambda{};
  double kappa = 0;
};

struct SynthData {
  std::vector<DailyRecord> records;
  FeatureTable features;
  std::vector<std::string> predictors;  // the four feature columns carrying x
  SynthTruth truth;
};

// Fixed global parameters (printed/serialized via `truth`), x exactly
// zero-mean unit-sd so the fit's standardization is the identity and
// recovered coefficients compare directly against the truth.
SynthData synth_dataset(int n_days, std::uint64_t seed);

}  // namespace wordle
