#include "wordle/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wordle/bayes/diagnostics.hpp"
#include "wordle/csv.hpp"
#include "wordle/difficulty.hpp"
#include "wordle/mathutil.hpp"
#include "wordle/rng.hpp"

namespace wordle {

namespace fs = std::filesystem;
using nlohmann::json;

// ---- features file ----

void write_features_csv(std::ostream& out, const std::vector<std::string>& words,
                        const std::vector<WordFeatures>& features) {
  if (words.size() != features.size())
    throw std::invalid_argument("write_features_csv: size mismatch");
  std::vector<std::string> header{"word"};
  for (const auto& n : WordFeatures::names()) header.push_back(n);
  out << csv::join(header) << '\n';
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::vector<std::string> row{words[i]};
    for (const auto& n : WordFeatures::names())
      row.push_back(csv::fmt(features[i].by_name(n)));
    out << csv::join(row) << '\n';
  }
}

FeatureTable read_features_csv(std::istream& in) {
  auto table = csv::read(in);
  std::size_t cw = table.col("word");
  std::array<std::size_t, 8> ci{};
  const auto& names = WordFeatures::names();
  for (std::size_t j = 0; j < names.size(); ++j) ci[j] = table.col(names[j]);

  FeatureTable out;
  for (const auto& row : table.rows) {
    WordFeatures f;
    f.vowels = static_cast<int>(std::llround(std::stod(row[ci[0]])));
    f.unique_letters = static_cast<int>(std::llround(std::stod(row[ci[1]])));
    f.usage = std::stod(row[ci[2]]);
    f.avg_green = std::stod(row[ci[3]]);
    f.avg_yellow = std::stod(row[ci[4]]);
    f.avg_colored = std::stod(row[ci[5]]);
    f.positional_entropy = std::stod(row[ci[6]]);
    f.subset_entropy = std::stod(row[ci[7]]);
    out[row[cw]] = f;
  }
  return out;
}

FeatureTable read_features_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open features file: " + path);
  return read_features_csv(in);
}

// ---- predictors / model data ----

const std::vector<std::string>& default_predictors() {
  static const std::vector<std::string> names = {"unique_letters", "usage",
                                                 "avg_yellow", "subset_entropy"};
  return names;
}

namespace {
const WordFeatures& features_of(const FeatureTable& features,
                                const std::string& word) {
  auto it = features.find(word);
  if (it == features.end())
    throw std::runtime_error("word missing from features table: " + word);
  return it->second;
}
}  // namespace

StandardizationStats predictor_stats(const std::vector<DailyRecord>& records,
                                     const FeatureTable& features,
                                     const std::vector<std::string>& predictors) {
  if (predictors.size() != 4)
    throw std::invalid_argument("predictor_stats: exactly 4 predictors required");
  if (records.empty()) throw std::invalid_argument("predictor_stats: no records");
  StandardizationStats stats;
  stats.means.assign(4, 0.0);
  stats.sds.assign(4, 0.0);
  const double n = static_cast<double>(records.size());
  for (const auto& r : records) {
    const auto& f = features_of(features, r.word);
    for (std::size_t j = 0; j < 4; ++j) stats.means[j] += f.by_name(predictors[j]);
  }
  for (auto& m : stats.means) m /= n;
  for (const auto& r : records) {
    const auto& f = features_of(features, r.word);
    for (std::size_t j = 0; j < 4; ++j) {
      double d = f.by_name(predictors[j]) - stats.means[j];
      stats.sds[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < 4; ++j) {
    stats.sds[j] = std::sqrt(stats.sds[j] / n);
    if (stats.sds[j] <= 0.0)
      throw std::runtime_error("constant predictor column: " + predictors[j]);
  }
  return stats;
}

std::array<double, 4> standardized_predictors(const WordFeatures& f,
                                              const std::vector<std::string>& predictors,
                                              const StandardizationStats& stats) {
  std::array<double, 4> x{};
  for (std::size_t j = 0; j < 4; ++j)
    x[j] = (f.by_name(predictors[j]) - stats.means[j]) / stats.sds[j];
  return x;
}

bayes::ModelData build_model_data(const std::vector<DailyRecord>& records,
                                  const FeatureTable& features,
                                  const std::vector<std::string>& predictors,
                                  const StandardizationStats& stats) {
  bayes::ModelData data;
  data.days.reserve(records.size());
  for (const auto& r : records) {
    bayes::DayData d;
    d.n = r.n_reports;
    d.nh = r.n_hardmode;
    d.t = r.try_counts;
    d.T = r.T;
    d.dow = r.day_of_week;
    d.x = standardized_predictors(features_of(features, r.word), predictors, stats);
    data.days.push_back(d);
  }
  return data;
}

// ---- fit / run directory ----

FitRun run_fit(const std::vector<DailyRecord>& records, const FeatureTable& features,
               const RunConfig& config) {
  if (config.chains < 2) throw std::invalid_argument("run_fit: need >= 2 chains");
  if (config.warmup <= 0 || config.draws <= 0)
    throw std::invalid_argument("run_fit: warmup and draws must be positive");
  if (records.empty()) throw std::invalid_argument("run_fit: empty dataset");

  FitRun run;
  run.config = config;
  run.stats = predictor_stats(records, features, config.predictors);
  run.first_contest = records.front().contest;
  run.last_contest = records.back().contest;
  run.first_date = records.front().date;

  auto data = build_model_data(records, features, config.predictors, run.stats);
  bayes::McmcConfig mc;
  mc.chains = config.chains;
  mc.warmup = config.warmup;
  mc.draws = config.draws;
  mc.seed = config.seed;

  run.try_chains = bayes::fit_try(data, mc);
  run.reports_chains = bayes::fit_reports(data, mc);
  run.hardmoders_chains = bayes::fit_hardmoders(data, mc);
  return run;
}

namespace {

void write_draws_csv(const fs::path& path, const bayes::PosteriorChains& chains) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::vector<std::string> header{"chain"};
  for (const auto& n : chains.param_names) header.push_back(n);
  out << csv::join(header) << '\n';
  for (std::size_t c = 0; c < chains.chains.size(); ++c)
    for (int d = 0; d < chains.n_draws; ++d) {
      std::vector<std::string> row{std::to_string(c)};
      for (std::size_t p = 0; p < chains.n_params(); ++p)
        row.push_back(csv::fmt(chains.at(c, d, p)));
      out << csv::join(row) << '\n';
    }
}

bayes::PosteriorChains read_draws_csv(const fs::path& path, int warmup,
                                      std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  auto table = csv::read(in);
  if (table.header.empty() || table.header[0] != "chain")
    throw std::runtime_error("malformed draws file: " + path.string());

  bayes::PosteriorChains chains;
  chains.param_names.assign(table.header.begin() + 1, table.header.end());
  chains.warmup = warmup;
  chains.seed = seed;
  const std::size_t np = chains.param_names.size();
  for (const auto& row : table.rows) {
    std::size_t c = std::stoul(row[0]);
    if (c >= chains.chains.size()) chains.chains.resize(c + 1);
    for (std::size_t p = 0; p < np; ++p)
      chains.chains[c].push_back(std::stod(row[p + 1]));
  }
  if (chains.chains.empty())
    throw std::runtime_error("empty draws file: " + path.string());
  chains.n_draws = static_cast<int>(chains.chains[0].size() / np);
  for (const auto& c : chains.chains)
    if (c.size() != chains.chains[0].size())
      throw std::runtime_error("ragged chains in " + path.string());
  return chains;
}

json diagnostics_json(const bayes::PosteriorChains& chains) {
  json out;
  out["acceptance"] = chains.acceptance;
  json params = json::array();
  for (const auto& d : bayes::diagnostics(chains)) {
    json p;
    p["name"] = d.name;
    p["rhat"] = d.rhat;  // NaN serializes as null
    p["ess"] = d.ess;
    params.push_back(p);
  }
  out["params"] = params;
  return out;
}

}  // namespace

void save_run(const std::string& dir, const FitRun& run) {
  fs::create_directories(dir);
  json cfg;
  cfg["seed"] = run.config.seed;
  cfg["chains"] = run.config.chains;
  cfg["warmup"] = run.config.warmup;
  cfg["draws"] = run.config.draws;
  cfg["lambda"] = run.config.lambda;
  cfg["min_hits"] = run.config.min_hits;
  cfg["predictors"] = run.config.predictors;
  cfg["standardization"] = {{"means", run.stats.means}, {"sds", run.stats.sds}};
  cfg["first_contest"] = run.first_contest;
  cfg["last_contest"] = run.last_contest;
  cfg["first_date"] = run.first_date.str();
  {
    std::ofstream out(fs::path(dir) / "config.json");
    if (!out) throw std::runtime_error("cannot write config.json in " + dir);
    out << cfg.dump(2) << '\n';
  }

  write_draws_csv(fs::path(dir) / "try_draws.csv", run.try_chains);
  write_draws_csv(fs::path(dir) / "reports_draws.csv", run.reports_chains);
  write_draws_csv(fs::path(dir) / "hardmoders_draws.csv", run.hardmoders_chains);

  json diag;
  diag["try"] = diagnostics_json(run.try_chains);
  diag["reports"] = diagnostics_json(run.reports_chains);
  diag["hardmoders"] = diagnostics_json(run.hardmoders_chains);
  std::ofstream out(fs::path(dir) / "diagnostics.json");
  if (!out) throw std::runtime_error("cannot write diagnostics.json in " + dir);
  out << diag.dump(2) << '\n';
}

FitRun load_run(const std::string& dir) {
  std::ifstream in(fs::path(dir) / "config.json");
  if (!in) throw std::runtime_error("not a run directory (no config.json): " + dir);
  json cfg = json::parse(in);

  FitRun run;
  run.config.seed = cfg.at("seed").get<std::uint64_t>();
  run.config.chains = cfg.at("chains").get<int>();
  run.config.warmup = cfg.at("warmup").get<int>();
  run.config.draws = cfg.at("draws").get<int>();
  run.config.lambda = cfg.at("lambda").get<double>();
  run.config.min_hits = cfg.at("min_hits").get<int>();
  run.config.predictors = cfg.at("predictors").get<std::vector<std::string>>();
  run.stats.means = cfg.at("standardization").at("means").get<std::vector<double>>();
  run.stats.sds = cfg.at("standardization").at("sds").get<std::vector<double>>();
  run.first_contest = cfg.at("first_contest").get<int>();
  run.last_contest = cfg.at("last_contest").get<int>();
  run.first_date = Date::parse(cfg.at("first_date").get<std::string>());

  run.try_chains = read_draws_csv(fs::path(dir) / "try_draws.csv",
                                  run.config.warmup, run.config.seed);
  run.reports_chains = read_draws_csv(fs::path(dir) / "reports_draws.csv",
                                      run.config.warmup, run.config.seed);
  run.hardmoders_chains = read_draws_csv(fs::path(dir) / "hardmoders_draws.csv",
                                         run.config.warmup, run.config.seed);
  return run;
}

// ---- feature selection ----

SelectionReport run_select(const std::vector<DailyRecord>& records,
                           const FeatureTable& features, double lambda,
                           int min_hits) {
  if (records.empty()) throw std::invalid_argument("run_select: empty dataset");
  const auto& names = WordFeatures::names();

  DesignMatrix x;
  x.rows = records.size();
  x.cols = names.size();
  x.col_names = names;
  x.data.resize(x.rows * x.cols);
  std::array<std::vector<double>, 7> props;
  for (auto& p : props) p.reserve(records.size());

  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    const auto& f = features_of(features, rec.word);
    for (std::size_t j = 0; j < names.size(); ++j) x.at(r, j) = f.by_name(names[j]);
    for (int i = 0; i < 7; ++i)
      props[i].push_back(static_cast<double>(rec.try_counts[i]) / rec.n_reports);
  }

  auto xs = standardize(x);
  SelectionReport report;
  report.predictor_names = names;
  report.lambda = lambda;
  report.min_hits = min_hits;

  std::vector<int> hits(names.size(), 0);
  for (int i = 0; i < 7; ++i) {
    auto fit = lasso_fit(xs, props[i], lambda);
    report.coefficients[i] = fit.coefficients;
    for (std::size_t j : fit.selected) hits[j]++;
  }
  for (std::size_t j = 0; j < names.size(); ++j)
    if (hits[j] >= min_hits) report.selected.push_back(names[j]);
  return report;
}

// ---- prediction / retrodiction ----

IntervalSummary summarize(std::vector<double> draws) {
  if (draws.empty()) throw std::invalid_argument("summarize: no draws");
  std::sort(draws.begin(), draws.end());
  auto q = [&](double p) { return math::quantile(draws, p); };
  IntervalSummary s;
  s.median = q(0.5);
  s.lo50 = q(0.25);  s.hi50 = q(0.75);
  s.lo80 = q(0.10);  s.hi80 = q(0.90);
  s.lo95 = q(0.025); s.hi95 = q(0.975);
  return s;
}

DayPredictive predictive_draws(const FitRun& run, const std::array<double, 4>& x,
                               double T, int dow, std::uint64_t seed) {
  DayPredictive pred;
  pred.reports = bayes::predict_reports(run.reports_chains, x, T, dow, seed);
  pred.tries = bayes::predict_try(run.try_chains, x, pred.reports, seed);
  pred.hardmoders =
      bayes::predict_hardmoders(run.hardmoders_chains, x, T, dow, pred.reports, seed);
  return pred;
}

DayPredictive predict_word(const FitRun& run, const WordFeatures& features,
                           const Date& date, std::uint64_t seed) {
  long long offset = date.serial() - run.first_date.serial();
  if (offset < 0)
    throw std::invalid_argument("prediction date precedes the data start (" +
                                run.first_date.str() + ")");
  int contest = run.first_contest + static_cast<int>(offset);
  double T = scale_time_for(contest, run.first_contest, run.last_contest);
  auto x = standardized_predictors(features, run.config.predictors, run.stats);
  return predictive_draws(run, x, T, date.day_of_week(), seed);
}

std::vector<SummaryRow> predictive_summary(const DayPredictive& pred) {
  const std::size_t n = pred.reports.size();
  if (n == 0 || pred.tries.size() != n || pred.hardmoders.size() != n)
    throw std::invalid_argument("predictive_summary: inconsistent draw vectors");

  std::vector<double> reports(n), hard(n), hard_pct(n);
  std::array<std::vector<double>, 7> try_pct;
  for (auto& v : try_pct) v.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double nr = static_cast<double>(pred.reports[k]);
    reports[k] = nr;
    hard[k] = static_cast<double>(pred.hardmoders[k]);
    hard_pct[k] = nr > 0 ? 100.0 * hard[k] / nr : 0.0;
    long long tot = 0;
    for (int i = 0; i < 7; ++i) tot += pred.tries[k].counts[i];
    for (int i = 0; i < 7; ++i)
      try_pct[i][k] = tot > 0 ? 100.0 * pred.tries[k].counts[i] / tot : 0.0;
  }

  std::vector<SummaryRow> rows;
  rows.push_back({"reports", summarize(reports)});
  rows.push_back({"hardmoders", summarize(hard)});
  rows.push_back({"hardmoder_pct", summarize(hard_pct)});
  for (int i = 0; i < 6; ++i)
    rows.push_back({"pct_try_" + std::to_string(i + 1), summarize(try_pct[i])});
  rows.push_back({"pct_fail", summarize(try_pct[6])});
  return rows;
}

Retrodiction retrodict(const FitRun& run, const std::vector<DailyRecord>& records,
                       const FeatureTable& features, std::uint64_t seed) {
  if (records.empty()) throw std::invalid_argument("retrodict: empty dataset");
  Retrodiction out;
  int cov_n = 0, cov_nh = 0, cov_p = 0;

  for (const auto& rec : records) {
    auto x = standardized_predictors(features_of(features, rec.word),
                                     run.config.predictors, run.stats);
    // per-day predictive stream derived from the root seed and the contest
    std::uint64_t day_seed =
        splitmix64(seed ^ splitmix64(0x726574726FULL + rec.contest));
    auto pred = predictive_draws(run, x, rec.T, rec.day_of_week, day_seed);

    std::vector<double> nr(pred.reports.begin(), pred.reports.end());
    std::vector<double> nh(pred.hardmoders.begin(), pred.hardmoders.end());
    std::vector<double> prop(nr.size());
    for (std::size_t k = 0; k < nr.size(); ++k)
      prop[k] = nr[k] > 0 ? nh[k] / nr[k] : 0.0;

    RetrodictRow row;
    row.contest = rec.contest;
    row.word = rec.word;
    row.n_obs = rec.n_reports;
    row.nh_obs = rec.n_hardmode;
    row.reports = summarize(nr);
    row.hardmoders = summarize(nh);
    row.proportion = summarize(prop);
    double obs_prop = rec.n_reports > 0
                          ? static_cast<double>(rec.n_hardmode) / rec.n_reports
                          : 0.0;
    row.n_covered95 = rec.n_reports >= row.reports.lo95 &&
                      rec.n_reports <= row.reports.hi95;
    row.nh_covered95 = rec.n_hardmode >= row.hardmoders.lo95 &&
                       rec.n_hardmode <= row.hardmoders.hi95;
    row.prop_covered95 =
        obs_prop >= row.proportion.lo95 && obs_prop <= row.proportion.hi95;
    cov_n += row.n_covered95;
    cov_nh += row.nh_covered95;
    cov_p += row.prop_covered95;
    out.rows.push_back(std::move(row));
  }
  double n = static_cast<double>(records.size());
  out.coverage_reports = cov_n / n;
  out.coverage_hardmoders = cov_nh / n;
  out.coverage_proportion = cov_p / n;
  return out;
}

// ---- difficulty tables ----

std::vector<DifficultyRow> difficulty_table(const std::vector<DailyRecord>& records) {
  std::vector<DifficultyRow> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    auto fit = fit_beta(embed_cmf(rec.try_counts));
    DifficultyRow row;
    row.word = rec.word;
    row.contest = rec.contest;
    row.alpha = fit.params.alpha;
    row.beta = fit.params.beta;
    row.score = difficulty_score(fit.params);
    row.rmse = fit.rmse;
    rows.push_back(row);
  }
  for (auto& row : rows) {
    std::size_t below = 0;
    for (const auto& other : rows) below += other.score <= row.score;
    row.percentile = 100.0 * below / rows.size();
  }
  return rows;
}

std::vector<double> difficulty_scores(const std::vector<bayes::TryDraw>& draws) {
  std::vector<double> scores;
  scores.reserve(draws.size());
  for (const auto& d : draws) {
    if (d.p[0] >= 1.0) continue;  // degenerate: no Beta fit exists
    auto fit = fit_beta(embed_cmf(d.p));
    scores.push_back(difficulty_score(fit.params));
  }
  return scores;
}

// ---- synthetic data ----

SynthData synth_dataset(int n_days, std::uint64_t seed) {
  if (n_days < 2) throw std::invalid_argument("synth_dataset: need >= 2 days");

  SynthData out;
  out.predictors = {"usage", "avg_yellow", "positional_entropy", "subset_entropy"};

  SynthTruth& t = out.truth;
  // Try model: realistic try-curve baseline, modest difficulty slopes.
  t.a[0] = {-0.6, 1.0, 1.7, 1.8, 1.3, 0.6, -0.9};
  t.a[1] = {0.10, 0.05, -0.05, -0.10, 0.05, 0.10, 0.15};
  t.a[2] = {-0.15, -0.05, 0.10, 0.10, -0.05, -0.10, -0.15};
  t.a[3] = {0.05, 0.10, 0.05, -0.05, -0.10, 0.00, 0.05};
  t.a[4] = {0.20, 0.10, -0.10, -0.15, 0.00, 0.10, 0.20};
  t.sigma = 0.25;
  // Reports model: ~1e4 baseline reports with a gamma-shaped bump.
  t.b = {0.05, -0.08, 0.03, 0.06};
  t.theta = {0.05, 0.02, -0.03, 0.00, -0.05, 0.04, -0.02};
  t.gamma = {2.0, 1.2, 0.4, 9.2, -0.1};
  t.overdispersion = 50.0;
  // Hardmoders model: ~5-20% hardmode share, with the low overall level
  // carried by the trend (T < lambda4 makes the power term negative) so
  // every parameter stays in the bulk of its prior.
  t.c = {0.06, -0.04, 0.03, 0.05};
  t.omega = {0.15, -0.20, 0.10, 0.25, -0.10, 0.05, -0.15};
  t.lambda = {2.0, 1.0, 0.3, 1.8};
  t.kappa = 100.0;

  auto rng = make_stream(seed, 42);
  std::normal_distribution<double> nd(0.0, 1.0);

  // Predictor draws, then exact standardization so the fit's training-stats
  // transform is the identity and coefficients compare against the truth.
  std::vector<std::array<double, 4>> xs(n_days);
  for (int j = 0; j < 4; ++j) {
    double mean = 0.0, var = 0.0;
    for (int d = 0; d < n_days; ++d) {
      xs[d][j] = nd(rng);
      mean += xs[d][j];
    }
    mean /= n_days;
    for (int d = 0; d < n_days; ++d) var += (xs[d][j] - mean) * (xs[d][j] - mean);
    double sd = std::sqrt(var / n_days);
    for (int d = 0; d < n_days; ++d) xs[d][j] = (xs[d][j] - mean) / sd;
  }

  const Date start{2022, 1, 1};
  const int first_contest = 1, last_contest = n_days;

  Date date = start;
  auto advance_day = [](Date& dt) {
    static const int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dim = mdays[dt.month - 1];
    if (dt.month == 2 &&
        (dt.year % 4 == 0 && (dt.year % 100 != 0 || dt.year % 400 == 0)))
      dim = 29;
    if (++dt.day > dim) {
      dt.day = 1;
      if (++dt.month > 12) { dt.month = 1; dt.year++; }
    }
  };

  for (int d = 0; d < n_days; ++d) {
    DailyRecord rec;
    rec.date = date;
    advance_day(date);
    rec.contest = first_contest + d;
    // unique 5-letter word per day: sy + base-26 day index
    std::string word = "sy";
    word += static_cast<char>('a' + (d / 676) % 26);
    word += static_cast<char>('a' + (d / 26) % 26);
    word += static_cast<char>('a' + d % 26);
    rec.word = word;
    rec.T = scale_time_for(rec.contest, first_contest, last_contest);
    rec.day_of_week = rec.date.day_of_week();

    const auto& x = xs[d];

    // Reports
    double eta_r = bayes::reports_trend(t.gamma, rec.T) +
                   bayes::periodic_effect(t.theta, rec.day_of_week) +
                   bayes::scalar_linear(t.b, x);
    long long n = math::sample_neg_binomial(rng, std::exp(eta_r), t.overdispersion);
    if (n < 1) n = 1;
    rec.n_reports = n;

    // Try
    auto dtry = bayes::try_linear(t.a, x);
    std::array<double, 7> conc;
    for (int i = 0; i < 7; ++i) conc[i] = std::exp(dtry[i] + t.sigma * nd(rng));
    std::array<double, 7> p;
    math::sample_dirichlet(rng, conc, p);
    auto counts = math::sample_multinomial(rng, n, p);
    for (int i = 0; i < 7; ++i) rec.try_counts[i] = counts[i];

    // Hardmoders
    double eta_h = math::inv_logit(bayes::hardmoders_trend(t.lambda, rec.T) +
                                   bayes::periodic_effect(t.omega, rec.day_of_week) +
                                   bayes::scalar_linear(t.c, x));
    double ph = math::sample_beta(rng, eta_h * t.kappa, (1.0 - eta_h) * t.kappa);
    rec.n_hardmode = math::sample_binomial(rng, n, ph);

    rec.check_invariants();
    out.records.push_back(rec);

    WordFeatures f{};
    f.usage = x[0];
    f.avg_yellow = x[1];
    f.positional_entropy = x[2];
    f.subset_entropy = x[3];
    // unused columns get independent noise so selection on synth data stays
    // well-posed (no constant columns)
    f.vowels = 1 + (d % 4);
    f.unique_letters = 3 + (d % 3);
    f.avg_green = nd(rng);
    f.avg_colored = nd(rng);
    out.features[rec.word] = f;
  }
  return out;
}

}  // namespace wordle
