// Command-line front end: ingest -> features -> select -> fit ->
// predict/retrodict/difficulty, plus a synthetic-data generator.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordle/bayes/diagnostics.hpp"
#include "wordle/csv.hpp"
#include "wordle/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wordle;

namespace {

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json j = json::parse(in);
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("chains")) cfg.chains = j["chains"].get<int>();
  if (j.contains("warmup")) cfg.warmup = j["warmup"].get<int>();
  if (j.contains("draws")) cfg.draws = j["draws"].get<int>();
  if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
  if (j.contains("min_hits")) cfg.min_hits = j["min_hits"].get<int>();
  if (j.contains("predictors"))
    cfg.predictors = j["predictors"].get<std::vector<std::string>>();
}

std::ofstream open_out(const std::string& path) {
  if (auto dir = fs::path(path).parent_path(); !dir.empty())
    fs::create_directories(dir);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string s = "quantity,median,lo50,hi50,lo80,hi80,lo95,hi95\n";
  for (const auto& r : rows) {
    const auto& v = r.interval;
    s += csv::join({r.quantity, csv::fmt(v.median), csv::fmt(v.lo50),
                    csv::fmt(v.hi50), csv::fmt(v.lo80), csv::fmt(v.hi80),
                    csv::fmt(v.lo95), csv::fmt(v.hi95)}) +
         "\n";
  }
  return s;
}

// Features for one word: look it up in a features CSV if given, otherwise
// compute it against the bank.
WordFeatures word_features(const std::string& word, const std::string& features_path,
                           const std::string& bank_path, const std::string& usage_path) {
  if (!features_path.empty()) {
    auto table = read_features_file(features_path);
    auto it = table.find(word);
    if (it == table.end())
      throw std::runtime_error("word not in features file: " + word);
    return it->second;
  }
  if (bank_path.empty() || usage_path.empty())
    throw std::runtime_error("need --features, or --bank and --usage, to featurize '" +
                             word + "'");
  auto bank = load_wordbank_file(bank_path);
  auto usage = load_usage_table_file(usage_path);
  auto dist = GuessDistribution::uniform(common_guess_words(bank, 30));
  return feature_vector(word, bank, usage, dist);
}

int cmd_ingest(const std::string& raw_path, const std::string& out_path) {
  std::ifstream in(raw_path);
  if (!in) throw std::runtime_error("cannot open " + raw_path);
  auto raw = parse_raw(in);
  CorrectionStats stats;
  raw = apply_corrections(std::move(raw), default_corrections(), &stats);
  auto records = finalize_records(raw);
  auto out = open_out(out_path);
  write_canonical(out, records);
  std::cout << "rows: " << records.size()
            << "\ncorrections applied: " << stats.applied
            << "\ncorrections unmatched: " << stats.unmatched << "\n";
  return 0;
}

int cmd_features(const std::string& bank_path, const std::string& usage_path,
                 std::vector<std::string> words, const std::string& out_path) {
  auto bank = load_wordbank_file(bank_path);
  auto usage = load_usage_table_file(usage_path);
  auto dist = GuessDistribution::uniform(common_guess_words(bank, 30));
  if (words.empty()) words = bank.words();

  std::vector<std::string> ok_words;
  std::vector<WordFeatures> feats;
  int failed = 0;
  for (const auto& w : words) {
    try {
      feats.push_back(feature_vector(w, bank, usage, dist));
      ok_words.push_back(w);
    } catch (const std::exception& e) {
      std::cerr << "error: " << w << ": " << e.what() << "\n";
      ++failed;
    }
  }
  if (ok_words.empty()) throw std::runtime_error("no word could be featurized");
  // batch path for the whole-bank case (shares pattern histograms)
  if (words.size() == bank.size() && failed == 0)
    feats = batch_features(ok_words, bank, usage, dist);
  auto out = open_out(out_path);
  write_features_csv(out, ok_words, feats);
  std::cout << "words featurized: " << ok_words.size() << " (failed: " << failed
            << ")\n";
  return 0;
}

int cmd_select(const std::string& dataset_path, const std::string& features_path,
               double lambda, int min_hits, const std::string& out_path) {
  auto records = read_canonical_file(dataset_path);
  auto features = read_features_file(features_path);
  auto report = run_select(records, features, lambda, min_hits);

  json j;
  j["lambda"] = report.lambda;
  j["min_hits"] = report.min_hits;
  j["selected"] = report.selected;
  json coefs = json::object();
  for (int i = 0; i < 7; ++i) {
    json row = json::object();
    for (std::size_t k = 0; k < report.predictor_names.size(); ++k)
      row[report.predictor_names[k]] = report.coefficients[i][k];
    coefs["category_" + std::to_string(i + 1)] = row;
  }
  j["coefficients"] = coefs;
  std::string text = j.dump(2) + "\n";
  if (!out_path.empty()) open_out(out_path) << text;
  std::cout << text;
  return 0;
}

int cmd_fit(const std::string& dataset_path, const std::string& features_path,
            const RunConfig& cfg, const std::string& out_dir) {
  auto records = read_canonical_file(dataset_path);
  auto features = read_features_file(features_path);
  auto run = run_fit(records, features, cfg);
  save_run(out_dir, run);

  int high_rhat = 0, total = 0;
  for (const auto* chains :
       {&run.try_chains, &run.reports_chains, &run.hardmoders_chains})
    for (const auto& d : bayes::diagnostics(*chains)) {
      ++total;
      if (std::isfinite(d.rhat) && d.rhat > 1.05) {
        ++high_rhat;
        std::cerr << "warning: R-hat " << d.rhat << " for " << d.name << "\n";
      }
    }
  std::cout << "run written to " << out_dir << "\nparameters: " << total
            << ", R-hat > 1.05: " << high_rhat << "\n";
  return 0;
}

int cmd_predict(const std::string& run_dir, const std::string& word,
                const std::string& date_str, const std::string& features_path,
                const std::string& bank_path, const std::string& usage_path,
                const std::string& dataset_path, std::uint64_t seed,
                const std::string& out_dir) {
  auto run = load_run(run_dir);
  Date date = Date::parse(date_str);

  DayPredictive pred;
  if (!word.empty()) {
    auto f = word_features(word, features_path, bank_path, usage_path);
    pred = predict_word(run, f, date, seed);
  } else {
    // no word: average the standardized predictors over the observed words
    if (dataset_path.empty() || features_path.empty())
      throw std::runtime_error("omitting --word requires --dataset and --features");
    auto records = read_canonical_file(dataset_path);
    auto features = read_features_file(features_path);
    std::array<double, 4> x{};
    for (const auto& rec : records) {
      auto xi = standardized_predictors(features.at(rec.word),
                                        run.config.predictors, run.stats);
      for (int j = 0; j < 4; ++j) x[j] += xi[j];
    }
    for (auto& v : x) v /= static_cast<double>(records.size());
    long long offset = date.serial() - run.first_date.serial();
    if (offset < 0) throw std::runtime_error("prediction date precedes the data start");
    double T = scale_time_for(run.first_contest + static_cast<int>(offset),
                              run.first_contest, run.last_contest);
    pred = predictive_draws(run, x, T, date.day_of_week(), seed);
  }

  auto rows = predictive_summary(pred);
  std::string summary = summary_csv(rows);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    auto out = open_out((fs::path(out_dir) / "predictive.csv").string());
    out << "reports,hardmoders,t1,t2,t3,t4,t5,t6,t7\n";
    for (std::size_t k = 0; k < pred.reports.size(); ++k) {
      std::vector<std::string> row{std::to_string(pred.reports[k]),
                                   std::to_string(pred.hardmoders[k])};
      for (int i = 0; i < 7; ++i)
        row.push_back(std::to_string(pred.tries[k].counts[i]));
      out << csv::join(row) << '\n';
    }
    open_out((fs::path(out_dir) / "summary.csv").string()) << summary;
  }
  std::cout << summary;
  return 0;
}

int cmd_retrodict(const std::string& run_dir, const std::string& dataset_path,
                  const std::string& features_path, std::uint64_t seed,
                  const std::string& out_path) {
  auto run = load_run(run_dir);
  auto records = read_canonical_file(dataset_path);
  auto features = read_features_file(features_path);
  auto retro = retrodict(run, records, features, seed);

  std::string text =
      "contest,word,n_obs,nh_obs,reports_median,reports_lo95,reports_hi95,"
      "hardmoders_median,hardmoders_lo95,hardmoders_hi95,"
      "prop_median,prop_lo95,prop_hi95,n_covered95,nh_covered95,prop_covered95\n";
  for (const auto& r : retro.rows) {
    text += csv::join({std::to_string(r.contest), r.word, std::to_string(r.n_obs),
                       std::to_string(r.nh_obs), csv::fmt(r.reports.median),
                       csv::fmt(r.reports.lo95), csv::fmt(r.reports.hi95),
                       csv::fmt(r.hardmoders.median), csv::fmt(r.hardmoders.lo95),
                       csv::fmt(r.hardmoders.hi95), csv::fmt(r.proportion.median),
                       csv::fmt(r.proportion.lo95), csv::fmt(r.proportion.hi95),
                       std::to_string(int(r.n_covered95)),
                       std::to_string(int(r.nh_covered95)),
                       std::to_string(int(r.prop_covered95))}) +
            "\n";
  }
  if (!out_path.empty()) open_out(out_path) << text;
  std::cout << "days: " << retro.rows.size()
            << "\n95% coverage  reports: " << retro.coverage_reports
            << "  hardmoders: " << retro.coverage_hardmoders
            << "  proportion: " << retro.coverage_proportion << "\n";
  return 0;
}

int cmd_difficulty(const std::string& dataset_path, const std::string& run_dir,
                   const std::string& word, const std::string& date_str,
                   const std::string& features_path, const std::string& bank_path,
                   const std::string& usage_path, std::uint64_t seed,
                   const std::string& out_path) {
  if (!dataset_path.empty()) {
    // direct Beta fits on observed counts
    auto records = read_canonical_file(dataset_path);
    auto rows = difficulty_table(records);
    std::string text = "word,contest,alpha,beta,score,rmse,percentile\n";
    for (const auto& r : rows) {
      if (!word.empty() && r.word != word) continue;
      text += csv::join({r.word, std::to_string(r.contest), csv::fmt(r.alpha),
                         csv::fmt(r.beta), csv::fmt(r.score), csv::fmt(r.rmse),
                         csv::fmt(r.percentile)}) +
              "\n";
    }
    if (!out_path.empty()) open_out(out_path) << text;
    std::cout << text;
    return 0;
  }
  if (run_dir.empty() || word.empty())
    throw std::runtime_error("difficulty needs --dataset, or --run with --word");
  // posterior mode: per-draw Beta fits of the predictive try distribution
  auto run = load_run(run_dir);
  auto f = word_features(word, features_path, bank_path, usage_path);
  Date date = date_str.empty() ? run.first_date : Date::parse(date_str);
  auto pred = predict_word(run, f, date, seed);
  auto scores = difficulty_scores(pred.tries);
  auto s = summarize(scores);
  std::string text =
      "word,draws,median,lo50,hi50,lo80,hi80,lo95,hi95\n" +
      csv::join({word, std::to_string(scores.size()), csv::fmt(s.median),
                 csv::fmt(s.lo50), csv::fmt(s.hi50), csv::fmt(s.lo80),
                 csv::fmt(s.hi80), csv::fmt(s.lo95), csv::fmt(s.hi95)}) +
      "\n";
  if (!out_path.empty()) open_out(out_path) << text;
  std::cout << text;
  return 0;
}

int cmd_synth(int days, std::uint64_t seed, const std::string& out_dir) {
  auto synth = synth_dataset(days, seed);
  fs::create_directories(out_dir);
  {
    auto out = open_out((fs::path(out_dir) / "dataset.csv").string());
    write_canonical(out, synth.records);
  }
  {
    std::vector<std::string> words;
    std::vector<WordFeatures> feats;
    for (const auto& rec : synth.records) {
      words.push_back(rec.word);
      feats.push_back(synth.features.at(rec.word));
    }
    auto out = open_out((fs::path(out_dir) / "features.csv").string());
    write_features_csv(out, words, feats);
  }
  const auto& t = synth.truth;
  json truth;
  truth["predictors"] = synth.predictors;
  truth["try"] = {{"a", t.a}, {"sigma", t.sigma}};
  truth["reports"] = {{"b", t.b},
                      {"theta", t.theta},
                      {"gamma", t.gamma},
                      {"B", t.overdispersion}};
  truth["hardmoders"] = {
      {"c", t.c}, {"omega", t.omega}, {"lambda", t.lambda}, {"kappa", t.kappa}};
  std::string text = truth.dump(2) + "\n";
  open_out((fs::path(out_dir) / "truth.json").string()) << text;
  std::cout << "synthetic days: " << days << " -> " << out_dir << "\n" << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wordle word-difficulty modeling pipeline"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--seed", cfg.seed, "root RNG seed");
  app.add_option("--config", config_path, "JSON config file");

  // ingest
  std::string raw_path, out_path;
  auto* ingest = app.add_subcommand("ingest", "raw daily CSV -> canonical dataset");
  ingest->add_option("--raw", raw_path, "raw CSV")->required();
  ingest->add_option("--out", out_path, "output dataset file")->required();

  // features
  std::string bank_path, usage_path;
  std::vector<std::string> word_list;
  auto* features = app.add_subcommand("features", "compute the 8-feature battery");
  features->add_option("--bank", bank_path, "word bank file")->required();
  features->add_option("--usage", usage_path, "usage-frequency CSV")->required();
  features->add_option("--words", word_list, "explicit words (default: whole bank)");
  features->add_option("--out", out_path, "output features CSV")->required();

  // select
  std::string dataset_path, features_path;
  auto* select = app.add_subcommand("select", "Lasso predictor selection");
  select->add_option("--dataset", dataset_path)->required();
  select->add_option("--features", features_path)->required();
  select->add_option("--lambda", cfg.lambda, "L1 penalty");
  select->add_option("--min-hits", cfg.min_hits, "required nonzero regressions");
  select->add_option("--out", out_path, "output JSON");

  // fit
  auto* fit = app.add_subcommand("fit", "fit the three Bayesian submodels");
  fit->add_option("--dataset", dataset_path)->required();
  fit->add_option("--features", features_path)->required();
  fit->add_option("--chains", cfg.chains);
  fit->add_option("--warmup", cfg.warmup);
  fit->add_option("--draws", cfg.draws);
  fit->add_option("--predictors", cfg.predictors, "4 predictor column names");
  fit->add_option("--out", out_path, "run directory")->required();

  // predict
  std::string run_dir, word, date_str;
  auto* predict = app.add_subcommand("predict", "posterior predictive for a day");
  predict->add_option("--run", run_dir)->required();
  predict->add_option("--word", word, "target word (omit to average observed words)");
  predict->add_option("--date", date_str, "YYYY-MM-DD")->required();
  predict->add_option("--features", features_path, "features CSV with the word");
  predict->add_option("--bank", bank_path, "bank (to featurize on the fly)");
  predict->add_option("--usage", usage_path);
  predict->add_option("--dataset", dataset_path, "needed when --word is omitted");
  predict->add_option("--out", out_path, "output directory");

  // retrodict
  auto* retro = app.add_subcommand("retrodict", "per-day predictive vs observed");
  retro->add_option("--run", run_dir)->required();
  retro->add_option("--dataset", dataset_path)->required();
  retro->add_option("--features", features_path)->required();
  retro->add_option("--out", out_path, "output CSV");

  // difficulty
  auto* diff = app.add_subcommand("difficulty", "Beta-fit difficulty scores");
  diff->add_option("--dataset", dataset_path, "direct fits on observed counts");
  diff->add_option("--run", run_dir, "posterior mode (with --word)");
  diff->add_option("--word", word);
  diff->add_option("--date", date_str);
  diff->add_option("--features", features_path);
  diff->add_option("--bank", bank_path);
  diff->add_option("--usage", usage_path);
  diff->add_option("--out", out_path);

  // synth
  int synth_days = 100;
  auto* synth = app.add_subcommand("synth", "model-true synthetic dataset");
  synth->add_option("--days", synth_days);
  synth->add_option("--out", out_path, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      RunConfig from_file = cfg;
      apply_config_file(config_path, from_file);
      // explicit CLI flags win over the config file
      if (app.count("--seed") == 0) cfg.seed = from_file.seed;
      if (fit->count("--chains") == 0) cfg.chains = from_file.chains;
      if (fit->count("--warmup") == 0) cfg.warmup = from_file.warmup;
      if (fit->count("--draws") == 0) cfg.draws = from_file.draws;
      if (select->count("--lambda") == 0) cfg.lambda = from_file.lambda;
      if (select->count("--min-hits") == 0) cfg.min_hits = from_file.min_hits;
      if (fit->count("--predictors") == 0) cfg.predictors = from_file.predictors;
    }

    if (ingest->parsed()) return cmd_ingest(raw_path, out_path);
    if (features->parsed())
      return cmd_features(bank_path, usage_path, word_list, out_path);
    if (select->parsed())
      return cmd_select(dataset_path, features_path, cfg.lambda, cfg.min_hits,
                        out_path);
    if (fit->parsed()) return cmd_fit(dataset_path, features_path, cfg, out_path);
    if (predict->parsed())
      return cmd_predict(run_dir, word, date_str, features_path, bank_path,
                         usage_path, dataset_path, cfg.seed, out_path);
    if (retro->parsed())
      return cmd_retrodict(run_dir, dataset_path, features_path, cfg.seed, out_path);
    if (diff->parsed())
      return cmd_difficulty(dataset_path, run_dir, word, date_str, features_path,
                            bank_path, usage_path, cfg.seed, out_path);
    if (synth->parsed()) return cmd_synth(synth_days, cfg.seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
