#include "wordle/features.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "wordle/coloring.hpp"
#include "wordle/csv.hpp"

namespace wordle {

UsageTable::UsageTable(std::unordered_map<std::string, double> values)
    : values_(std::move(values)) {
  for (const auto& [w, v] : values_)
    if (v < 0.0)
      throw std::invalid_argument("usage table: negative frequency for " + w);
}

double UsageTable::get(std::string_view word) const {
  auto it = values_.find(std::string(word));
  return it == values_.end() ? 0.0 : it->second;
}

bool UsageTable::has(std::string_view word) const {
  return values_.find(std::string(word)) != values_.end();
}

UsageTable load_usage_table(std::istream& in) {
  auto t = csv::read(in);
  auto wc = t.col("word");
  auto fc = t.col("frequency");
  std::unordered_map<std::string, double> values;
  values.reserve(t.rows.size());
  for (const auto& row : t.rows)
    values[row[wc]] = std::stod(row[fc]);
  return UsageTable(std::move(values));
}

UsageTable load_usage_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open usage table: " + path);
  return load_usage_table(in);
}

GuessDistribution GuessDistribution::uniform(std::vector<std::string> words) {
  GuessDistribution d;
  d.weights.assign(words.size(), 1.0 / static_cast<double>(words.size()));
  d.support = std::move(words);
  d.validate();
  return d;
}

void GuessDistribution::validate() const {
  if (support.empty()) throw std::invalid_argument("guess distribution: empty support");
  if (support.size() != weights.size())
    throw std::invalid_argument("guess distribution: support/weight size mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("guess distribution: negative weight");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("guess distribution: weights must sum to 1");
}

const std::vector<std::string>& WordFeatures::names() {
  static const std::vector<std::string> n = {
      "vowels",       "unique_letters",     "usage",
      "avg_green",    "avg_yellow",         "avg_colored",
      "positional_entropy", "subset_entropy"};
  return n;
}

double WordFeatures::by_name(const std::string& name) const {
  if (name == "vowels") return vowels;
  if (name == "unique_letters") return unique_letters;
  if (name == "usage") return usage;
  if (name == "avg_green") return avg_green;
  if (name == "avg_yellow") return avg_yellow;
  if (name == "avg_colored") return avg_colored;
  if (name == "positional_entropy") return positional_entropy;
  if (name == "subset_entropy") return subset_entropy;
  throw std::invalid_argument("unknown feature: " + name);
}

int vowel_count(std::string_view word) {
  validate_word(word);
  int n = 0;
  for (char c : word)
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') ++n;
  return n;
}

int unique_letters(std::string_view word) {
  validate_word(word);
  bool seen[26] = {};
  int n = 0;
  for (char c : word)
    if (!seen[c - 'a']) { seen[c - 'a'] = true; ++n; }
  return n;
}

double usage_frequency(std::string_view word, const UsageTable& table) {
  validate_word(word);
  return table.get(word);
}

AvgTiles avg_tiles(std::string_view target, const WordBank& bank) {
  validate_word(target);
  if (bank.size() == 0) throw std::invalid_argument("avg_tiles: empty bank");
  long long green = 0, yellow = 0;
  for (const auto& guess : bank.words()) {
    int code = feedback_code(guess, target);
    for (int i = 0; i < 5; ++i) {
      int t = code % 3;
      code /= 3;
      if (t == 0) ++green;
      else if (t == 1) ++yellow;
    }
  }
  AvgTiles a;
  a.green = static_cast<double>(green) / bank.size();
  a.yellow = static_cast<double>(yellow) / bank.size();
  a.colored = a.green + a.yellow;
  return a;
}

double positional_entropy(std::string_view word, const LetterFreqTable& lf,
                          const OrderFreqTable& of) {
  validate_word(word);
  double h = 0.0;
  for (int i = 0; i < 5; ++i) {
    int l = word[i] - 'a';
    if (lf.freq[l] == 0.0)
      throw std::invalid_argument(std::string("positional_entropy: letter '") +
                                  word[i] + "' never appears in the bank");
    double p = lf.freq[l] * of.cond[l][i];
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double information_factor(std::string_view target, std::string_view guess,
                          const WordBank& bank) {
  int n1 = pool_size(target, guess, bank);
  return std::log2(static_cast<double>(bank.size()) / n1);
}

double subset_entropy(std::string_view target, const GuessDistribution& dist,
                      const WordBank& bank) {
  dist.validate();
  double e = 0.0;
  for (std::size_t g = 0; g < dist.support.size(); ++g)
    if (dist.weights[g] > 0.0)
      e += dist.weights[g] * information_factor(target, dist.support[g], bank);
  return e;
}

namespace {

// Pattern-count histogram for one guess over the bank: pool_size(t, g)
// becomes a single lookup at feedback_code(g, t).
struct GuessHistogram {
  std::array<int, 243> count{};
};

GuessHistogram make_histogram(std::string_view guess, const WordBank& bank) {
  GuessHistogram h;
  for (const auto& w : bank.words()) ++h.count[feedback_code(guess, w)];
  return h;
}

WordFeatures features_one(const std::string& word, const WordBank& bank,
                          const UsageTable& usage, const GuessDistribution& dist,
                          const LetterFreqTable& lf, const OrderFreqTable& of,
                          const std::vector<GuessHistogram>& hists) {
  WordFeatures f;
  f.vowels = vowel_count(word);
  f.unique_letters = unique_letters(word);
  f.usage = usage_frequency(word, usage);
  auto tiles = avg_tiles(word, bank);
  f.avg_green = tiles.green;
  f.avg_yellow = tiles.yellow;
  f.avg_colored = tiles.colored;
  f.positional_entropy = positional_entropy(word, lf, of);

  // Words outside the bank are treated as appended for pool computations.
  bool in_bank = bank.contains(word);
  double n = static_cast<double>(bank.size()) + (in_bank ? 0.0 : 1.0);
  double e = 0.0;
  for (std::size_t g = 0; g < dist.support.size(); ++g) {
    if (dist.weights[g] == 0.0) continue;
    int code = feedback_code(dist.support[g], word);
    double n1 = hists[g].count[code] + (in_bank ? 0.0 : 1.0);
    e += dist.weights[g] * std::log2(n / n1);
  }
  f.subset_entropy = e;
  return f;
}

}  // namespace

WordFeatures feature_vector(std::string_view word, const WordBank& bank,
                            const UsageTable& usage, const GuessDistribution& dist) {
  validate_word(word);
  dist.validate();
  auto lf = letter_frequency(bank);
  auto of = order_frequency(bank);
  std::vector<GuessHistogram> hists;
  hists.reserve(dist.support.size());
  for (const auto& g : dist.support) hists.push_back(make_histogram(g, bank));
  return features_one(std::string(word), bank, usage, dist, lf, of, hists);
}

std::vector<WordFeatures> batch_features(const std::vector<std::string>& words,
                                         const WordBank& bank,
                                         const UsageTable& usage,
                                         const GuessDistribution& dist) {
  dist.validate();
  auto lf = letter_frequency(bank);
  auto of = order_frequency(bank);
  std::vector<GuessHistogram> hists(dist.support.size());
  const auto ng = static_cast<std::int64_t>(dist.support.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t g = 0; g < ng; ++g)
    hists[g] = make_histogram(dist.support[g], bank);

  std::vector<WordFeatures> out(words.size());
  const auto nw = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nw; ++i)
    out[i] = features_one(words[i], bank, usage, dist, lf, of, hists);
  return out;
}

std::vector<WordFeatures> batch_features_serial(const std::vector<std::string>& words,
                                                const WordBank& bank,
                                                const UsageTable& usage,
                                                const GuessDistribution& dist) {
  dist.validate();
  auto lf = letter_frequency(bank);
  auto of = order_frequency(bank);
  std::vector<GuessHistogram> hists;
  hists.reserve(dist.support.size());
  for (const auto& g : dist.support) hists.push_back(make_histogram(g, bank));
  std::vector<WordFeatures> out;
  out.reserve(words.size());
  for (const auto& w : words)
    out.push_back(features_one(w, bank, usage, dist, lf, of, hists));
  return out;
}

}  // namespace wordle
