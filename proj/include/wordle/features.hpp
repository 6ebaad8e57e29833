#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordle/wordbank.hpp"

namespace wordle {

// word -> relative usage frequency in general English.  Missing words
// resolve to 0 (counted as warnings, not errors).
class UsageTable {
 public:
  UsageTable() = default;
  explicit UsageTable(std::unordered_map<std::string, double> values);

  double get(std::string_view word) const;       // 0 when absent
  bool has(std::string_view word) const;
  std::size_t size() const { return values_.size(); }

 private:
  std::unordered_map<std::string, double> values_;
};

// CSV with header `word,frequency`.
UsageTable load_usage_table(std::istream& in);
UsageTable load_usage_table_file(const std::string& path);

// Weighted distribution over guess words (the D of the Subset Entropy).
struct GuessDistribution {
  std::vector<std::string> support;
  std::vector<double> weights;  // >= 0, sum to 1

  static GuessDistribution uniform(std::vector<std::string> words);
  void validate() const;
};

struct WordFeatures {
  int vowels = 0;
  int unique_letters = 0;
  double usage = 0.0;
  double avg_green = 0.0;
  double avg_yellow = 0.0;
  double avg_colored = 0.0;
  double positional_entropy = 0.0;  // bits
  double subset_entropy = 0.0;      // bits

  // Canonical column order for CSV output and design matrices.
  static const std::vector<std::string>& names();
  double by_name(const std::string& name) const;
};

int vowel_count(std::string_view word);     // a e i o u, with multiplicity
int unique_letters(std::string_view word);
double usage_frequency(std::string_view word, const UsageTable& table);

struct AvgTiles {
  double green = 0.0, yellow = 0.0, colored = 0.0;
};
// Means over guesses drawn uniformly from the bank of the tile counts of
// feedback(guess, target).
AvgTiles avg_tiles(std::string_view target, const WordBank& bank);

// H(X) = sum_i -P_i(X_i) log2 P_i(X_i), with P_i(l) = LetterFreq[l] *
// OrderFreq[l][i].  Zero-probability positions contribute 0; a letter
// absent from the bank entirely is an error.
double positional_entropy(std::string_view word, const LetterFreqTable& lf,
                          const OrderFreqTable& of);

// I_t(g) = log2(|bank| / n_1).
double information_factor(std::string_view target, std::string_view guess,
                          const WordBank& bank);

// e(t) = E_{g~D}[I_t(g)].
double subset_entropy(std::string_view target, const GuessDistribution& dist,
                      const WordBank& bank);

// All eight features for one word.  Target-dependent features for a word
// outside the bank are computed with the word temporarily appended.
WordFeatures feature_vector(std::string_view word, const WordBank& bank,
                            const UsageTable& usage, const GuessDistribution& dist);

// Batch extraction over many targets.  Shares the per-guess pattern
// histograms across targets, so the whole bank costs O(|dist|*|bank|)
// feedback evaluations instead of O(|dist|*|bank|^2).  OpenMP-parallel;
// _serial is the reference implementation.
std::vector<WordFeatures> batch_features(const std::vector<std::string>& words,
                                         const WordBank& bank,
                                         const UsageTable& usage,
                                         const GuessDistribution& dist);
std::vector<WordFeatures> batch_features_serial(const std::vector<std::string>& words,
                                                const WordBank& bank,
                                                const UsageTable& usage,
                                                const GuessDistribution& dist);

}  // namespace wordle
