#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordle {

// Ordered, duplicate-free set of lowercase 5-letter a-z words.
class WordBank {
 public:
  WordBank() = default;
  explicit WordBank(std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  const std::string& operator[](std::size_t i) const { return words_[i]; }
  bool contains(std::string_view w) const;
  std::optional<std::size_t> index_of(std::string_view w) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LoadStats {
  std::size_t kept = 0;
  std::size_t skipped = 0;  // tokens that were not valid 5-letter a-z words
};

// One token per line; lines are lowercased, invalid tokens skipped (counted
// in stats), duplicates dropped, order preserved.  Throws if nothing valid
// remains.
WordBank load_wordbank(std::istream& in, LoadStats* stats = nullptr);
WordBank load_wordbank_file(const std::string& path, LoadStats* stats = nullptr);

// freq[letter] = fraction of bank words containing the letter at least once.
struct LetterFreqTable {
  std::array<double, 26> freq{};
};

// cond[letter][i] = P(letter at position i | letter appears in the word).
// Rows can sum above 1: a letter may occupy several positions of one word.
struct OrderFreqTable {
  std::array<std::array<double, 5>, 26> cond{};
};

LetterFreqTable letter_frequency(const WordBank& bank);
OrderFreqTable order_frequency(const WordBank& bank);

// Mean green+yellow tile count of guessing `guess` against a uniformly
// random bank target.  The ranking metric behind the common-guess list.
double mean_colored_score(std::string_view guess, const WordBank& bank);

// Top-k bank words by mean_colored_score, descending, ties lexicographic.
// OpenMP-parallel over guesses; _serial is the reference implementation.
std::vector<std::string> common_guess_words(const WordBank& bank, std::size_t k);
std::vector<std::string> common_guess_words_serial(const WordBank& bank, std::size_t k);

}  // namespace wordle
