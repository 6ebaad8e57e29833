#include "wordle/wordbank.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "wordle/coloring.hpp"

namespace wordle {

WordBank::WordBank(std::vector<std::string> words) : words_(std::move(words)) {
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    validate_word(words_[i]);
    if (!index_.emplace(words_[i], i).second)
      throw std::invalid_argument("duplicate word in bank: " + words_[i]);
  }
  if (words_.empty()) throw std::invalid_argument("empty wordbank");
}

bool WordBank::contains(std::string_view w) const {
  return index_.find(std::string(w)) != index_.end();
}

std::optional<std::size_t> WordBank::index_of(std::string_view w) const {
  auto it = index_.find(std::string(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WordBank load_wordbank(std::istream& in, LoadStats* stats) {
  std::vector<std::string> words;
  std::unordered_map<std::string, bool> seen;
  LoadStats st;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                             line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    std::string w = line;
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    bool ok = w.size() == 5 &&
              std::all_of(w.begin(), w.end(),
                          [](char c) { return c >= 'a' && c <= 'z'; });
    if (!ok) {
      ++st.skipped;
      continue;
    }
    if (seen.emplace(w, true).second) {
      words.push_back(std::move(w));
      ++st.kept;
    }
  }
  if (stats) *stats = st;
  if (words.empty()) throw std::runtime_error("wordbank: no valid words in input");
  return WordBank(std::move(words));
}

WordBank load_wordbank_file(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open wordbank file: " + path);
  return load_wordbank(in, stats);
}

LetterFreqTable letter_frequency(const WordBank& bank) {
  LetterFreqTable t;
  for (const auto& w : bank.words()) {
    bool has[26] = {};
    for (char c : w) has[c - 'a'] = true;
    for (int l = 0; l < 26; ++l)
      if (has[l]) t.freq[l] += 1.0;
  }
  for (auto& f : t.freq) f /= static_cast<double>(bank.size());
  return t;
}

OrderFreqTable order_frequency(const WordBank& bank) {
  OrderFreqTable t;
  std::array<double, 26> containing{};
  std::array<std::array<double, 5>, 26> at{};
  for (const auto& w : bank.words()) {
    bool has[26] = {};
    for (int i = 0; i < 5; ++i) {
      int l = w[i] - 'a';
      has[l] = true;
      at[l][i] += 1.0;
    }
    for (int l = 0; l < 26; ++l)
      if (has[l]) containing[l] += 1.0;
  }
  for (int l = 0; l < 26; ++l)
    for (int i = 0; i < 5; ++i)
      t.cond[l][i] = containing[l] > 0 ? at[l][i] / containing[l] : 0.0;
  return t;
}

double mean_colored_score(std::string_view guess, const WordBank& bank) {
  long long total = 0;
  for (const auto& target : bank.words()) {
    int code = feedback_code(guess, target);
    for (int i = 0; i < 5; ++i) {
      if (code % 3 != 2) ++total;  // green or yellow
      code /= 3;
    }
  }
  return static_cast<double>(total) / static_cast<double>(bank.size());
}

namespace {
std::vector<std::string> rank_guesses(const WordBank& bank, std::size_t k,
                                      const std::vector<double>& score) {
  std::vector<std::size_t> order(bank.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return bank[a] < bank[b];
  });
  std::vector<std::string> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(bank[order[i]]);
  return out;
}
}  // namespace

std::vector<std::string> common_guess_words(const WordBank& bank, std::size_t k) {
  if (k > bank.size())
    throw std::invalid_argument("common_guess_words: k exceeds bank size");
  std::vector<double> score(bank.size());
  const auto n = static_cast<std::int64_t>(bank.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t g = 0; g < n; ++g)
    score[g] = mean_colored_score(bank[g], bank);
  return rank_guesses(bank, k, score);
}

std::vector<std::string> common_guess_words_serial(const WordBank& bank,
                                                   std::size_t k) {
  if (k > bank.size())
    throw std::invalid_argument("common_guess_words: k exceeds bank size");
  std::vector<double> score(bank.size());
  for (std::size_t g = 0; g < bank.size(); ++g)
    score[g] = mean_colored_score(bank[g], bank);
  return rank_guesses(bank, k, score);
}

}  // namespace wordle
