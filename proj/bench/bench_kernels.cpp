// Timing harness for the two O(n^2)-ish kernels, parallel vs the serial
// reference.  Usage: bench_kernels [bank_file] [n_words] [n_targets]

#include <chrono>
#include <iostream>
#include <random>

#include "wordle/features.hpp"
#include "wordle/rng.hpp"
#include "wordle/wordbank.hpp"

using namespace wordle;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

WordBank random_bank(std::size_t n, std::uint64_t seed) {
  auto rng = make_stream(seed, 7777);
  std::uniform_int_distribution<int> letter(0, 25);
  std::vector<std::string> words;
  words.reserve(n);
  while (words.size() < n) {
    std::string w(5, 'a');
    for (auto& ch : w) ch = static_cast<char>('a' + letter(rng));
    words.push_back(w);
  }
  return WordBank(std::move(words));  // dedups; close enough for timing
}

}  // namespace

int main(int argc, char** argv) {
  std::string bank_path = argc > 1 ? argv[1] : "";
  std::size_t n_words = argc > 2 ? std::stoul(argv[2]) : 3000;
  std::size_t n_targets = argc > 3 ? std::stoul(argv[3]) : 300;

  WordBank bank;
  if (!bank_path.empty()) {
    bank = load_wordbank_file(bank_path);
    if (bank.size() > n_words) {
      std::vector<std::string> trimmed(bank.words().begin(),
                                       bank.words().begin() + n_words);
      bank = WordBank(std::move(trimmed));
    }
  } else {
    bank = random_bank(n_words, 1);
  }
  std::cout << "bank size: " << bank.size() << "\n";

  // kernel 1: common-guess ranking (mean colored score over all pairs)
  auto t0 = Clock::now();
  auto serial = common_guess_words_serial(bank, 30);
  auto t1 = Clock::now();
  auto parallel = common_guess_words(bank, 30);
  auto t2 = Clock::now();
  std::cout << "common_guess_words  serial: " << seconds(t0, t1)
            << " s  parallel: " << seconds(t1, t2)
            << " s  match: " << (serial == parallel ? "yes" : "NO") << "\n";

  // kernel 2: batch feature extraction over a target subset
  UsageTable usage;
  auto dist = GuessDistribution::uniform(parallel);
  std::vector<std::string> targets(bank.words().begin(),
                                   bank.words().begin() +
                                       std::min(n_targets, bank.size()));

  t0 = Clock::now();
  auto fs = batch_features_serial(targets, bank, usage, dist);
  t1 = Clock::now();
  auto fp = batch_features(targets, bank, usage, dist);
  t2 = Clock::now();
  bool match = fs.size() == fp.size();
  for (std::size_t i = 0; match && i < fs.size(); ++i)
    match = std::abs(fs[i].subset_entropy - fp[i].subset_entropy) < 1e-12 &&
            std::abs(fs[i].avg_colored - fp[i].avg_colored) < 1e-12;
  std::cout << "batch_features      serial: " << seconds(t0, t1)
            << " s  parallel: " << seconds(t1, t2)
            << " s  match: " << (match ? "yes" : "NO") << "\n";
  return 0;
}
