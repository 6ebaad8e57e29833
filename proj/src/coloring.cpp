#include "wordle/coloring.hpp"

#include <stdexcept>

#include "wordle/wordbank.hpp"

namespace wordle {

void validate_word(std::string_view w) {
  if (w.size() != 5)
    throw std::invalid_argument("word must have exactly 5 letters: '" +
                                std::string(w) + "'");
  for (char c : w)
    if (c < 'a' || c > 'z')
      throw std::invalid_argument("word must be lowercase a-z: '" +
                                  std::string(w) + "'");
}

Pattern Pattern::from_code(int code) {
  Pattern p;
  for (int i = 4; i >= 0; --i) {
    p.tiles[i] = static_cast<TileColor>(code % 3);
    code /= 3;
  }
  return p;
}

std::string Pattern::str() const {
  std::string s(5, '.');
  for (int i = 0; i < 5; ++i) {
    if (tiles[i] == TileColor::Green) s[i] = 'G';
    else if (tiles[i] == TileColor::Yellow) s[i] = 'Y';
  }
  return s;
}

int feedback_code(std::string_view guess, std::string_view target) {
  // Pass 1: greens consume their target letters.
  int remaining[26] = {};
  bool green[5] = {};
  for (int i = 0; i < 5; ++i) {
    if (guess[i] == target[i]) green[i] = true;
    else ++remaining[target[i] - 'a'];
  }
  // Pass 2: yellows left-to-right while unconsumed occurrences remain.
  int code = 0;
  for (int i = 0; i < 5; ++i) {
    int t;
    if (green[i]) {
      t = 0;
    } else {
      int& r = remaining[guess[i] - 'a'];
      if (r > 0) { t = 1; --r; }
      else t = 2;
    }
    code = code * 3 + t;
  }
  return code;
}

Pattern feedback(std::string_view guess, std::string_view target) {
  validate_word(guess);
  validate_word(target);
  return Pattern::from_code(feedback_code(guess, target));
}

bool compatible(std::string_view candidate, std::string_view guess,
                const Pattern& observed) {
  validate_word(candidate);
  validate_word(guess);
  return feedback_code(guess, candidate) == observed.code();
}

int pool_size(std::string_view target, std::string_view guess,
              const WordBank& bank) {
  validate_word(guess);
  if (!bank.contains(target))
    throw std::invalid_argument("pool_size: target '" + std::string(target) +
                                "' not in bank");
  int want = feedback_code(guess, target);
  int n = 0;
  for (const auto& w : bank.words())
    if (feedback_code(guess, w) == want) ++n;
  return n;
}

}  // namespace wordle
