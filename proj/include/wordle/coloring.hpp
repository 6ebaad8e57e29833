#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace wordle {

class WordBank;

enum class TileColor : std::uint8_t { Green = 0, Yellow = 1, Gray = 2 };

// 5-tile feedback for one guess against one target.  There are 3^5 = 243
// possible patterns; code() packs a pattern into [0, 243) base-3,
// tile 0 most significant.
struct Pattern {
  std::array<TileColor, 5> tiles{};

  bool operator==(const Pattern&) const = default;
  int code() const {
    int c = 0;
    for (auto t : tiles) c = c * 3 + static_cast<int>(t);
    return c;
  }
  static Pattern from_code(int code);
  std::string str() const;  // e.g. "GY..." with G/Y/. for green/yellow/gray
};

// Throws std::invalid_argument unless w is exactly 5 chars of a-z.
void validate_word(std::string_view w);

// Official Wordle tile feedback with duplicate-letter semantics: greens
// consume their target letters first, then yellows are assigned
// left-to-right while unconsumed occurrences remain.
Pattern feedback(std::string_view guess, std::string_view target);

// feedback packed straight to a pattern code; no validation, hot path.
int feedback_code(std::string_view guess, std::string_view target);

// Exact-pattern compatibility: candidate survives iff it would have
// produced the observed pattern for this guess.
bool compatible(std::string_view candidate, std::string_view guess,
                const Pattern& observed);

// n_1 of the candidate-pool shrink factor: how many bank words are
// compatible with feedback(guess, target).  Target must be in the bank,
// so the result is always >= 1.
int pool_size(std::string_view target, std::string_view guess,
              const WordBank& bank);

}  // namespace wordle
