#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace wordle {

struct Date {
  int year = 0, month = 0, day = 0;

  static Date parse(const std::string& s);  // YYYY-MM-DD
  std::string str() const;
  long long serial() const;       // days since 1970-01-01
  int day_of_week() const;        // Monday = 1 .. Sunday = 7
  auto operator<=>(const Date&) const = default;
};

// As parsed from the raw daily-report CSV; percentages still raw.
struct RawRecord {
  Date date;
  int contest = 0;
  std::string word;
  long long reported = 0;
  long long hardmode = 0;
  std::array<double, 7> pct{};  // p1..p6, px
};

// Fully reconstructed daily record.
struct DailyRecord {
  Date date;
  int contest = 0;
  std::string word;
  long long n_reports = 0;
  long long n_hardmode = 0;
  std::array<long long, 7> try_counts{};  // slot 7 = failures
  double T = 0.0;                         // scaled time
  int day_of_week = 0;                    // Monday = 1

  void check_invariants() const;  // throws on violation
};

struct Correction {
  int contest = 0;
  std::string field;   // "word" | "hardmode" | "reported"
  std::string old_value;
  std::string new_value;
};

using CorrectionTable = std::vector<Correction>;

// The shipped default: the seven documented data errors.
const CorrectionTable& default_corrections();

// Raw CSV columns (case-insensitive header):
// date, contest, word, reported, hardmode, p1..p6, px
std::vector<RawRecord> parse_raw(std::istream& in);

struct CorrectionStats {
  int applied = 0;
  int unmatched = 0;  // corrections whose day was absent (warning)
};
std::vector<RawRecord> apply_corrections(std::vector<RawRecord> records,
                                         const CorrectionTable& table,
                                         CorrectionStats* stats = nullptr);

// Largest-remainder reconstruction: normalize, scale by n_reports, floor,
// then hand back one unit at a time by descending fractional remainder
// (ties by ascending category index) until the sum matches.
std::array<long long, 7> percentages_to_counts(const std::array<double, 7>& pct,
                                               long long n_reports);

// Linear map on contest number: first record T=0, last T=1.  Prediction
// dates beyond the data extrapolate the same line (T > 1).
void scale_time(std::vector<DailyRecord>& records);
double scale_time_for(int contest, int first_contest, int last_contest);

// parse -> counts -> dow -> scale_time -> invariant check, in one pass.
std::vector<DailyRecord> finalize_records(const std::vector<RawRecord>& raw);

// Canonical dataset file: date,contest,word,reported,hardmode,t1..t7,T,dow.
void write_canonical(std::ostream& out, const std::vector<DailyRecord>& records);
std::vector<DailyRecord> read_canonical(std::istream& in);
std::vector<DailyRecord> read_canonical_file(const std::string& path);

}  // namespace wordle
