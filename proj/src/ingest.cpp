#include "wordle/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "wordle/csv.hpp"

namespace wordle {

Date Date::parse(const std::string& s) {
  Date d;
  if (std::sscanf(s.c_str(), "%d-%d-%d", &d.year, &d.month, &d.day) != 3)
    throw std::invalid_argument("bad date (want YYYY-MM-DD): " + s);
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
    throw std::invalid_argument("bad date: " + s);
  return d;
}

std::string Date::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

long long Date::serial() const {
  // days-from-civil (Howard Hinnant's algorithm)
  int y = year - (month <= 2);
  int era = (y >= 0 ? y : y - 399) / 400;
  unsigned yoe = static_cast<unsigned>(y - era * 400);
  unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<long long>(era) * 146097 + static_cast<long long>(doe) - 719468;
}

int Date::day_of_week() const {
  // serial() == 0 is 1970-01-01, a Thursday (=4 with Monday=1).
  long long s = serial();
  int w = static_cast<int>(((s % 7) + 7 + 3) % 7) + 1;
  return w;
}

void DailyRecord::check_invariants() const {
  long long sum = 0;
  for (long long c : try_counts) {
    if (c < 0) throw std::runtime_error("negative try count on " + date.str());
    sum += c;
  }
  if (sum != n_reports)
    throw std::runtime_error("try counts do not sum to reports on " + date.str());
  if (n_hardmode < 0 || n_hardmode > n_reports)
    throw std::runtime_error("hardmode count out of range on " + date.str());
  if (day_of_week < 1 || day_of_week > 7)
    throw std::runtime_error("day of week out of range on " + date.str());
}

const CorrectionTable& default_corrections() {
  static const CorrectionTable table = {
      {239, "hardmode", "3249", "9249"},
      {314, "word", "tash", "trash"},
      {500, "hardmode", "3667", "2667"},
      {525, "word", "clen", "clean"},
      {529, "reported", "2569", "25569"},
      {540, "word", "na\xc3\xafve", "naive"},
      {545, "word", "rprobe", "probe"},
  };
  return table;
}

std::vector<RawRecord> parse_raw(std::istream& in) {
  auto t = csv::read(in);
  const char* pcols[7] = {"p1", "p2", "p3", "p4", "p5", "p6", "px"};
  std::size_t cdate = t.col("date"), ccontest = t.col("contest"),
              cword = t.col("word"), crep = t.col("reported"),
              chard = t.col("hardmode");
  std::size_t cp[7];
  for (int i = 0; i < 7; ++i) cp[i] = t.col(pcols[i]);

  std::vector<RawRecord> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("raw csv line " + std::to_string(r + 2) + ": " + why);
    };
    std::size_t need = std::max({cdate, ccontest, cword, crep, chard,
                                 *std::max_element(cp, cp + 7)});
    if (row.size() <= need) fail("too few columns");
    RawRecord rec;
    try {
      rec.date = Date::parse(row[cdate]);
      rec.contest = std::stoi(row[ccontest]);
      rec.word = row[cword];
      rec.reported = std::stoll(row[crep]);
      rec.hardmode = std::stoll(row[chard]);
      for (int i = 0; i < 7; ++i) {
        std::size_t used = 0;
        rec.pct[i] = std::stod(row[cp[i]], &used);
        if (used != row[cp[i]].size()) fail("unparseable percentage '" + row[cp[i]] + "'");
      }
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RawRecord> apply_corrections(std::vector<RawRecord> records,
                                         const CorrectionTable& table,
                                         CorrectionStats* stats) {
  CorrectionStats st;
  for (const auto& c : table) {
    bool matched = false;
    for (auto& r : records) {
      if (r.contest != c.contest) continue;
      matched = true;
      if (c.field == "word") {
        if (r.word == c.old_value) { r.word = c.new_value; ++st.applied; }
      } else if (c.field == "hardmode") {
        if (std::to_string(r.hardmode) == c.old_value) {
          r.hardmode = std::stoll(c.new_value);
          ++st.applied;
        }
      } else if (c.field == "reported") {
        if (std::to_string(r.reported) == c.old_value) {
          r.reported = std::stoll(c.new_value);
          ++st.applied;
        }
      } else {
        throw std::invalid_argument("unknown correction field: " + c.field);
      }
    }
    if (!matched) ++st.unmatched;
  }
  if (stats) *stats = st;
  return records;
}

std::array<long long, 7> percentages_to_counts(const std::array<double, 7>& pct,
                                               long long n_reports) {
  double sum = 0.0;
  for (double p : pct) {
    if (p < 0.0) throw std::invalid_argument("negative percentage");
    sum += p;
  }
  if (sum == 0.0) {
    if (n_reports > 0)
      throw std::invalid_argument("all-zero percentages with positive reports");
    return {};
  }
  std::array<long long, 7> counts{};
  std::array<double, 7> frac{};
  long long assigned = 0;
  for (int i = 0; i < 7; ++i) {
    double exact = pct[i] / sum * static_cast<double>(n_reports);
    counts[i] = static_cast<long long>(std::floor(exact));
    frac[i] = exact - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  // Hand the remaining units back by descending remainder, ties by index.
  std::array<int, 7> order = {0, 1, 2, 3, 4, 5, 6};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return frac[a] > frac[b]; });
  for (int k = 0; assigned < n_reports; ++k) {
    ++counts[order[k % 7]];
    ++assigned;
  }
  return counts;
}

void scale_time(std::vector<DailyRecord>& records) {
  if (records.size() < 2)
    throw std::invalid_argument("scale_time needs at least 2 records");
  int first = records[0].contest, last = records[0].contest;
  for (const auto& r : records) {
    first = std::min(first, r.contest);
    last = std::max(last, r.contest);
  }
  for (auto& r : records) r.T = scale_time_for(r.contest, first, last);
}

double scale_time_for(int contest, int first_contest, int last_contest) {
  if (last_contest == first_contest)
    throw std::invalid_argument("scale_time: degenerate contest range");
  return static_cast<double>(contest - first_contest) /
         static_cast<double>(last_contest - first_contest);
}

std::vector<DailyRecord> finalize_records(const std::vector<RawRecord>& raw) {
  std::vector<DailyRecord> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    DailyRecord d;
    d.date = r.date;
    d.contest = r.contest;
    d.word = r.word;
    d.n_reports = r.reported;
    d.n_hardmode = r.hardmode;
    d.try_counts = percentages_to_counts(r.pct, r.reported);
    d.day_of_week = r.date.day_of_week();
    out.push_back(std::move(d));
  }
  scale_time(out);
  for (const auto& d : out) d.check_invariants();
  return out;
}

void write_canonical(std::ostream& out, const std::vector<DailyRecord>& records) {
  out << "date,contest,word,reported,hardmode,t1,t2,t3,t4,t5,t6,t7,T,dow\n";
  for (const auto& r : records) {
    out << r.date.str() << ',' << r.contest << ',' << r.word << ','
        << r.n_reports << ',' << r.n_hardmode;
    for (long long c : r.try_counts) out << ',' << c;
    out << ',' << csv::fmt(r.T) << ',' << r.day_of_week << '\n';
  }
}

std::vector<DailyRecord> read_canonical(std::istream& in) {
  auto t = csv::read(in);
  std::size_t cdate = t.col("date"), ccontest = t.col("contest"),
              cword = t.col("word"), crep = t.col("reported"),
              chard = t.col("hardmode"), cT = t.col("T"), cdow = t.col("dow");
  std::size_t ct[7];
  for (int i = 0; i < 7; ++i)
    ct[i] = t.col("t" + std::to_string(i + 1));
  std::vector<DailyRecord> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    DailyRecord d;
    d.date = Date::parse(row[cdate]);
    d.contest = std::stoi(row[ccontest]);
    d.word = row[cword];
    d.n_reports = std::stoll(row[crep]);
    d.n_hardmode = std::stoll(row[chard]);
    for (int i = 0; i < 7; ++i) d.try_counts[i] = std::stoll(row[ct[i]]);
    d.T = std::stod(row[cT]);
    d.day_of_week = std::stoi(row[cdow]);
    d.check_invariants();
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DailyRecord> read_canonical_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  return read_canonical(in);
}

}  // namespace wordle
