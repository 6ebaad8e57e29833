#include <doctest.h>

#include <random>
#include <sstream>

#include "wordle/ingest.hpp"

using namespace wordle;

TEST_CASE("date parsing, serial, day of week") {
  auto d = Date::parse("2022-01-07");
  CHECK(d.year == 2022);
  CHECK(d.month == 1);
  CHECK(d.day == 7);
  CHECK(d.str() == "2022-01-07");
  CHECK_THROWS_AS(Date::parse("2022/01/07"), std::invalid_argument);
  CHECK_THROWS_AS(Date::parse("2022-13-01"), std::invalid_argument);

  CHECK(Date{1970, 1, 1}.serial() == 0);
  CHECK(Date{1970, 1, 2}.serial() == 1);
  CHECK(Date{2000, 3, 1}.serial() == 11017);
  CHECK(Date{1970, 1, 1}.day_of_week() == 4);   // Thursday
  CHECK(Date{2022, 1, 3}.day_of_week() == 1);   // Monday
  CHECK(Date{2022, 1, 9}.day_of_week() == 7);   // Sunday
  CHECK(Date{2022, 1, 3} < Date{2022, 1, 9});
}

TEST_CASE("percentages_to_counts property suite") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<long long> nn(1, 1000000);
  for (int rep = 0; rep < 2000; ++rep) {
    std::array<double, 7> pct{};
    double sum = 0;
    for (auto& p : pct) { p = u(rng); sum += p; }
    long long n = nn(rng);
    auto counts = percentages_to_counts(pct, n);
    long long total = 0;
    for (int i = 0; i < 7; ++i) {
      total += counts[i];
      double exact = pct[i] / sum * static_cast<double>(n);
      CHECK(std::abs(static_cast<double>(counts[i]) - exact) < 1.0);
    }
    CHECK(total == n);  // sum exactness
  }
}

TEST_CASE("percentages_to_counts idempotence on integral inputs") {
  std::mt19937_64 rng(100);
  for (int rep = 0; rep < 500; ++rep) {
    std::array<long long, 7> truth{};
    long long n = 0;
    std::uniform_int_distribution<long long> c(0, 500);
    for (auto& t : truth) { t = c(rng); n += t; }
    if (n == 0) truth[0] = n = 1;
    std::array<double, 7> pct{};
    for (int i = 0; i < 7; ++i) pct[i] = 100.0 * truth[i] / n;
    CHECK(percentages_to_counts(pct, n) == truth);
  }
}

TEST_CASE("percentages_to_counts edge cases") {
  CHECK_THROWS(percentages_to_counts({-1, 0, 0, 0, 0, 0, 101}, 10));
  CHECK_THROWS(percentages_to_counts({0, 0, 0, 0, 0, 0, 0}, 10));
  CHECK(percentages_to_counts({0, 0, 0, 0, 0, 0, 0}, 0) ==
        std::array<long long, 7>{});
  // equal remainders hand units back by ascending category index
  CHECK(percentages_to_counts({1, 1, 1, 1, 1, 1, 1}, 10) ==
        std::array<long long, 7>{2, 2, 2, 1, 1, 1, 1});
}

TEST_CASE("scale_time endpoints and extrapolation") {
  CHECK(scale_time_for(200, 200, 500) == 0.0);
  CHECK(scale_time_for(500, 200, 500) == 1.0);
  CHECK(scale_time_for(350, 200, 500) == doctest::Approx(0.5));
  CHECK(scale_time_for(650, 200, 500) == doctest::Approx(1.5));  // beyond data
  CHECK_THROWS(scale_time_for(3, 3, 3));
}

static const char* kRawCsv =
    "date,contest,word,reported,hardmode,p1,p2,p3,p4,p5,p6,px\n"
    "2022-01-03,199,light,100000,6000,1,6,23,31,24,12,3\n"
    "2022-01-04,200,wrung,80000,5000,0,5,22,30,26,14,3\n"
    "2022-01-05,201,could,90000,5500,2,9,30,29,20,9,1\n";

TEST_CASE("parse_raw reads the contest-format CSV") {
  std::istringstream in(kRawCsv);
  auto raw = parse_raw(in);
  REQUIRE(raw.size() == 3);
  CHECK(raw[0].contest == 199);
  CHECK(raw[0].word == "light");
  CHECK(raw[0].reported == 100000);
  CHECK(raw[0].hardmode == 6000);
  CHECK(raw[0].pct[2] == doctest::Approx(23));
  CHECK(raw[2].pct[6] == doctest::Approx(1));
}

TEST_CASE("parse_raw rejects malformed rows") {
  std::istringstream bad1("date,contest,word,reported,hardmode,p1,p2,p3,p4,p5,p6,px\n"
                          "2022-01-03,199,light,100000,6000,1,6,23,31,24,12\n");
  CHECK_THROWS(parse_raw(bad1));
  std::istringstream bad2("date,contest,word,reported,hardmode,p1,p2,p3,p4,p5,p6,px\n"
                          "2022-01-03,199,light,100000,6000,1,6,2x,31,24,12,3\n");
  CHECK_THROWS(parse_raw(bad2));
  std::istringstream empty("");
  CHECK_THROWS(parse_raw(empty));
}

TEST_CASE("apply_corrections matches old values and counts misses") {
  std::istringstream in(kRawCsv);
  auto raw = parse_raw(in);
  CorrectionTable table = {
      {200, "word", "wrung", "wring"},
      {199, "hardmode", "6000", "6100"},
      {201, "hardmode", "9999", "1"},   // old value does not match: no-op
      {777, "reported", "5", "6"},      // day absent: unmatched
  };
  CorrectionStats stats;
  auto fixed = apply_corrections(raw, table, &stats);
  CHECK(stats.applied == 2);
  CHECK(stats.unmatched == 1);
  CHECK(fixed[1].word == "wring");
  CHECK(fixed[0].hardmode == 6100);
  CHECK(fixed[2].hardmode == 5500);
  CHECK(default_corrections().size() == 7);
}

TEST_CASE("finalize_records and canonical round-trip") {
  std::istringstream in(kRawCsv);
  auto records = finalize_records(parse_raw(in));
  REQUIRE(records.size() == 3);
  CHECK(records[0].T == 0.0);
  CHECK(records[2].T == 1.0);
  CHECK(records[0].day_of_week == 1);  // 2022-01-03 is a Monday
  for (const auto& r : records) {
    long long sum = 0;
    for (long long c : r.try_counts) sum += c;
    CHECK(sum == r.n_reports);
    CHECK_NOTHROW(r.check_invariants());
  }

  std::ostringstream out;
  write_canonical(out, records);
  std::istringstream back(out.str());
  auto again = read_canonical(back);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].date == records[i].date);
    CHECK(again[i].contest == records[i].contest);
    CHECK(again[i].word == records[i].word);
    CHECK(again[i].n_reports == records[i].n_reports);
    CHECK(again[i].n_hardmode == records[i].n_hardmode);
    CHECK(again[i].try_counts == records[i].try_counts);
    CHECK(again[i].T == records[i].T);  // csv::fmt is lossless for doubles
    CHECK(again[i].day_of_week == records[i].day_of_week);
  }
  // idempotence: writing the re-read records reproduces the bytes
  std::ostringstream out2;
  write_canonical(out2, again);
  CHECK(out2.str() == out.str());
}

TEST_CASE("check_invariants rejects inconsistent records") {
  DailyRecord r;
  r.date = Date{2022, 1, 3};
  r.n_reports = 10;
  r.try_counts = {1, 2, 3, 4, 0, 0, 0};
  r.day_of_week = 1;
  CHECK_NOTHROW(r.check_invariants());
  r.n_hardmode = 11;
  CHECK_THROWS(r.check_invariants());
  r.n_hardmode = 0;
  r.try_counts[0] = 2;
  CHECK_THROWS(r.check_invariants());  // counts no longer sum to reports
  r.try_counts = {-1, 3, 3, 5, 0, 0, 0};
  CHECK_THROWS(r.check_invariants());
}
