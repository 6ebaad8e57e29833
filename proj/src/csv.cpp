#include "wordle/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace wordle::csv {

namespace {
std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(strip(line.substr(start)));
      break;
    }
    out.push_back(strip(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

std::optional<std::size_t> Table::find_col(const std::string& name) const {
  std::string want = lower(name);
  for (std::size_t i = 0; i < header.size(); ++i)
    if (lower(header[i]) == want) return i;
  return std::nullopt;
}

std::size_t Table::col(const std::string& name) const {
  auto i = find_col(name);
  if (!i) throw std::runtime_error("csv: missing column '" + name + "'");
  return *i;
}

Table read(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  t.header = split_line(line);
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    t.rows.push_back(split_line(line));
  }
  return t;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace wordle::csv
