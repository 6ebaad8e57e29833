#pragma once

#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace wordle::csv {

// Minimal CSV support: comma-separated, no quoting (none of our formats
// need it), header row required.  Header lookup is case-insensitive.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by (case-insensitive) name; throws if absent.
  std::size_t col(const std::string& name) const;
  std::optional<std::size_t> find_col(const std::string& name) const;
};

std::vector<std::string> split_line(const std::string& line);
Table read(std::istream& in);

std::string join(const std::vector<std::string>& fields);

// Fixed-format double printing so emitted files are byte-stable.
std::string fmt(double v);

}  // namespace wordle::csv
