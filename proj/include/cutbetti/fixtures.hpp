#pragma once

// Loaders for the published reference tables kept under fixtures/.

#include <cutbetti/common.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cutbetti {

/// Rows of a comma-separated file, skipping '#' comments, blank lines and the
/// header row.
inline std::vector<std::vector<std::string>> read_csv_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("fixture value is not a nonnegative integer: '" + s + "'");
  return BigInt(s);
}

struct ToricBettiRow {
  unsigned path_vertices = 0;
  BigInt beta0;
  std::optional<BigInt> beta1;  // absent where the computation did not finish
};

struct PublishedBettiRow {
  unsigned vertices = 0;
  std::vector<BigInt> values;  // b02, b13, b24, b14, b25, b35
};

struct Fixtures {
  std::vector<ToricBettiRow> table1;
  std::string table2_n4;
  std::string table2_n5;
  std::vector<PublishedBettiRow> table5;

  static Fixtures load(const std::filesystem::path& dir) {
    Fixtures f;
    for (const auto& r : read_csv_rows(dir / "table1.csv")) {
      if (r.size() != 3) throw InvalidInput("table1.csv: expected 3 columns");
      f.table1.push_back({static_cast<unsigned>(std::stoul(r[0])), parse_bigint(r[1]),
                          r[2] == "-" ? std::nullopt : std::optional<BigInt>(parse_bigint(r[2]))});
    }
    f.table2_n4 = read_text(dir / "table2_n4.txt");
    f.table2_n5 = read_text(dir / "table2_n5.txt");
    for (const auto& r : read_csv_rows(dir / "table5.csv")) {
      if (r.size() != 7) throw InvalidInput("table5.csv: expected 7 columns");
      PublishedBettiRow row{static_cast<unsigned>(std::stoul(r[0])), {}};
      for (std::size_t c = 1; c < r.size(); ++c) row.values.push_back(parse_bigint(r[c]));
      f.table5.push_back(std::move(row));
    }
    return f;
  }
};

}  // namespace cutbetti
