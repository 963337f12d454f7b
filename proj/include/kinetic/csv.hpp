#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace kinetic {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// Parses a full-precision number; throws ValidationError on junk.
double parse_double(const std::string& text);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  void row(const std::vector<double>& values);
  /// Leading text cell followed by numbers.
  void row(const std::string& label, const std::vector<double>& values);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name, or -1.
  int column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace kinetic
