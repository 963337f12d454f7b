#include "kinetic/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "kinetic/error.hpp"

namespace kinetic {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r");
  std::size_t e = text.find_last_not_of(" \t\r");
  if (b == std::string::npos) throw ValidationError("empty number");
  const std::string s = text.substr(b, e - b + 1);
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double x = 0.0;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ValidationError("not a number: '" + s + "'");
  return x;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
  if (!out_) throw ValidationError("cannot write " + path.string());
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw ValidationError("CSV row width does not match the header");
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

void CsvWriter::row(const std::string& label, const std::vector<double>& values) {
  if (values.size() + 1 != columns_) throw ValidationError("CSV row width does not match the header");
  out_ << label;
  for (double v : values) out_ << ',' << format_double(v);
  out_ << '\n';
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return int(i);
  return -1;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    std::size_t b = cell.find_first_not_of(' ');
    cells.push_back(b == std::string::npos ? std::string() : cell.substr(b));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path.string() + " is empty");
  table.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw ValidationError(path.string() + ": row " + std::to_string(table.rows.size() + 1) +
                            " does not match the header width");
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace kinetic
