#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ipd::io {

// Input error carrying the 1-based line number, for CLI reporting.
struct CsvError : std::runtime_error {
  CsvError(std::size_t line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  std::size_t line;
};

// Shortest round-trip decimal form (std::to_chars); deterministic bytes for
// deterministic values.
std::string format_double(double v);

std::vector<std::string> split_csv_line(const std::string& line);

// Writes through a temporary file in the same directory and renames on
// commit, so downstream readers never observe partial output.
class AtomicFile {
 public:
  explicit AtomicFile(const std::filesystem::path& target);
  ~AtomicFile();

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  std::vector<char> buffer_;
  bool committed_ = false;
};

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& field(std::string_view s);
  CsvWriter& field(double v);
  CsvWriter& field(std::int64_t v);
  CsvWriter& field(int v) { return field(static_cast<std::int64_t>(v)); }
  CsvWriter& field(std::size_t v) { return field(static_cast<std::int64_t>(v)); }
  void end_row();

 private:
  std::ostream& out_;
  bool at_row_start_ = true;
};

}  // namespace ipd::io
