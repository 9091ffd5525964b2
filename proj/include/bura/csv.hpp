#pragma once

#include <bura/format.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace bura {

/// Deterministic CSV emission: header row, comma separator, UNIX newlines,
/// full-precision decimal for floating-point cells.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    out_.open(path);
    if (!out_) throw Error("cannot open " + path.string() + " for writing");
    for (std::size_t i = 0; i < header.size(); ++i)
      out_ << (i ? "," : "") << header[i];
    out_ << "\n";
  }

  CsvWriter& field(const std::string& s) {
    out_ << (first_ ? "" : ",") << s;
    first_ = false;
    return *this;
  }
  CsvWriter& field(double v) { return field(to_full_string(v)); }
  CsvWriter& field(const MpFloat& v) { return field(to_full_string(v)); }
  CsvWriter& field(long v) { return field(std::to_string(v)); }
  CsvWriter& field(int v) { return field(std::to_string(v)); }

  void end_row() {
    out_ << "\n";
    first_ = true;
  }

 private:
  std::ofstream out_;
  bool first_ = true;
};

}  // namespace bura
