#pragma once

#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

namespace gbu::cli {

/// Shortest decimal string that reads back to the same double.
std::string fmt(double v);

/// CSV text with `#` comment lines, accumulated in memory so a failed run
/// leaves no partial file behind.
class CsvBuffer {
 public:
  void comment(std::string_view line);
  void header(std::initializer_list<std::string_view> columns);
  void row(std::initializer_list<std::string_view> cells);
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
};

/// Writes through a sibling temporary and a rename.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gbu::cli
