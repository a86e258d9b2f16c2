#include "csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace gbu::cli {

std::string fmt(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

void CsvBuffer::comment(std::string_view line) { text_ << "# " << line << '\n'; }

void CsvBuffer::header(std::initializer_list<std::string_view> columns) { row(columns); }

void CsvBuffer::row(std::initializer_list<std::string_view> cells) {
  bool first = true;
  for (const auto c : cells) {
    if (!first) text_ << ',';
    text_ << c;
    first = false;
  }
  text_ << '\n';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gbu::cli
