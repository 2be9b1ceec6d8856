#include "gpac/text_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

#include "gpac/error.hpp"

namespace gpac::io {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::string_view source, std::size_t line, std::string_view field,
                       std::string_view reason) {
  throw Error(Errc::Parse, std::string(source) + ":" + std::to_string(line) + ": " +
                               std::string(field) + ": " + std::string(reason));
}

std::vector<Line> data_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    std::string_view v = raw;
    if (n == 1 && v.starts_with("\xEF\xBB\xBF")) v.remove_prefix(3);
    v = trim(v);
    if (v.empty() || v.front() == '#') continue;
    out.push_back({n, std::string(v)});
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    parts.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::optional<double> to_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

double number_at(std::string_view source, std::size_t line, std::string_view field,
                 std::string_view text) {
  const auto v = to_number(text);
  if (!v) fail(source, line, field, "'" + std::string(text) + "' is not a finite decimal number");
  return *v;
}

std::vector<double> numbers(std::string_view source, std::size_t line,
                            std::span<const std::string_view> cells, std::size_t first_col) {
  std::vector<double> out;
  for (std::size_t c = first_col; c < cells.size(); ++c) {
    out.push_back(number_at(source, line, "column " + std::to_string(c + 1), cells[c]));
  }
  return out;
}

template <class F>
auto read_file(const std::filesystem::path& path, F&& reader) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, path.string() + ": cannot open file");
  return reader(in, path.string());
}

}  // namespace

Spectrum read_spectrum(std::istream& in, std::string_view source) {
  const auto lines = data_lines(in);
  if (lines.empty()) fail(source, 1, "header", "missing `s,mass` header");
  if (lines.front().text != "s,mass") {
    fail(source, lines.front().number, "header", "expected exactly `s,mass`");
  }
  std::vector<double> scale;
  std::vector<double> mass;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [n, text] = lines[i];
    const auto cells = split(text);
    if (cells.size() != 2) fail(source, n, "row", "expected two columns `s,mass`");
    const double s = number_at(source, n, "s", cells[0]);
    if (!scale.empty() && !(scale.back() < s)) fail(source, n, "s", "scale must be strictly increasing");
    scale.push_back(s);
    mass.push_back(number_at(source, n, "mass", cells[1]));
  }
  if (scale.empty()) fail(source, lines.front().number, "row", "spectrum has no data rows");
  return Spectrum(CardinalScale(std::move(scale)), std::move(mass));
}

Eigen::MatrixXd read_matrix(std::istream& in, std::string_view source) {
  const auto lines = data_lines(in);
  if (lines.empty()) fail(source, 1, "matrix", "no rows");
  std::vector<std::vector<double>> rows;
  for (const auto& [n, text] : lines) {
    const auto cells = split(text);
    auto row = numbers(source, n, cells, 0);
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(source, n, "row", "has " + std::to_string(row.size()) + " columns, expected " +
                                 std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

PacInstanceFile read_pac_instance(std::istream& in, std::string_view source) {
  const auto lines = data_lines(in);
  if (lines.empty()) fail(source, 1, "weights", "missing weights line");
  PacInstanceFile file;
  bool have_domain = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [n, text] = lines[i];
    const auto cells = split(text);
    const auto label = cells.front();
    if (i == 0) {
      if (label != "weights") fail(source, n, "weights", "first data line must start with `weights`");
      file.weights = numbers(source, n, cells, 1);
      if (file.weights.empty()) fail(source, n, "weights", "no weights given");
      continue;
    }
    auto values = numbers(source, n, cells, 1);
    if (values.size() != file.weights.size()) {
      fail(source, n, std::string(label), "has " + std::to_string(values.size()) +
                                              " values, expected " +
                                              std::to_string(file.weights.size()));
    }
    if (label == "domain") {
      if (have_domain) fail(source, n, "domain", "domain given twice");
      file.domain = std::move(values);
      have_domain = true;
    } else {
      if (label.empty()) fail(source, n, "name", "hypothesis name is empty");
      file.hypotheses.push_back({std::string(label), std::move(values)});
    }
  }
  if (!have_domain) {
    for (std::size_t i = 0; i < file.weights.size(); ++i) file.domain.push_back(static_cast<double>(i));
  }
  return file;
}

std::vector<double> parse_number_list(std::string_view text, std::string_view field) {
  std::vector<double> out;
  const auto cells = split(text);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto v = to_number(cells[i]);
    if (!v) {
      throw Error(Errc::Parse, std::string(field) + ": entry " + std::to_string(i + 1) + " '" +
                                   std::string(cells[i]) + "' is not a finite decimal number");
    }
    out.push_back(*v);
  }
  return out;
}

Spectrum read_spectrum_file(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in, const std::string& s) { return read_spectrum(in, s); });
}

Eigen::MatrixXd read_matrix_file(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in, const std::string& s) { return read_matrix(in, s); });
}

PacInstanceFile read_pac_instance_file(const std::filesystem::path& path) {
  return read_file(path,
                   [](std::istream& in, const std::string& s) { return read_pac_instance(in, s); });
}

}  // namespace gpac::io
