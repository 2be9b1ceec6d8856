#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gpac {

using DemoValue = std::variant<double, std::string>;

/// Outcome of one preconfigured demonstration. Entries keep insertion order so
/// serialization is deterministic.
struct DemoReport {
  std::string name;
  std::vector<std::pair<std::string, DemoValue>> values;
  std::vector<std::pair<std::string, bool>> assertions;
  std::vector<std::string> narrative;

  bool passed() const noexcept;
};

struct DemoOptions {
  /// Replaces the default digit strings of the cantor demo.
  std::optional<std::vector<std::string>> cantor_lines;
};

/// Names accepted by run_demo, in display order.
const std::vector<std::string_view>& demo_names();

/// Runs one of: dna, shannon, epr, cantor, turing, pac. Throws UnknownDemo
/// otherwise, InvalidConfig for unusable cantor lines.
DemoReport run_demo(std::string_view name, const DemoOptions& options = {});

/// Digit-wise diagonal of equal-length digit strings: position i becomes '0'
/// unless digit i of line i is already '0', in which case it becomes '1'.
/// Requires at least as many digits per line as there are lines.
std::string cantor_diagonal(const std::vector<std::string>& lines);

}  // namespace gpac
