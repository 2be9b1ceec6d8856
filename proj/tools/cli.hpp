#pragma once

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

namespace gpac::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2 };

struct DispatchOptions {
  bool color = false;  ///< ANSI-highlight keys in text mode
};

/// Runs one command line (without the program name). The payload goes to
/// `out` as a single JSON object (or its text rendering); diagnostics go to
/// `err` as one line.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err,
             const DispatchOptions& options = {});

/// One `path: value` line per leaf; values use the same encoding as JSON.
std::string render_text(const Json& payload, bool color);

/// Inverse of render_text for the flat leaf map, used to cross-check formats.
Json parse_text(const std::string& text);

}  // namespace gpac::cli
