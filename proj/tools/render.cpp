#include <sstream>

#include "cli.hpp"

namespace gpac::cli {

namespace {

void emit(const Json& node, const std::string& path, std::ostringstream& os, bool color) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, child] : node.items()) {
      emit(child, path.empty() ? key : path + "." + key, os, color);
    }
    return;
  }
  if (node.is_array() && !node.empty()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      emit(node[i], path + "[" + std::to_string(i) + "]", os, color);
    }
    return;
  }
  if (color) {
    os << "\x1b[1m" << path << "\x1b[0m: " << node.dump() << '\n';
  } else {
    os << path << ": " << node.dump() << '\n';
  }
}

}  // namespace

std::string render_text(const Json& payload, bool color) {
  std::ostringstream os;
  emit(payload, "", os, color);
  return os.str();
}

Json parse_text(const std::string& text) {
  Json leaves = Json::object();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto sep = line.find(": ");
    if (sep == std::string::npos) continue;
    leaves[line.substr(0, sep)] = Json::parse(line.substr(sep + 2));
  }
  return leaves;
}

}  // namespace gpac::cli
