#include "valrank/expression.hpp"

namespace valrank {

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    const auto b = current.find_first_not_of(" \t\n");
    const auto e = current.find_last_not_of(" \t\n");
    parts.push_back(b == std::string::npos ? std::string() : current.substr(b, e - b + 1));
    current.clear();
  };
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) fail(ErrorCode::ParseError, "unbalanced brackets in '" + text + "'");
    if (c == sep && depth == 0) {
      flush();
      continue;
    }
    current += c;
  }
  if (depth != 0) fail(ErrorCode::ParseError, "unbalanced brackets in '" + text + "'");
  flush();
  if (parts.size() == 1 && parts.front().empty()) parts.clear();
  return parts;
}

}  // namespace valrank
