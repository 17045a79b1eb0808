#include "tagalign/genparse.hpp"

#include <optional>

namespace tagalign {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Position of the '(' that balances the final ')' of `segment`.
std::optional<std::size_t> last_group_open(std::string_view segment) {
  if (segment.empty() || segment.back() != ')') return std::nullopt;
  int depth = 0;
  for (std::size_t i = segment.size(); i-- > 0;) {
    if (segment[i] == ')') {
      ++depth;
    } else if (segment[i] == '(') {
      if (--depth == 0) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> ParsedPrediction::tokens() const {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.token);
  return out;
}

ParsedPrediction parse_generation(std::string_view text) {
  ParsedPrediction out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i == start) break;

    std::string_view segment = text.substr(start, i - start);
    ++out.segments;
    auto open = last_group_open(segment);
    // word before the group and label inside it must both be non-empty
    if (!open || *open == 0 || *open + 2 >= segment.size()) {
      ++out.malformed;
      continue;
    }
    out.items.push_back(
        {std::string(segment.substr(0, *open)),
         std::string(segment.substr(*open + 1, segment.size() - *open - 2))});
  }
  return out;
}

}  // namespace tagalign
