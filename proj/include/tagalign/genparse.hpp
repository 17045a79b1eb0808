#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tagalign {

struct PredictedItem {
  std::string token;
  std::string label;

  friend bool operator==(const PredictedItem&, const PredictedItem&) = default;
};

// Pairs recovered from a raw "word(label) word(label) ..." generation.
struct ParsedPrediction {
  std::vector<PredictedItem> items;
  std::size_t segments = 0;   // whitespace-separated segments seen
  std::size_t malformed = 0;  // segments without a trailing (label) group

  std::vector<std::string> tokens() const;
  bool total_failure() const { return items.empty() && segments > 0; }
};

// Each whitespace-separated segment ending in a balanced "(...)" group yields
// one item: the label is the content of that last group, the word is
// everything before it. Other segments are counted as malformed and skipped.
// Never throws.
ParsedPrediction parse_generation(std::string_view text);

}  // namespace tagalign
