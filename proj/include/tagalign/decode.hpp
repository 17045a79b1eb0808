#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagalign/core.hpp"

namespace tagalign {

// Half-open token span [start, end) with its type and covered text.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string type;
  std::string text;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// How illegal tag transitions are treated when decoding.
//  conservative: orphan I (and E) open a new entity; unterminated BIOES runs
//                are kept as entities
//  strict:       orphan and unterminated runs are dropped
enum class RepairPolicy { conservative, strict };

std::string_view to_string(RepairPolicy policy);

// Entities in sentence order, non-overlapping.
std::vector<EntitySpan> decode_entities(
    const TaggedSequence& seq, Scheme scheme,
    RepairPolicy policy = RepairPolicy::conservative);

// Inverse of decode_entities for legal spans. Throws std::invalid_argument
// on overlapping or out-of-range spans.
std::vector<Tag> spans_to_tags(std::span<const EntitySpan> spans,
                               std::size_t length, Scheme scheme);

}  // namespace tagalign
