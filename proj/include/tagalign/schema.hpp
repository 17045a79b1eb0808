#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "tagalign/core.hpp"

namespace tagalign {

// "[span](Type)" targets with `context` untagged neighbours on each side of
// every entity; nullopt means the whole sentence.
struct EntityCentric {
  std::optional<std::size_t> context = 0;
};

// "token(TAG)" for every token.
struct TokenByToken {
  Scheme scheme = Scheme::bio;
};

using TargetVariant = std::variant<EntityCentric, TokenByToken>;

// "token" / "token:bioes" / "entity:<k>" / "entity:full".
TargetVariant parse_variant(std::string_view text);

struct TargetOptions {
  std::string gap_marker = "...";
};

// The input's tags may be BIO or BIOES; entities are read leniently and
// re-rendered in the variant's own format.
std::string build_target(const TaggedSequence& seq, const TargetVariant& variant,
                         const TargetOptions& options = {});

// Task description and guideline with the label list in the given order.
std::string build_instruction(const LabelSet& labels, Scheme scheme);

// Instruction for entity-centric targets.
std::string build_entity_instruction(const LabelSet& labels);

struct SamplerConfig {
  std::uint64_t shuffle_seed = 0;
  LabelSet external_pool;
  std::optional<std::size_t> external_count;  // default_external_count()
};

// Twice the present types, capped at ten types in total.
std::size_t default_external_count(std::size_t present);

// present plus up to external_count types from pool \ present, shuffled.
// Deterministic in shuffle_seed.
LabelSet sample_label_set(const LabelSet& present, const SamplerConfig& cfg);

struct PromptInstance {
  std::string id;
  std::string instruction;
  std::string input_line;
  std::string target_line;
  LabelSet labels_used;
};

PromptInstance build_instance(std::string id, const TaggedSequence& seq,
                              const LabelSet& labels,
                              const TargetVariant& variant,
                              const TargetOptions& options = {});

// Four-part prompt text: instruction, "Input: ...", "Output:".
std::string render_prompt(const PromptInstance& instance);

nlohmann::ordered_json to_json(const PromptInstance& instance);

}  // namespace tagalign
