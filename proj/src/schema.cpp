#include "tagalign/schema.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "tagalign/decode.hpp"
#include "tagalign/rng.hpp"

namespace tagalign {

namespace {

struct Window {
  std::size_t start;
  std::size_t end;
};

std::string join_labels(const LabelSet& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels.names()[i];
  }
  return out;
}

std::string build_entity_target(const TaggedSequence& seq,
                                const EntityCentric& variant,
                                const TargetOptions& options) {
  const auto& tokens = seq.tokens();
  for (const auto& token : tokens) {
    if (token.find_first_of("()") != std::string::npos)
      throw std::invalid_argument("token '" + token +
                                  "' contains a parenthesis");
  }
  const auto spans =
      decode_entities(seq, Scheme::bioes, RepairPolicy::conservative);

  std::vector<Window> windows;
  if (!variant.context) {
    if (!tokens.empty()) windows.push_back({0, tokens.size()});
  } else {
    const std::size_t k = *variant.context;
    for (const auto& span : spans) {
      Window w{span.start >= k ? span.start - k : 0,
               std::min(tokens.size(), span.end + k)};
      if (!windows.empty() && w.start <= windows.back().end) {
        windows.back().end = std::max(windows.back().end, w.end);
      } else {
        windows.push_back(w);
      }
    }
  }
  // With no context the target is a plain entity list.
  const bool mark_gaps = !variant.context || *variant.context > 0;

  std::string out;
  auto append = [&out](std::string_view piece) {
    if (!out.empty()) out += ' ';
    out += piece;
  };
  std::size_t next_span = 0;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    if (w > 0 && mark_gaps && windows[w].start > windows[w - 1].end)
      append(options.gap_marker);
    std::size_t i = windows[w].start;
    while (i < windows[w].end) {
      while (next_span < spans.size() && spans[next_span].end <= i) ++next_span;
      if (next_span < spans.size() && spans[next_span].start == i) {
        const auto& span = spans[next_span];
        append("[" + span.text + "](" + span.type + ")");
        i = span.end;
      } else {
        append(tokens[i]);
        ++i;
      }
    }
  }
  return out;
}

std::string build_token_target(const TaggedSequence& seq, Scheme scheme) {
  const auto spans =
      decode_entities(seq, Scheme::bioes, RepairPolicy::conservative);
  const auto tags = spans_to_tags(spans, seq.size(), scheme);
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += seq.tokens()[i];
    out += '(';
    out += render_tag(tags[i]);
    out += ')';
  }
  return out;
}

}  // namespace

TargetVariant parse_variant(std::string_view text) {
  if (text == "token" || text == "token:bio") return TokenByToken{Scheme::bio};
  if (text == "token:bioes") return TokenByToken{Scheme::bioes};
  if (text == "entity:full") return EntityCentric{std::nullopt};
  if (text.starts_with("entity:")) {
    std::string_view digits = text.substr(7);
    std::size_t k = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        !digits.empty())
      return EntityCentric{k};
  }
  throw std::invalid_argument("unknown target variant '" + std::string(text) +
                              "'");
}

std::string build_target(const TaggedSequence& seq, const TargetVariant& variant,
                         const TargetOptions& options) {
  if (const auto* entity = std::get_if<EntityCentric>(&variant))
    return build_entity_target(seq, *entity, options);
  return build_token_target(seq, std::get<TokenByToken>(variant).scheme);
}

std::string build_instruction(const LabelSet& labels, Scheme scheme) {
  if (labels.empty()) throw std::invalid_argument("label set is empty");
  std::string out =
      "Task Description:\n"
      "Please analyze the sentence provided, identifying the entity type for "
      "each word on a token-by-token basis.\n"
      "Output format is: word_1(label_1), word_2(label_2), ...\n"
      "Guideline:\n";
  if (scheme == Scheme::bio) {
    out +=
        "We'll use the BIO-format to label the entities, where:\n"
        "1. B- (Begin) indicates the start of a named entity.\n"
        "2. I- (Inside) is used for words within a named entity but are not "
        "the first word.\n"
        "3. O (Outside) denotes words not part of a named entity.\n";
  } else {
    out +=
        "We'll use the BIOES-format to label the entities, where:\n"
        "1. B- (Begin) indicates the start of a named entity.\n"
        "2. I- (Inside) is used for words within a named entity but are not "
        "the first or last word.\n"
        "3. E- (End) indicates the last word of a multi-word named entity.\n"
        "4. S- (Single) indicates a named entity consisting of a single word.\n"
        "5. O (Outside) denotes words not part of a named entity.\n";
  }
  out += "Use the specific entity tags: " + join_labels(labels) + " and O.";
  return out;
}

std::string build_entity_instruction(const LabelSet& labels) {
  if (labels.empty()) throw std::invalid_argument("label set is empty");
  return "Task Description:\n"
         "Please identify the named entities in the sentence provided.\n"
         "Output format is: [span_1](label_1) [span_2](label_2) ...\n"
         "Guideline:\n"
         "Use the specific entity tags: " +
         join_labels(labels) + ".";
}

std::size_t default_external_count(std::size_t present) {
  constexpr std::size_t kMaxTypes = 10;
  if (present >= kMaxTypes) return 0;
  return std::min(2 * present, kMaxTypes - present);
}

LabelSet sample_label_set(const LabelSet& present, const SamplerConfig& cfg) {
  std::vector<std::string> candidates;
  for (const auto& name : cfg.external_pool)
    if (!present.contains(name)) candidates.push_back(name);

  const std::size_t wanted =
      cfg.external_count.value_or(default_external_count(present.size()));
  const std::size_t k = std::min(wanted, candidates.size());

  Rng rng(cfg.shuffle_seed);
  std::vector<std::string> names = present.names();
  // Partial Fisher-Yates: the first k slots become the sample.
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
    names.push_back(candidates[i]);
  }
  rng.shuffle(names);
  return LabelSet(std::move(names));
}

PromptInstance build_instance(std::string id, const TaggedSequence& seq,
                              const LabelSet& labels,
                              const TargetVariant& variant,
                              const TargetOptions& options) {
  PromptInstance out;
  out.id = std::move(id);
  if (const auto* token = std::get_if<TokenByToken>(&variant)) {
    out.instruction = build_instruction(labels, token->scheme);
  } else {
    out.instruction = build_entity_instruction(labels);
  }
  out.input_line = seq.tokens().join(0, seq.size());
  out.target_line = build_target(seq, variant, options);
  out.labels_used = labels;
  return out;
}

std::string render_prompt(const PromptInstance& instance) {
  return instance.instruction + "\nInput: " + instance.input_line +
         "\nOutput:";
}

nlohmann::ordered_json to_json(const PromptInstance& instance) {
  nlohmann::ordered_json j;
  j["id"] = instance.id;
  j["instruction"] = instance.instruction;
  j["input"] = instance.input_line;
  j["output"] = instance.target_line;
  return j;
}

}  // namespace tagalign
