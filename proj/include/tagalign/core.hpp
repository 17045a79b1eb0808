#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tagalign {

enum class Scheme { bio, bioes };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view text);

// Entity prefixes. "O" is not a prefix; it is the Outside tag.
enum class Prefix : char { begin = 'B', inside = 'I', end = 'E', single = 'S' };

bool scheme_allows(Scheme scheme, Prefix prefix);

// Splits on ASCII whitespace. This is the only tokenizer in the library;
// everything else works on pre-split tokens.
std::vector<std::string> split_whitespace(std::string_view text);

// Ordered list of non-empty, whitespace-free tokens.
class TokenSequence {
 public:
  TokenSequence() = default;
  explicit TokenSequence(std::vector<std::string> tokens);

  static TokenSequence from_text(std::string_view text);

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  std::string join(std::size_t first, std::size_t last) const;

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  std::vector<std::string> tokens_;
};

// Entity type names. Order matters: it is what class-order shuffling permutes
// and what the instruction prompt lists.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  bool contains(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }
  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<std::string> names_;
};

// Throws std::invalid_argument when `name` cannot be an entity type.
void validate_type_name(std::string_view name);

class Tag {
 public:
  // Outside.
  Tag() = default;
  Tag(Prefix prefix, std::string type);

  static Tag outside() { return Tag{}; }

  bool is_outside() const { return type_.empty(); }
  Prefix prefix() const { return prefix_; }
  const std::string& type() const { return type_; }

  friend bool operator==(const Tag&, const Tag&) = default;

 private:
  Prefix prefix_ = Prefix::begin;
  std::string type_;
};

// "O" -> Outside, "<p>-<type>" with a prefix of `scheme` and a type in
// `labels` -> that tag. Anything else is an unknown label, reported as
// nullopt; the caller decides what to do with it.
std::optional<Tag> parse_tag(std::string_view text, const LabelSet& labels,
                             Scheme scheme);

// Like parse_tag but accepts any well-formed type name.
std::optional<Tag> parse_tag_any_type(std::string_view text, Scheme scheme);

std::string render_tag(const Tag& tag);

struct Transition {
  bool legal = true;
  std::string reason;

  static Transition ok() { return {}; }
  static Transition illegal(std::string why) { return {false, std::move(why)}; }
};

// `prev` is Outside at sequence start.
Transition check_transition(const Tag& prev, const Tag& next, Scheme scheme);

// End-of-sequence check: BIOES may not end inside an open entity.
Transition check_final(const Tag& last, Scheme scheme);

// Tokens paired with one tag each. Positives are the indices tagged with an
// entity, negatives the indices tagged O.
class TaggedSequence {
 public:
  TaggedSequence() = default;
  TaggedSequence(TokenSequence tokens, std::vector<Tag> tags);

  std::size_t size() const { return tokens_.size(); }
  const TokenSequence& tokens() const { return tokens_; }
  const std::vector<Tag>& tags() const { return tags_; }

  std::vector<std::size_t> positives() const;
  std::vector<std::size_t> negatives() const;

  friend bool operator==(const TaggedSequence&, const TaggedSequence&) = default;

 private:
  TokenSequence tokens_;
  std::vector<Tag> tags_;
};

}  // namespace tagalign
