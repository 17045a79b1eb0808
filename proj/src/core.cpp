#include "tagalign/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace tagalign {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), is_space);
}

std::optional<Prefix> prefix_from_char(char c) {
  switch (c) {
    case 'B': return Prefix::begin;
    case 'I': return Prefix::inside;
    case 'E': return Prefix::end;
    case 'S': return Prefix::single;
    default: return std::nullopt;
  }
}

// An entity is open after B or I: only I or E of the same type may follow.
bool opens(const Tag& tag) {
  return !tag.is_outside() &&
         (tag.prefix() == Prefix::begin || tag.prefix() == Prefix::inside);
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::bio ? "bio" : "bioes";
}

std::optional<Scheme> parse_scheme(std::string_view text) {
  if (text == "bio" || text == "BIO") return Scheme::bio;
  if (text == "bioes" || text == "BIOES") return Scheme::bioes;
  return std::nullopt;
}

bool scheme_allows(Scheme scheme, Prefix prefix) {
  if (scheme == Scheme::bioes) return true;
  return prefix == Prefix::begin || prefix == Prefix::inside;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

TokenSequence::TokenSequence(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty())
      throw std::invalid_argument("token " + std::to_string(i) + " is empty");
    if (has_space(tokens_[i]))
      throw std::invalid_argument("token " + std::to_string(i) +
                                  " contains whitespace");
  }
}

TokenSequence TokenSequence::from_text(std::string_view text) {
  return TokenSequence(split_whitespace(text));
}

std::string TokenSequence::join(std::size_t first, std::size_t last) const {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) out += ' ';
    out += tokens_[i];
  }
  return out;
}

void validate_type_name(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty entity type");
  if (name == "O")
    throw std::invalid_argument("\"O\" is reserved for the outside tag");
  if (name.find_first_of("()") != std::string_view::npos)
    throw std::invalid_argument("entity type '" + std::string(name) +
                                "' contains a parenthesis");
  if (has_space(name))
    throw std::invalid_argument("entity type '" + std::string(name) +
                                "' contains whitespace");
}

LabelSet::LabelSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    validate_type_name(names_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == names_[i])
        throw std::invalid_argument("duplicate entity type '" + names_[i] +
                                    "'");
    }
  }
}

bool LabelSet::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Tag::Tag(Prefix prefix, std::string type)
    : prefix_(prefix), type_(std::move(type)) {
  validate_type_name(type_);
}

std::optional<Tag> parse_tag_any_type(std::string_view text, Scheme scheme) {
  if (text == "O") return Tag::outside();
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  auto prefix = prefix_from_char(text[0]);
  if (!prefix || !scheme_allows(scheme, *prefix)) return std::nullopt;
  std::string_view type = text.substr(2);
  if (type == "O" || type.find_first_of("() \t\n\r\v\f") != std::string_view::npos)
    return std::nullopt;
  return Tag(*prefix, std::string(type));
}

std::optional<Tag> parse_tag(std::string_view text, const LabelSet& labels,
                             Scheme scheme) {
  auto tag = parse_tag_any_type(text, scheme);
  if (tag && !tag->is_outside() && !labels.contains(tag->type()))
    return std::nullopt;
  return tag;
}

std::string render_tag(const Tag& tag) {
  if (tag.is_outside()) return "O";
  std::string out;
  out.reserve(tag.type().size() + 2);
  out += static_cast<char>(tag.prefix());
  out += '-';
  out += tag.type();
  return out;
}

Transition check_transition(const Tag& prev, const Tag& next, Scheme scheme) {
  if (!next.is_outside() && !scheme_allows(scheme, next.prefix()))
    return Transition::illegal("prefix not in scheme");
  if (!prev.is_outside() && !scheme_allows(scheme, prev.prefix()))
    return Transition::illegal("prefix not in scheme");

  const bool continues =
      !next.is_outside() &&
      (next.prefix() == Prefix::inside || next.prefix() == Prefix::end);

  if (scheme == Scheme::bio) {
    if (next.is_outside() || next.prefix() == Prefix::begin)
      return Transition::ok();
    if (opens(prev) && prev.type() == next.type()) return Transition::ok();
    if (opens(prev)) return Transition::illegal("I after a different type");
    return Transition::illegal("I without opener");
  }

  if (continues) {
    if (!opens(prev)) return Transition::illegal("I/E without opener");
    if (prev.type() != next.type())
      return Transition::illegal("I/E after a different type");
    return Transition::ok();
  }
  if (opens(prev)) return Transition::illegal("unterminated entity");
  return Transition::ok();
}

Transition check_final(const Tag& last, Scheme scheme) {
  if (scheme == Scheme::bioes && opens(last))
    return Transition::illegal("sequence ends inside an entity");
  return Transition::ok();
}

TaggedSequence::TaggedSequence(TokenSequence tokens, std::vector<Tag> tags)
    : tokens_(std::move(tokens)), tags_(std::move(tags)) {
  if (tokens_.size() != tags_.size())
    throw std::invalid_argument(
        "tag count " + std::to_string(tags_.size()) +
        " does not match token count " + std::to_string(tokens_.size()));
}

std::vector<std::size_t> TaggedSequence::positives() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tags_.size(); ++i)
    if (!tags_[i].is_outside()) out.push_back(i);
  return out;
}

std::vector<std::size_t> TaggedSequence::negatives() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tags_.size(); ++i)
    if (tags_[i].is_outside()) out.push_back(i);
  return out;
}

}  // namespace tagalign
