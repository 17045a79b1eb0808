#include "tagalign/decode.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace tagalign {

namespace {

struct OpenEntity {
  std::size_t start;
  std::string type;
  bool repaired;  // opened by an orphan I/E rather than B
};

class SpanBuilder {
 public:
  explicit SpanBuilder(const TokenSequence& tokens) : tokens_(tokens) {}

  void emit(std::size_t start, std::size_t end, const std::string& type) {
    spans_.push_back({start, end, type, tokens_.join(start, end)});
  }

  std::vector<EntitySpan> take() { return std::move(spans_); }

 private:
  const TokenSequence& tokens_;
  std::vector<EntitySpan> spans_;
};

std::vector<EntitySpan> decode_bio(const TaggedSequence& seq,
                                   RepairPolicy policy) {
  SpanBuilder out(seq.tokens());
  std::optional<OpenEntity> open;
  const auto& tags = seq.tags();

  auto close = [&](std::size_t end) {
    if (open && !(open->repaired && policy == RepairPolicy::strict))
      out.emit(open->start, end, open->type);
    open.reset();
  };

  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Tag& tag = tags[i];
    if (tag.is_outside()) {
      close(i);
      continue;
    }
    switch (tag.prefix()) {
      case Prefix::begin:
        close(i);
        open = OpenEntity{i, tag.type(), false};
        break;
      case Prefix::inside:
        if (open && open->type == tag.type()) break;
        close(i);
        open = OpenEntity{i, tag.type(), true};
        break;
      default:
        throw std::invalid_argument("tag " + render_tag(tag) +
                                    " is not a BIO tag");
    }
  }
  close(tags.size());
  return out.take();
}

std::vector<EntitySpan> decode_bioes(const TaggedSequence& seq,
                                     RepairPolicy policy) {
  SpanBuilder out(seq.tokens());
  std::optional<OpenEntity> open;
  const auto& tags = seq.tags();
  const bool salvage = policy == RepairPolicy::conservative;

  // An entity closed without E is unterminated.
  auto drop_or_salvage = [&](std::size_t end) {
    if (open && salvage) out.emit(open->start, end, open->type);
    open.reset();
  };

  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Tag& tag = tags[i];
    if (tag.is_outside()) {
      drop_or_salvage(i);
      continue;
    }
    const bool continues = open && open->type == tag.type();
    switch (tag.prefix()) {
      case Prefix::single:
        drop_or_salvage(i);
        out.emit(i, i + 1, tag.type());
        break;
      case Prefix::begin:
        drop_or_salvage(i);
        open = OpenEntity{i, tag.type(), false};
        break;
      case Prefix::inside:
        if (continues) break;
        drop_or_salvage(i);
        if (salvage) open = OpenEntity{i, tag.type(), true};
        break;
      case Prefix::end:
        if (continues) {
          if (!open->repaired || salvage) out.emit(open->start, i + 1, open->type);
          open.reset();
          break;
        }
        drop_or_salvage(i);
        if (salvage) out.emit(i, i + 1, tag.type());
        break;
    }
  }
  drop_or_salvage(tags.size());
  return out.take();
}

}  // namespace

std::string_view to_string(RepairPolicy policy) {
  return policy == RepairPolicy::conservative ? "conservative" : "strict";
}

std::vector<EntitySpan> decode_entities(const TaggedSequence& seq,
                                        Scheme scheme, RepairPolicy policy) {
  return scheme == Scheme::bio ? decode_bio(seq, policy)
                               : decode_bioes(seq, policy);
}

std::vector<Tag> spans_to_tags(std::span<const EntitySpan> spans,
                               std::size_t length, Scheme scheme) {
  std::vector<Tag> tags(length);
  std::vector<bool> used(length, false);
  for (const auto& span : spans) {
    if (span.start >= span.end || span.end > length)
      throw std::invalid_argument("span [" + std::to_string(span.start) + ", " +
                                  std::to_string(span.end) +
                                  ") is empty or out of range");
    for (std::size_t i = span.start; i < span.end; ++i) {
      if (used[i])
        throw std::invalid_argument("overlapping spans at token " +
                                    std::to_string(i));
      used[i] = true;
    }
    const std::size_t last = span.end - 1;
    for (std::size_t i = span.start; i < span.end; ++i) {
      Prefix prefix = i == span.start ? Prefix::begin : Prefix::inside;
      if (scheme == Scheme::bioes) {
        if (span.start == last) {
          prefix = Prefix::single;
        } else if (i == last) {
          prefix = Prefix::end;
        }
      }
      tags[i] = Tag(prefix, span.type);
    }
  }
  return tags;
}

}  // namespace tagalign
