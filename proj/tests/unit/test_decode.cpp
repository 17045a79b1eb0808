#include <gtest/gtest.h>

#include <random>

#include "tagalign/decode.hpp"

using namespace tagalign;

namespace {

TaggedSequence tagged(const std::string& text, const std::vector<std::string>& raw,
                      Scheme scheme = Scheme::bio) {
  std::vector<Tag> tags;
  for (const auto& r : raw) tags.push_back(*parse_tag_any_type(r, scheme));
  return TaggedSequence(TokenSequence::from_text(text), tags);
}

}  // namespace

TEST(Decode, FogExample) {
  auto seq = tagged("What was the fog rated ?", {"O", "O", "B-title", "I-title", "O", "O"});
  auto spans = decode_entities(seq, Scheme::bio);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0], (EntitySpan{2, 4, "title", "the fog"}));
  EXPECT_TRUE(decode_entities(tagged("a b", {"O", "O"}), Scheme::bio).empty());
}

TEST(Decode, OrphanInsideDependsOnPolicy) {
  auto seq = tagged("x y", {"I-Person", "I-Person"});
  EXPECT_EQ(decode_entities(seq, Scheme::bio, RepairPolicy::conservative),
            (std::vector<EntitySpan>{{0, 2, "Person", "x y"}}));
  EXPECT_TRUE(decode_entities(seq, Scheme::bio, RepairPolicy::strict).empty());
  // Type change inside a run starts a new entity.
  auto mixed = tagged("a b c", {"B-A", "I-B", "I-B"});
  EXPECT_EQ(decode_entities(mixed, Scheme::bio).size(), 2u);
  EXPECT_EQ(decode_entities(mixed, Scheme::bio, RepairPolicy::strict).size(), 1u);
}

TEST(Decode, BioesRules) {
  auto seq = tagged("New York is big", {"B-Loc", "E-Loc", "O", "S-Adj"}, Scheme::bioes);
  EXPECT_EQ(decode_entities(seq, Scheme::bioes),
            (std::vector<EntitySpan>{{0, 2, "Loc", "New York"}, {3, 4, "Adj", "big"}}));
  auto open = tagged("a b c", {"B-X", "I-X", "O"}, Scheme::bioes);
  EXPECT_EQ(decode_entities(open, Scheme::bioes).size(), 1u);
  EXPECT_TRUE(decode_entities(open, Scheme::bioes, RepairPolicy::strict).empty());
  EXPECT_THROW(decode_entities(seq, Scheme::bio), std::invalid_argument);
}

TEST(Decode, SpansToTags) {
  std::vector<EntitySpan> spans{{2, 4, "title", ""}};
  auto tags = spans_to_tags(spans, 6, Scheme::bio);
  std::vector<std::string> rendered;
  for (const auto& t : tags) rendered.push_back(render_tag(t));
  EXPECT_EQ(rendered, (std::vector<std::string>{"O", "O", "B-title", "I-title", "O", "O"}));
  EXPECT_EQ(render_tag(spans_to_tags(std::vector<EntitySpan>{{0, 1, "Person", ""}}, 2,
                                     Scheme::bioes)[0]),
            "S-Person");
  EXPECT_EQ(spans_to_tags({}, 3, Scheme::bio), std::vector<Tag>(3));
  std::vector<EntitySpan> overlap{{0, 2, "A", ""}, {1, 3, "A", ""}};
  EXPECT_THROW(spans_to_tags(overlap, 3, Scheme::bio), std::invalid_argument);
  std::vector<EntitySpan> outside{{2, 4, "A", ""}};
  EXPECT_THROW(spans_to_tags(outside, 3, Scheme::bio), std::invalid_argument);
}

TEST(Decode, RandomRoundTripAndPolicyOrdering) {
  std::mt19937 gen(9);
  const std::vector<std::string> types{"A", "B"};
  for (int t = 0; t < 5000; ++t) {
    const std::size_t n = 1 + gen() % 20;
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
    TokenSequence tokens(words);
    std::vector<EntitySpan> spans;
    for (std::size_t i = 0; i < n;) {
      if (gen() % 3 == 0) {
        std::size_t end = std::min(n, i + 1 + gen() % 3);
        spans.push_back({i, end, types[gen() % 2], tokens.join(i, end)});
        i = end;
      } else {
        ++i;
      }
    }
    for (Scheme scheme : {Scheme::bio, Scheme::bioes}) {
      TaggedSequence seq(tokens, spans_to_tags(spans, n, scheme));
      EXPECT_EQ(decode_entities(seq, scheme, RepairPolicy::strict), spans);
      EXPECT_EQ(decode_entities(seq, scheme, RepairPolicy::conservative), spans);
    }
    // Random, mostly illegal, tag soup.
    std::vector<Tag> soup;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned k = gen() % 5;
      if (k == 0) soup.emplace_back();
      else soup.emplace_back(std::array{Prefix::begin, Prefix::inside, Prefix::end,
                                        Prefix::single}[k - 1],
                             types[gen() % 2]);
    }
    TaggedSequence messy(tokens, soup);
    auto cons = decode_entities(messy, Scheme::bioes, RepairPolicy::conservative);
    auto strict = decode_entities(messy, Scheme::bioes, RepairPolicy::strict);
    EXPECT_GE(cons.size(), strict.size());
    for (std::size_t i = 0; i < cons.size(); ++i) {
      EXPECT_LT(cons[i].start, cons[i].end);
      if (i > 0) EXPECT_LE(cons[i - 1].end, cons[i].start);
    }
  }
}
