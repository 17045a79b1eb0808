#include <gtest/gtest.h>

#include "tagalign/genparse.hpp"

using namespace tagalign;

TEST(Genparse, TokenByTokenString) {
  auto p = parse_generation("John(B-Person) explored(O) Tokyo(B-Location)");
  ASSERT_EQ(p.items.size(), 3u);
  EXPECT_EQ(p.items[0], (PredictedItem{"John", "B-Person"}));
  EXPECT_EQ(p.items[1], (PredictedItem{"explored", "O"}));
  EXPECT_EQ(p.items[2], (PredictedItem{"Tokyo", "B-Location"}));
  EXPECT_EQ(p.malformed, 0u);
}

TEST(Genparse, EmptyGenerationIsNotAFailure) {
  auto p = parse_generation("");
  EXPECT_TRUE(p.items.empty());
  EXPECT_EQ(p.segments, 0u);
  EXPECT_FALSE(p.total_failure());
}

TEST(Genparse, LastBalancedGroupWins) {
  auto p = parse_generation("foo(bar)(O) baz");
  ASSERT_EQ(p.items.size(), 1u);
  EXPECT_EQ(p.items[0], (PredictedItem{"foo(bar)", "O"}));
  EXPECT_EQ(p.malformed, 1u);
}

TEST(Genparse, ParenthesisTokens) {
  auto p = parse_generation("((O) pet(O) )(O) x(a(b))");
  ASSERT_EQ(p.items.size(), 4u);
  EXPECT_EQ(p.items[0], (PredictedItem{"(", "O"}));
  EXPECT_EQ(p.items[2], (PredictedItem{")", "O"}));
  EXPECT_EQ(p.items[3], (PredictedItem{"x", "a(b)"}));
}

TEST(Genparse, GarbageNeverThrows) {
  for (std::string text : {"xxxx", "(O)", "a()", ")(", "a(O", "a(O))", "(((", "é(O)"}) {
    ParsedPrediction p;
    EXPECT_NO_THROW(p = parse_generation(text)) << text;
    EXPECT_EQ(p.items.size() + p.malformed, p.segments) << text;
  }
  auto p = parse_generation("xxxx yyyy");
  EXPECT_TRUE(p.total_failure());
  EXPECT_EQ(p.malformed, 2u);
}

TEST(Genparse, WhitespaceIsIrrelevant) {
  auto a = parse_generation("a(O) b(B-X)  c");
  auto b = parse_generation("\n a(O)\t\tb(B-X)\r\n c \n");
  EXPECT_EQ(a.items, b.items);
  EXPECT_EQ(a.malformed, b.malformed);
}
