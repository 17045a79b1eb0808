#include "tagalign/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tagalign/rng.hpp"

namespace tagalign {

namespace {

std::string make_word(std::size_t rank) {
  static constexpr const char* kSyllables[] = {
      "ka", "lo", "mi", "ne", "ru", "sa", "ti", "vo", "ze", "ba",
      "do", "fi", "gu", "ha", "je", "po", "qui", "ra", "su", "wy"};
  constexpr std::size_t kCount = std::size(kSyllables);
  std::string word;
  std::size_t x = rank;
  do {
    word += kSyllables[x % kCount];
    x /= kCount;
  } while (x > 0);
  return word;
}

}  // namespace

std::vector<TaggedSequence> synthetic_sentences(const SynthConfig& cfg) {
  if (cfg.min_length == 0 || cfg.max_length < cfg.min_length)
    throw std::invalid_argument("bad sentence length range");
  if (cfg.vocabulary == 0 || cfg.types.empty())
    throw std::invalid_argument("empty vocabulary or type list");

  std::vector<std::string> words(cfg.vocabulary);
  std::vector<double> cumulative(cfg.vocabulary);
  double total = 0;
  for (std::size_t r = 0; r < cfg.vocabulary; ++r) {
    words[r] = make_word(r);
    total += 1.0 / std::pow(static_cast<double>(r + 1), cfg.zipf_exponent);
    cumulative[r] = total;
  }

  Rng rng(cfg.seed);
  auto draw_word = [&]() -> const std::string& {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return words[static_cast<std::size_t>(it - cumulative.begin())];
  };

  std::vector<TaggedSequence> out;
  out.reserve(cfg.sentences);
  for (std::size_t s = 0; s < cfg.sentences; ++s) {
    const std::size_t n =
        cfg.min_length + rng.below(cfg.max_length - cfg.min_length + 1);
    std::vector<std::string> tokens;
    std::vector<Tag> tags;
    tokens.reserve(n);
    tags.reserve(n);
    while (tokens.size() < n) {
      if (rng.uniform() < cfg.entity_rate) {
        const std::string& type = cfg.types[rng.below(cfg.types.size())];
        std::size_t len = 1 + rng.below(cfg.max_entity_length);
        len = std::min(len, n - tokens.size());
        for (std::size_t k = 0; k < len; ++k) {
          tokens.push_back(draw_word());
          tags.emplace_back(k == 0 ? Prefix::begin : Prefix::inside, type);
        }
      } else {
        tokens.push_back(draw_word());
        tags.push_back(Tag::outside());
      }
    }
    out.emplace_back(TokenSequence(std::move(tokens)), std::move(tags));
  }
  return out;
}

}  // namespace tagalign
