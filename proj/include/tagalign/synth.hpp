#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tagalign/core.hpp"

namespace tagalign {

// Random tagged sentences for tests and benchmarks. Words are drawn from a
// Zipf-distributed synthetic vocabulary, so frequent words repeat within a
// sentence the way function words do in real text.
struct SynthConfig {
  std::size_t sentences = 100;
  std::size_t min_length = 1;
  std::size_t max_length = 40;  // inclusive
  std::size_t vocabulary = 2000;
  double zipf_exponent = 1.0;
  double entity_rate = 0.15;    // chance an entity starts at a free position
  std::size_t max_entity_length = 3;
  std::vector<std::string> types{"person", "location", "organization"};
  std::uint64_t seed = 0;
};

std::vector<TaggedSequence> synthetic_sentences(const SynthConfig& cfg);

}  // namespace tagalign
