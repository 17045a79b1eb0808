#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagalign/core.hpp"
#include "tagalign/genparse.hpp"
#include "tagalign/lcs.hpp"

namespace tagalign {

// Token normalization applied to both sides before matching. Every normalizer
// is deterministic and idempotent.
class Normalizer {
 public:
  enum class Kind { identity, unicode_fold, vocab_filter, chain };

  Normalizer() = default;  // identity

  static Normalizer identity() { return {}; }

  // NFKD, drop nonspacing marks, full case folding.
  static Normalizer unicode_fold();

  // Keeps only code points in `alphabet`. Stands in for a round trip through
  // a model tokenizer: characters outside the vocabulary disappear.
  static Normalizer vocab_filter(std::vector<char32_t> alphabet);

  // Every non-whitespace code point of a UTF-8 file joins the alphabet.
  static Normalizer vocab_filter_from_file(const std::filesystem::path& path);

  static Normalizer ascii_letters();

  // Applied left to right.
  static Normalizer chain(std::vector<Normalizer> parts);

  // "identity" | "unicode" | "vocab:<file>", joined with '+' for a chain.
  // Throws std::invalid_argument on anything else.
  static Normalizer parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::identity; }

  std::string operator()(std::string_view token) const;

 private:
  std::string apply_once(std::string_view token) const;

  Kind kind_ = Kind::identity;
  std::shared_ptr<const std::vector<char32_t>> alphabet_;  // sorted
  std::vector<Normalizer> parts_;
};

std::string normalize_token(std::string_view token, const Normalizer& norm);

enum class Tier { exact, subsequence, lcs };

std::string_view to_string(Tier tier);

struct AlignStats {
  Tier tier = Tier::exact;
  std::size_t lcs_length = 0;
  std::size_t unmatched_pred = 0;
  std::size_t unmatched_orig = 0;
};

struct AlignResult {
  Alignment alignment;
  AlignStats stats;
};

// Three-tier matching on already-normalized sequences:
//  1. equal sequences -> identity, O(N)
//  2. pred a subsequence of orig -> greedy earliest match, O(N)
//  3. otherwise Hunt-Szymanski
// The result equals lcs_dp_oracle(pred, orig) in every tier.
AlignResult align_tokens(std::span<const std::string> orig,
                         std::span<const std::string> pred, LcsWorkspace& ws);

AlignResult align_hierarchical(const TokenSequence& orig,
                               const ParsedPrediction& pred,
                               const Normalizer& norm, LcsWorkspace& ws);

AlignResult align_hierarchical(const TokenSequence& orig,
                               const ParsedPrediction& pred,
                               const Normalizer& norm = {});

struct Projection {
  TaggedSequence sequence;
  std::size_t unknown_labels = 0;
};

// Aligned orig tokens take the parsed predicted label; unknown labels and
// unmatched orig tokens become O.
Projection project_labels(const TokenSequence& orig,
                          const ParsedPrediction& pred,
                          const Alignment& alignment, const LabelSet& labels,
                          Scheme scheme);

}  // namespace tagalign
