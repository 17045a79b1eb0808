#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tagalign/core.hpp"

namespace tagalign {

// Per-token corruption probabilities. At most one edit applies to a token.
struct NoiseConfig {
  double p_omit = 0;
  double p_add = 0;
  double p_sub = 0;
  bool entity_safe = false;  // omission and substitution only touch O tokens
  std::uint64_t seed = 0;

  // Splits `rate` in the omission:addition:substitution proportion 39:3:58.
  static NoiseConfig mixture(double rate, std::uint64_t seed,
                             bool entity_safe = false);

  // Throws std::invalid_argument when a probability is outside [0, 1] or the
  // three sum to more than 1.
  void validate() const;
};

enum class EditKind { keep, omit, substitute, add };

struct TokenEdit {
  EditKind kind = EditKind::keep;
  std::string replacement;  // substituted word
};

// The edit drawn for every token of `seq`, in order.
std::vector<TokenEdit> plan_edits(const TaggedSequence& seq,
                                  const NoiseConfig& cfg);

// Renders the BIO token-by-token target of `seq` with `edits` applied:
// omitted units vanish, substituted units keep their tag, added units are
// followed by a copy of themselves.
std::string render_with_edits(const TaggedSequence& seq,
                              std::span<const TokenEdit> edits);

std::string corrupt(const TaggedSequence& seq, const NoiseConfig& cfg);

// Character-level perturbation: drop or swap adjacent code points; one-code-
// point words are doubled.
std::string perturb_word(const std::string& word, std::uint64_t draw);

}  // namespace tagalign
