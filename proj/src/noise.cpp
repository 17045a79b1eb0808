#include "tagalign/noise.hpp"

#include <stdexcept>

#include "tagalign/decode.hpp"
#include "tagalign/rng.hpp"
#include "tagalign/utf8.hpp"

namespace tagalign {

NoiseConfig NoiseConfig::mixture(double rate, std::uint64_t seed,
                                 bool entity_safe) {
  NoiseConfig cfg;
  cfg.p_omit = rate * 0.39;
  cfg.p_add = rate * 0.03;
  cfg.p_sub = rate * 0.58;
  cfg.entity_safe = entity_safe;
  cfg.seed = seed;
  return cfg;
}

void NoiseConfig::validate() const {
  for (double p : {p_omit, p_add, p_sub}) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("noise probability outside [0, 1]");
  }
  if (p_omit + p_add + p_sub > 1.0 + 1e-12)
    throw std::invalid_argument("noise probabilities sum to more than 1");
}

std::string perturb_word(const std::string& word, std::uint64_t draw) {
  auto chars = utf8::split_code_points(word);
  if (chars.size() <= 1) return word + word;
  const std::size_t pos = static_cast<std::size_t>((draw >> 1) % chars.size());
  const std::size_t a = pos + 1 < chars.size() ? pos : pos - 1;
  // Swapping equal neighbours would be a no-op, so drop one instead.
  if ((draw & 1) || chars[a] == chars[a + 1]) {
    chars.erase(chars.begin() + static_cast<std::ptrdiff_t>(pos));
  } else {
    std::swap(chars[a], chars[a + 1]);
  }
  std::string out;
  for (const auto& c : chars) out += c;
  return out;
}

std::vector<TokenEdit> plan_edits(const TaggedSequence& seq,
                                  const NoiseConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::vector<TokenEdit> edits(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    // Two draws per token regardless of outcome keep the stream aligned.
    const double u = rng.uniform();
    const std::uint64_t detail = rng.next();
    const bool protected_token = cfg.entity_safe && !seq.tags()[i].is_outside();
    if (u < cfg.p_omit) {
      if (!protected_token) edits[i].kind = EditKind::omit;
    } else if (u < cfg.p_omit + cfg.p_sub) {
      if (!protected_token) {
        edits[i].kind = EditKind::substitute;
        edits[i].replacement = perturb_word(seq.tokens()[i], detail);
      }
    } else if (u < cfg.p_omit + cfg.p_sub + cfg.p_add) {
      edits[i].kind = EditKind::add;
    }
  }
  return edits;
}

std::string render_with_edits(const TaggedSequence& seq,
                              std::span<const TokenEdit> edits) {
  if (edits.size() != seq.size())
    throw std::invalid_argument("one edit per token required");
  const auto spans =
      decode_entities(seq, Scheme::bioes, RepairPolicy::conservative);
  const auto tags = spans_to_tags(spans, seq.size(), Scheme::bio);

  std::string out;
  auto unit = [&](const std::string& word, const Tag& tag) {
    if (!out.empty()) out += ' ';
    out += word;
    out += '(';
    out += render_tag(tag);
    out += ')';
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    switch (edits[i].kind) {
      case EditKind::keep:
        unit(seq.tokens()[i], tags[i]);
        break;
      case EditKind::omit:
        break;
      case EditKind::substitute:
        unit(edits[i].replacement, tags[i]);
        break;
      case EditKind::add:
        unit(seq.tokens()[i], tags[i]);
        unit(seq.tokens()[i], tags[i]);
        break;
    }
  }
  return out;
}

std::string corrupt(const TaggedSequence& seq, const NoiseConfig& cfg) {
  return render_with_edits(seq, plan_edits(seq, cfg));
}

}  // namespace tagalign
