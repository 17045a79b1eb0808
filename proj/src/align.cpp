#include "tagalign/align.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "tagalign/utf8.hpp"

namespace tagalign {

namespace {

std::string fold_ascii(std::string_view token) {
  std::string out(token);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string fold_unicode(std::string_view token) {
  if (utf8::is_ascii(token)) return fold_ascii(token);

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkd = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFKD unavailable");

  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(token.data(), static_cast<int32_t>(token.size())));
  // Case folding can reintroduce combining marks (U+0130 folds to i + U+0307),
  // so repeat until nothing changes.
  for (int round = 0; round < 4; ++round) {
    icu::UnicodeString before = text;
    text.foldCase();
    icu::UnicodeString decomposed = nfkd->normalize(text, status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
    icu::UnicodeString stripped;
    for (int32_t i = 0; i < decomposed.length();) {
      UChar32 c = decomposed.char32At(i);
      if (u_charType(c) != U_NON_SPACING_MARK) stripped.append(c);
      i += U16_LENGTH(c);
    }
    text = std::move(stripped);
    if (text == before) break;
  }
  std::string out;
  text.toUTF8String(out);
  return out;
}

}  // namespace

Normalizer Normalizer::unicode_fold() {
  Normalizer n;
  n.kind_ = Kind::unicode_fold;
  return n;
}

Normalizer Normalizer::vocab_filter(std::vector<char32_t> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  Normalizer n;
  n.kind_ = Kind::vocab_filter;
  n.alphabet_ =
      std::make_shared<const std::vector<char32_t>>(std::move(alphabet));
  return n;
}

Normalizer Normalizer::vocab_filter_from_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read alphabet file " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  std::vector<char32_t> alphabet;
  for (char32_t cp : utf8::decode(content)) {
    if (cp == static_cast<char32_t>(-1)) continue;
    if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
        cp == U'\v' || cp == U'\f')
      continue;
    alphabet.push_back(cp);
  }
  return vocab_filter(std::move(alphabet));
}

Normalizer Normalizer::ascii_letters() {
  std::vector<char32_t> alphabet;
  for (char32_t c = U'a'; c <= U'z'; ++c) alphabet.push_back(c);
  for (char32_t c = U'A'; c <= U'Z'; ++c) alphabet.push_back(c);
  return vocab_filter(std::move(alphabet));
}

Normalizer Normalizer::chain(std::vector<Normalizer> parts) {
  if (parts.size() == 1) return parts.front();
  Normalizer n;
  n.kind_ = Kind::chain;
  n.parts_ = std::move(parts);
  return n;
}

Normalizer Normalizer::parse(std::string_view text) {
  std::vector<Normalizer> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    std::string_view item = text.substr(start, plus - start);
    if (item == "identity") {
      parts.push_back(identity());
    } else if (item == "unicode") {
      parts.push_back(unicode_fold());
    } else if (item.starts_with("vocab:") && item.size() > 6) {
      parts.push_back(vocab_filter_from_file(std::string(item.substr(6))));
    } else {
      throw std::invalid_argument("unknown normalizer '" + std::string(item) +
                                  "'");
    }
    start = plus + 1;
  }
  return chain(std::move(parts));
}

std::string Normalizer::apply_once(std::string_view token) const {
  switch (kind_) {
    case Kind::identity:
      return std::string(token);
    case Kind::unicode_fold:
      return fold_unicode(token);
    case Kind::vocab_filter: {
      std::string out;
      out.reserve(token.size());
      for (char32_t cp : utf8::decode(token)) {
        if (cp == static_cast<char32_t>(-1)) continue;
        if (std::binary_search(alphabet_->begin(), alphabet_->end(), cp))
          utf8::append(out, cp);
      }
      return out;
    }
    case Kind::chain: {
      std::string out(token);
      for (const auto& part : parts_) out = part(out);
      return out;
    }
  }
  return std::string(token);
}

std::string Normalizer::operator()(std::string_view token) const {
  std::string out = apply_once(token);
  if (kind_ != Kind::chain) return out;
  // A chain of idempotent steps need not be idempotent as a whole (folding
  // can produce characters an earlier filter would drop); iterate to a fixed
  // point.
  for (int round = 0; round < 8; ++round) {
    std::string again = apply_once(out);
    if (again == out) break;
    out = std::move(again);
  }
  return out;
}

std::string normalize_token(std::string_view token, const Normalizer& norm) {
  return norm(token);
}

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::exact: return "exact";
    case Tier::subsequence: return "subsequence";
    case Tier::lcs: return "lcs";
  }
  return "lcs";
}

AlignResult align_tokens(std::span<const std::string> orig,
                         std::span<const std::string> pred, LcsWorkspace& ws) {
  AlignResult result;
  auto& pairs = result.alignment.pairs;
  const std::size_t n = orig.size();
  const std::size_t m = pred.size();

  auto finish = [&](Tier tier) {
    result.stats.tier = tier;
    result.stats.lcs_length = pairs.size();
    result.stats.unmatched_pred = m - pairs.size();
    result.stats.unmatched_orig = n - pairs.size();
    return result;
  };

  const bool all_matchable =
      std::none_of(pred.begin(), pred.end(),
                   [](const std::string& t) { return t.empty(); });

  if (all_matchable && n == m && std::equal(orig.begin(), orig.end(), pred.begin())) {
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, i});
    return finish(Tier::exact);
  }

  if (all_matchable && m < n) {
    pairs.reserve(m);
    std::size_t j = 0;
    for (std::size_t i = 0; i < m; ++i) {
      while (j < n && orig[j] != pred[i]) ++j;
      if (j == n) break;
      pairs.push_back({i, j++});
    }
    if (pairs.size() == m) return finish(Tier::subsequence);
    pairs.clear();
  }

  // A common prefix is always part of the leftmost alignment; only the rest
  // goes through the sparse LCS.
  std::size_t prefix = 0;
  while (prefix < n && prefix < m && !pred[prefix].empty() &&
         pred[prefix] == orig[prefix])
    ++prefix;
  for (std::size_t i = 0; i < prefix; ++i) pairs.push_back({i, i});
  Alignment rest =
      lcs_hunt_szymanski(pred.subspan(prefix), orig.subspan(prefix), ws);
  for (const auto& p : rest.pairs)
    pairs.push_back({p.pred + prefix, p.orig + prefix});
  return finish(Tier::lcs);
}

AlignResult align_hierarchical(const TokenSequence& orig,
                               const ParsedPrediction& pred,
                               const Normalizer& norm, LcsWorkspace& ws) {
  std::vector<std::string> pred_tokens;
  pred_tokens.reserve(pred.items.size());
  for (const auto& item : pred.items) pred_tokens.push_back(norm(item.token));

  if (norm.is_identity()) return align_tokens(orig.tokens(), pred_tokens, ws);

  std::vector<std::string> orig_tokens;
  orig_tokens.reserve(orig.size());
  for (const auto& token : orig) orig_tokens.push_back(norm(token));
  return align_tokens(orig_tokens, pred_tokens, ws);
}

AlignResult align_hierarchical(const TokenSequence& orig,
                               const ParsedPrediction& pred,
                               const Normalizer& norm) {
  LcsWorkspace ws;
  return align_hierarchical(orig, pred, norm, ws);
}

Projection project_labels(const TokenSequence& orig,
                          const ParsedPrediction& pred,
                          const Alignment& alignment, const LabelSet& labels,
                          Scheme scheme) {
  std::vector<Tag> tags(orig.size());
  std::size_t unknown = 0;
  for (const auto& pair : alignment.pairs) {
    if (pair.orig >= orig.size() || pair.pred >= pred.items.size())
      throw std::out_of_range("alignment does not fit the sequences");
    auto tag = parse_tag(pred.items[pair.pred].label, labels, scheme);
    if (tag) {
      tags[pair.orig] = std::move(*tag);
    } else {
      ++unknown;
    }
  }
  return {TaggedSequence(orig, std::move(tags)), unknown};
}

}  // namespace tagalign
