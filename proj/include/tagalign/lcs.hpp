#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tagalign {

struct AlignedPair {
  std::size_t pred = 0;
  std::size_t orig = 0;

  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

// Order-preserving one-to-one correspondence between predicted and original
// positions. Both index streams are strictly increasing.
struct Alignment {
  std::vector<AlignedPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  friend bool operator==(const Alignment&, const Alignment&) = default;
};

bool is_monotone(const Alignment& alignment);

// Tokens that can never take part in a match: empty strings, negative ids.
inline bool token_matchable(std::string_view t) { return !t.empty(); }
inline bool token_matchable(std::int32_t id) { return id >= 0; }

// Every longest-common-subsequence routine here returns the same alignment
// among all maximum ones: the lexicographically smallest sequence of orig
// indices, and for that sequence the earliest pred indices.

// Classic O(n*m) dynamic program. Reference implementation; keep it simple.
template <class T>
Alignment lcs_dp_oracle(std::span<const T> pred, std::span<const T> orig) {
  const std::size_t n = pred.size();
  const std::size_t m = orig.size();
  const std::size_t width = m + 1;
  // suffix[i * width + j] = LCS length of pred[i:] and orig[j:]
  std::vector<std::int32_t> suffix((n + 1) * width, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::int32_t& {
    return suffix[i * width + j];
  };
  auto matches = [&](std::size_t i, std::size_t j) {
    return token_matchable(pred[i]) && pred[i] == orig[j];
  };

  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (matches(i, j)) {
        at(i, j) = at(i + 1, j + 1) + 1;
      } else {
        at(i, j) = std::max(at(i + 1, j), at(i, j + 1));
      }
    }
  }

  Alignment out;
  std::int32_t remaining = at(0, 0);
  out.pairs.reserve(static_cast<std::size_t>(remaining));
  std::size_t i = 0;
  std::size_t j = 0;
  while (remaining > 0) {
    // Earliest pred position that can take orig[j]; later ones can only do
    // worse because suffix LCS is non-increasing in i.
    std::size_t k = i;
    while (k < n && !matches(k, j)) ++k;
    if (k < n && at(k + 1, j + 1) + 1 == remaining) {
      out.pairs.push_back({k, j});
      i = k + 1;
      --remaining;
    }
    ++j;
  }
  return out;
}

Alignment lcs_dp_oracle(std::span<const std::string> pred,
                        std::span<const std::string> orig);

// Scratch buffers reused across calls. Not thread-safe; use one per thread.
class LcsWorkspace {
 public:
  LcsWorkspace() = default;

 private:
  friend Alignment lcs_hunt_szymanski_ids(std::span<const std::int32_t>,
                                          std::span<const std::int32_t>,
                                          LcsWorkspace&);
  friend Alignment lcs_hunt_szymanski(std::span<const std::string>,
                                      std::span<const std::string>,
                                      LcsWorkspace&);

  struct Match {
    std::int32_t pred;
    std::int32_t orig;
    std::int32_t next;  // previous match recorded at the same level, or -1
  };

  // Open-addressing intern table: slot -> orig index of the first occurrence,
  // -1 when empty. Capacity is a power of two, at least twice the token count.
  std::vector<std::int32_t> slots_;
  std::vector<std::int32_t> pred_ids_;
  std::vector<std::int32_t> orig_ids_;
  std::vector<std::int32_t> bucket_start_;
  std::vector<std::int32_t> positions_;
  std::vector<std::int32_t> thresholds_;
  std::vector<Match> matches_;
  std::vector<std::int32_t> level_head_;  // newest match per level
};

// Hunt-Szymanski over sparse match pairs: O((n + r) log n) for r matching
// (pred, orig) position pairs. Ids must be dense-ish non-negative integers;
// negative ids never match.
Alignment lcs_hunt_szymanski_ids(std::span<const std::int32_t> pred,
                                 std::span<const std::int32_t> orig,
                                 LcsWorkspace& ws);

Alignment lcs_hunt_szymanski(std::span<const std::string> pred,
                             std::span<const std::string> orig,
                             LcsWorkspace& ws);

Alignment lcs_hunt_szymanski(std::span<const std::string> pred,
                             std::span<const std::string> orig);

}  // namespace tagalign
