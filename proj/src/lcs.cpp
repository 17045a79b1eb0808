#include "tagalign/lcs.hpp"


namespace tagalign {

bool is_monotone(const Alignment& alignment) {
  for (std::size_t k = 1; k < alignment.pairs.size(); ++k) {
    const auto& a = alignment.pairs[k - 1];
    const auto& b = alignment.pairs[k];
    if (a.pred >= b.pred || a.orig >= b.orig) return false;
  }
  return true;
}

Alignment lcs_dp_oracle(std::span<const std::string> pred,
                        std::span<const std::string> orig) {
  return lcs_dp_oracle<std::string>(pred, orig);
}

Alignment lcs_hunt_szymanski_ids(std::span<const std::int32_t> pred,
                                 std::span<const std::int32_t> orig,
                                 LcsWorkspace& ws) {
  const auto n = static_cast<std::int32_t>(pred.size());
  const auto m = static_cast<std::int32_t>(orig.size());

  std::int32_t alphabet = 0;
  for (auto id : orig) alphabet = std::max(alphabet, id + 1);

  // Positions of each id in orig, ascending (counting sort).
  ws.bucket_start_.assign(static_cast<std::size_t>(alphabet) + 1, 0);
  for (auto id : orig)
    if (id >= 0) ++ws.bucket_start_[static_cast<std::size_t>(id) + 1];
  for (std::int32_t s = 0; s < alphabet; ++s)
    ws.bucket_start_[s + 1] += ws.bucket_start_[s];
  ws.positions_.resize(static_cast<std::size_t>(m));
  {
    // bucket_start_ is reused as a fill cursor and restored below
    for (std::int32_t j = 0; j < m; ++j) {
      const auto id = orig[j];
      if (id >= 0) ws.positions_[ws.bucket_start_[id]++] = j;
    }
    for (std::int32_t s = alphabet; s > 0; --s)
      ws.bucket_start_[s] = ws.bucket_start_[s - 1];
    ws.bucket_start_[0] = 0;
  }

  // Rows are processed from the last pred position backwards.
  // thresholds_[k] is the largest orig index at which a common subsequence of
  // length k over the rows seen so far can start. It strictly decreases in k;
  // slot 0 is a sentinel larger than every index.
  ws.thresholds_.assign(1, m);
  ws.level_head_.assign(1, -1);
  ws.matches_.clear();
  for (std::int32_t i = n - 1; i >= 0; --i) {
    const auto id = pred[i];
    if (id < 0 || id >= alphabet) continue;
    const auto first = ws.bucket_start_[id];
    const auto last = ws.bucket_start_[id + 1];
    // Ascending orig order so one row never extends its own matches. A later
    // (larger) j never lands past the slot of an earlier one, and on similar
    // sequences it usually lands close by, so gallop down from the last slot
    // before binary searching.
    auto& t = ws.thresholds_;
    std::size_t limit = t.size();
    for (auto p = first; p < last; ++p) {
      const auto j = ws.positions_[p];
      std::size_t hi = limit;  // answer lies in [lo, hi]; t[0] > j always
      std::size_t lo = 1;
      for (std::size_t step = 1; step < limit; step *= 2) {
        const std::size_t probe = limit - step;
        if (t[probe] > j) {
          lo = probe + 1;
          break;
        }
        hi = probe;
      }
      const std::size_t slot = static_cast<std::size_t>(
          std::lower_bound(t.begin() + static_cast<std::ptrdiff_t>(lo),
                           t.begin() + static_cast<std::ptrdiff_t>(hi), j,
                           [](std::int32_t th, std::int32_t v) { return th > v; }) -
          t.begin());
      if (slot == t.size()) {
        t.push_back(j);
        ws.level_head_.push_back(-1);
      } else if (t[slot] < j) {
        t[slot] = j;
      }
      limit = slot + 1;
      ws.matches_.push_back({i, j, ws.level_head_[slot]});
      ws.level_head_[slot] = static_cast<std::int32_t>(ws.matches_.size()) - 1;
    }
  }

  const auto length = static_cast<std::int32_t>(ws.thresholds_.size()) - 1;
  Alignment out;
  if (length == 0) return out;

  // Walk down the levels; at each one take the reachable match with the
  // smallest orig index, then the smallest pred index.
  out.pairs.reserve(static_cast<std::size_t>(length));
  std::int32_t min_pred = 0;
  std::int32_t min_orig = 0;
  for (std::int32_t level = length; level >= 1; --level) {
    const LcsWorkspace::Match* best = nullptr;
    for (auto k = ws.level_head_[level]; k >= 0; k = ws.matches_[k].next) {
      const auto& mt = ws.matches_[k];
      if (mt.pred < min_pred || mt.orig < min_orig) continue;
      if (!best || mt.orig < best->orig ||
          (mt.orig == best->orig && mt.pred < best->pred))
        best = &mt;
    }
    // A level-L chain start implies a reachable level L-1 start after it.
    out.pairs.push_back({static_cast<std::size_t>(best->pred),
                         static_cast<std::size_t>(best->orig)});
    min_pred = best->pred + 1;
    min_orig = best->orig + 1;
  }
  return out;
}

Alignment lcs_hunt_szymanski(std::span<const std::string> pred,
                             std::span<const std::string> orig,
                             LcsWorkspace& ws) {
  std::size_t capacity = 16;
  while (capacity < 2 * orig.size()) capacity *= 2;
  const std::size_t mask = capacity - 1;
  ws.slots_.assign(capacity, -1);
  ws.orig_ids_.resize(orig.size());
  ws.pred_ids_.resize(pred.size());

  // FNV-1a: tokens are short, and an inline loop beats a library call here.
  auto hasher = [](std::string_view token) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : token) h = (h ^ c) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  };
  // Returns the slot holding `token`, or the empty slot where it would go.
  auto probe = [&](std::string_view token) -> std::int32_t& {
    for (std::size_t h = hasher(token) & mask;; h = (h + 1) & mask) {
      auto& slot = ws.slots_[h];
      if (slot < 0 || orig[static_cast<std::size_t>(slot)] == token) return slot;
    }
  };

  // Ids are the orig index of each token's first occurrence.
  for (std::size_t j = 0; j < orig.size(); ++j) {
    if (orig[j].empty()) {
      ws.orig_ids_[j] = -1;
      continue;
    }
    auto& slot = probe(orig[j]);
    if (slot < 0) slot = static_cast<std::int32_t>(j);
    ws.orig_ids_[j] = slot;
  }
  for (std::size_t i = 0; i < pred.size(); ++i)
    ws.pred_ids_[i] = pred[i].empty() ? -1 : probe(pred[i]);
  // Moved out so the id-level call can reuse the workspace freely.
  std::vector<std::int32_t> pred_ids;
  std::vector<std::int32_t> orig_ids;
  pred_ids.swap(ws.pred_ids_);
  orig_ids.swap(ws.orig_ids_);
  Alignment out = lcs_hunt_szymanski_ids(pred_ids, orig_ids, ws);
  pred_ids.swap(ws.pred_ids_);
  orig_ids.swap(ws.orig_ids_);
  return out;
}

Alignment lcs_hunt_szymanski(std::span<const std::string> pred,
                             std::span<const std::string> orig) {
  LcsWorkspace ws;
  return lcs_hunt_szymanski(pred, orig, ws);
}

}  // namespace tagalign
