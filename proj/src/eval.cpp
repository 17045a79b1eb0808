#include "tagalign/eval.hpp"

#include <stdexcept>

namespace tagalign {

namespace {

bool same_key(const EntitySpan& a, const EntitySpan& b) {
  return a.start == b.start && a.end == b.end && a.type == b.type;
}

bool overlaps(const EntitySpan& a, const EntitySpan& b) {
  return a.start < b.end && b.start < a.end;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// One-to-one exact matching. matched_gold[g] is true when gold g found an
// unused prediction with the same key.
std::vector<bool> match_exact(std::span<const EntitySpan> gold,
                              std::span<const EntitySpan> pred,
                              std::vector<bool>& used_pred) {
  std::vector<bool> matched_gold(gold.size(), false);
  used_pred.assign(pred.size(), false);
  for (std::size_t g = 0; g < gold.size(); ++g) {
    for (std::size_t p = 0; p < pred.size(); ++p) {
      if (!used_pred[p] && same_key(gold[g], pred[p])) {
        used_pred[p] = true;
        matched_gold[g] = true;
        break;
      }
    }
  }
  return matched_gold;
}

}  // namespace

ErrorCounts& ErrorCounts::operator+=(const ErrorCounts& other) {
  correct += other.correct;
  ue += other.ue;
  ne += other.ne;
  be += other.be;
  return *this;
}

ErrorCounts classify_errors(std::span<const EntitySpan> gold,
                            std::span<const EntitySpan> pred) {
  std::vector<bool> used_pred;
  const auto matched = match_exact(gold, pred, used_pred);
  ErrorCounts out;
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (matched[g]) {
      ++out.correct;
      continue;
    }
    bool same_type = false;
    bool other_type = false;
    for (const auto& p : pred) {
      if (!overlaps(gold[g], p)) continue;
      if (p.type == gold[g].type) {
        same_type = true;
      } else {
        other_type = true;
      }
    }
    if (same_type) {
      ++out.be;
    } else if (other_type) {
      ++out.ne;
    } else {
      ++out.ue;
    }
  }
  return out;
}

double PrfCounts::precision() const { return ratio(tp, tp + fp); }
double PrfCounts::recall() const { return ratio(tp, tp + fn); }
double PrfCounts::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

PrfCounts& PrfCounts::operator+=(const PrfCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

void EvalAccumulator::add(std::span<const EntitySpan> gold,
                          std::span<const EntitySpan> pred) {
  std::vector<bool> used_pred;
  const auto matched = match_exact(gold, pred, used_pred);
  for (std::size_t g = 0; g < gold.size(); ++g) {
    auto& type = per_type_[gold[g].type];
    if (matched[g]) {
      ++counts_.tp;
      ++type.tp;
    } else {
      ++counts_.fn;
      ++type.fn;
    }
  }
  for (std::size_t p = 0; p < pred.size(); ++p) {
    if (!used_pred[p]) {
      ++counts_.fp;
      ++per_type_[pred[p].type].fp;
    }
  }
  errors_ += classify_errors(gold, pred);
  gold_ += gold.size();
  pred_ += pred.size();
}

void EvalAccumulator::merge(const EvalAccumulator& other) {
  counts_ += other.counts_;
  errors_ += other.errors_;
  gold_ += other.gold_;
  pred_ += other.pred_;
  for (const auto& [type, counts] : other.per_type_) per_type_[type] += counts;
}

EvalReport EvalAccumulator::report() const {
  EvalReport r;
  r.counts = counts_;
  r.precision = counts_.precision();
  r.recall = counts_.recall();
  r.f1 = counts_.f1();
  r.gold_entities = gold_;
  r.pred_entities = pred_;
  r.errors = errors_;
  r.ue_rate = ratio(errors_.ue, gold_);
  r.ne_rate = ratio(errors_.ne, gold_);
  r.be_rate = ratio(errors_.be, gold_);
  r.per_type = per_type_;
  return r;
}

EvalReport micro_prf(std::span<const std::vector<EntitySpan>> gold,
                     std::span<const std::vector<EntitySpan>> pred) {
  if (gold.size() != pred.size())
    throw std::invalid_argument("gold has " + std::to_string(gold.size()) +
                                " sentences but prediction has " +
                                std::to_string(pred.size()));
  EvalAccumulator acc;
  for (std::size_t i = 0; i < gold.size(); ++i) acc.add(gold[i], pred[i]);
  return acc.report();
}

nlohmann::ordered_json to_json(const EvalReport& report, bool per_type) {
  nlohmann::ordered_json j;
  j["tp"] = report.counts.tp;
  j["fp"] = report.counts.fp;
  j["fn"] = report.counts.fn;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  j["gold_entities"] = report.gold_entities;
  j["pred_entities"] = report.pred_entities;
  j["ue"] = report.errors.ue;
  j["ne"] = report.errors.ne;
  j["be"] = report.errors.be;
  j["ue_rate"] = report.ue_rate;
  j["ne_rate"] = report.ne_rate;
  j["be_rate"] = report.be_rate;
  if (per_type) {
    nlohmann::ordered_json types = nlohmann::ordered_json::object();
    for (const auto& [type, c] : report.per_type) {
      types[type] = {{"tp", c.tp},
                     {"fp", c.fp},
                     {"fn", c.fn},
                     {"precision", c.precision()},
                     {"recall", c.recall()},
                     {"f1", c.f1()}};
    }
    j["per_type"] = std::move(types);
  }
  return j;
}

}  // namespace tagalign
