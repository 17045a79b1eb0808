#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tagalign/decode.hpp"

namespace tagalign {

struct ErrorCounts {
  std::size_t correct = 0;
  std::size_t ue = 0;  // entity predicted as O
  std::size_t ne = 0;  // overlapped by a prediction of another type
  std::size_t be = 0;  // right type, wrong extent

  std::size_t total() const { return correct + ue + ne + be; }
  ErrorCounts& operator+=(const ErrorCounts& other);
  friend bool operator==(const ErrorCounts&, const ErrorCounts&) = default;
};

// Per gold span, first rule wins: exact (start, end, type) match with an
// unused prediction -> correct; same-type overlap -> BE; other-type overlap ->
// NE; otherwise UE.
ErrorCounts classify_errors(std::span<const EntitySpan> gold,
                            std::span<const EntitySpan> pred);

struct PrfCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  double precision() const;
  double recall() const;
  double f1() const;
  PrfCounts& operator+=(const PrfCounts& other);
};

struct EvalReport {
  PrfCounts counts;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t gold_entities = 0;
  std::size_t pred_entities = 0;
  ErrorCounts errors;
  double ue_rate = 0;
  double ne_rate = 0;
  double be_rate = 0;
  std::map<std::string, PrfCounts> per_type;
};

// Corpus-level aggregation. Accumulators over disjoint chunks can be merged.
class EvalAccumulator {
 public:
  void add(std::span<const EntitySpan> gold, std::span<const EntitySpan> pred);
  void merge(const EvalAccumulator& other);
  EvalReport report() const;

 private:
  PrfCounts counts_;
  ErrorCounts errors_;
  std::size_t gold_ = 0;
  std::size_t pred_ = 0;
  std::map<std::string, PrfCounts> per_type_;
};

// Strict entity-level micro P/R/F1 over parallel corpora. Throws
// std::invalid_argument when the corpora differ in length.
EvalReport micro_prf(std::span<const std::vector<EntitySpan>> gold,
                     std::span<const std::vector<EntitySpan>> pred);

nlohmann::ordered_json to_json(const EvalReport& report, bool per_type = false);

}  // namespace tagalign
