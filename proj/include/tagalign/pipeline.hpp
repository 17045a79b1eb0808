#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tagalign/align.hpp"
#include "tagalign/dataset.hpp"
#include "tagalign/decode.hpp"
#include "tagalign/eval.hpp"

namespace tagalign {

struct ProcessOptions {
  Scheme scheme = Scheme::bio;
  Normalizer normalizer;
  RepairPolicy repair = RepairPolicy::conservative;
};

struct ProcessResult {
  std::string id;
  std::vector<std::string> tags;
  std::vector<EntitySpan> entities;
  AlignStats stats;
  std::size_t unknown_labels = 0;
  std::size_t malformed = 0;
  std::optional<std::string> diagnostic;
};

// parse -> align -> project -> decode for one record. Problems with the
// generation itself are soft failures reported in `diagnostic`; only an
// invalid record (bad tokens or label set) throws.
ProcessResult process_record(const InstanceRecord& record,
                             const ProcessOptions& options, LcsWorkspace& ws);
ProcessResult process_record(const InstanceRecord& record,
                             const ProcessOptions& options);

nlohmann::ordered_json to_json(const ProcessResult& result);

// One output line per record, in input order, independent of `jobs`.
std::vector<std::string> process_corpus(std::span<const InstanceRecord> records,
                                        const ProcessOptions& options,
                                        unsigned jobs = 1);

struct SpanRecord {
  std::string id;
  std::vector<EntitySpan> entities;
};

// Entities of a JSON record: its "entities" array when present, otherwise
// decoded from "tags" or "gold_tags" with `scheme`.
SpanRecord spans_from_json(const nlohmann::json& j, Scheme scheme,
                           std::size_t index);

// Entities of a dataset record, decoded from its gold tags.
SpanRecord spans_from_record(const InstanceRecord& record, Scheme scheme);

nlohmann::ordered_json to_json(const EntitySpan& span);

// Pairs records by id and scores them. Throws std::invalid_argument listing
// the ids present on one side only.
EvalReport evaluate_by_id(std::span<const SpanRecord> gold,
                          std::span<const SpanRecord> pred);

}  // namespace tagalign
