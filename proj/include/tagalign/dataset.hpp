#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tagalign/core.hpp"

namespace tagalign {

// One sentence as it travels between commands.
struct InstanceRecord {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<std::string> label_set;
  std::optional<std::string> generation;
  std::optional<std::vector<std::string>> gold_tags;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

enum class DatasetFormat { conll, jsonl };

std::optional<DatasetFormat> parse_format(std::string_view text);

// Fatal data problem at a known location.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& source, std::size_t line,
            const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Dataset {
  std::vector<InstanceRecord> records;
  std::vector<std::string> diagnostics;  // non-fatal, e.g. unknown tags
};

struct LoadOptions {
  Scheme scheme = Scheme::bio;
  // When set, CoNLL types outside it are reported as unknown; when unset
  // the label set of each CoNLL record is the corpus-wide set of types seen.
  std::optional<LabelSet> labels;
};

// CoNLL: "token<ws>...<ws>tag" per line (first and last columns used), blank
// line between sentences, -DOCSTART- lines skipped. JSONL: one record object
// per line. Throws DataError on malformed input and std::runtime_error when
// the file cannot be read.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& options = {});
Dataset read_conll(std::istream& in, const std::string& source,
                   const LoadOptions& options = {});
Dataset read_jsonl(std::istream& in, const std::string& source);

InstanceRecord record_from_json(const nlohmann::json& j,
                                const std::string& source, std::size_t line,
                                std::size_t index);
nlohmann::ordered_json to_json(const InstanceRecord& record);

void write_jsonl(std::ostream& out, std::span<const InstanceRecord> records);
void write_conll(std::ostream& out, std::span<const InstanceRecord> records);

LabelSet record_labels(const InstanceRecord& record);

// Gold tags as a tagged sequence; unknown tags become O. Throws
// std::invalid_argument when the record has no gold tags.
TaggedSequence gold_sequence(const InstanceRecord& record, Scheme scheme);

}  // namespace tagalign
