#include "tagalign/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace tagalign {

namespace {

std::vector<std::string> string_list(const nlohmann::json& j,
                                     const char* field,
                                     const std::string& source,
                                     std::size_t line) {
  if (!j.is_array())
    throw DataError(source, line, std::string("\"") + field +
                                      "\" must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string())
      throw DataError(source, line, std::string("\"") + field +
                                        "\" must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

void check_tag_column(const std::string& tag, const LoadOptions& options,
                      const std::string& source, std::size_t line,
                      std::vector<std::string>& diagnostics) {
  auto parsed = parse_tag_any_type(tag, options.scheme);
  if (parsed && options.labels && !parsed->is_outside() &&
      !options.labels->contains(parsed->type()))
    parsed.reset();
  if (!parsed)
    diagnostics.push_back(source + ":" + std::to_string(line) +
                          ": unknown tag '" + tag + "'");
}

}  // namespace

std::optional<DatasetFormat> parse_format(std::string_view text) {
  if (text == "conll") return DatasetFormat::conll;
  if (text == "jsonl") return DatasetFormat::jsonl;
  return std::nullopt;
}

DataError::DataError(const std::string& source, std::size_t line,
                     const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      line_(line) {}

Dataset read_conll(std::istream& in, const std::string& source,
                   const LoadOptions& options) {
  Dataset out;
  std::vector<std::string> seen_types;
  InstanceRecord current;
  std::vector<std::string> tags;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.id = std::to_string(out.records.size());
    current.gold_tags = std::move(tags);
    out.records.push_back(std::move(current));
    current = {};
    tags.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto columns = split_whitespace(line);
    if (columns.empty()) {
      flush();
      continue;
    }
    if (columns.front() == "-DOCSTART-") continue;
    if (columns.size() < 2)
      throw DataError(source, line_no, "expected \"token tag\", got '" + line + "'");
    check_tag_column(columns.back(), options, source, line_no, out.diagnostics);
    if (auto tag = parse_tag_any_type(columns.back(), options.scheme);
        tag && !tag->is_outside()) {
      bool known = false;
      for (const auto& t : seen_types) known = known || t == tag->type();
      if (!known) seen_types.push_back(tag->type());
    }
    current.tokens.push_back(std::move(columns.front()));
    tags.push_back(std::move(columns.back()));
  }
  flush();

  const std::vector<std::string> label_set =
      options.labels ? options.labels->names() : seen_types;
  for (auto& record : out.records) record.label_set = label_set;
  return out;
}

InstanceRecord record_from_json(const nlohmann::json& j,
                                const std::string& source, std::size_t line,
                                std::size_t index) {
  if (!j.is_object()) throw DataError(source, line, "record is not an object");
  InstanceRecord r;
  if (auto it = j.find("id"); it != j.end() && !it->is_null()) {
    if (it->is_string()) {
      r.id = it->get<std::string>();
    } else if (it->is_number_integer()) {
      r.id = it->dump();
    } else {
      throw DataError(source, line, "\"id\" must be a string");
    }
  } else {
    r.id = std::to_string(index);
  }

  auto tokens = j.find("tokens");
  if (tokens == j.end()) throw DataError(source, line, "missing \"tokens\"");
  r.tokens = string_list(*tokens, "tokens", source, line);
  try {
    TokenSequence check(r.tokens);
  } catch (const std::invalid_argument& e) {
    throw DataError(source, line, e.what());
  }

  auto labels = j.find("label_set");
  if (labels == j.end()) throw DataError(source, line, "missing \"label_set\"");
  r.label_set = string_list(*labels, "label_set", source, line);
  try {
    LabelSet check(r.label_set);
  } catch (const std::invalid_argument& e) {
    throw DataError(source, line, e.what());
  }

  if (auto it = j.find("generation"); it != j.end() && !it->is_null()) {
    if (!it->is_string())
      throw DataError(source, line, "\"generation\" must be a string");
    r.generation = it->get<std::string>();
  }
  if (auto it = j.find("gold_tags"); it != j.end() && !it->is_null()) {
    r.gold_tags = string_list(*it, "gold_tags", source, line);
    if (r.gold_tags->size() != r.tokens.size())
      throw DataError(source, line,
                      "\"gold_tags\" length does not match \"tokens\"");
  }
  return r;
}

Dataset read_jsonl(std::istream& in, const std::string& source) {
  Dataset out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (split_whitespace(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(source, line_no, std::string("invalid JSON: ") + e.what());
    }
    out.records.push_back(
        record_from_json(j, source, line_no, out.records.size()));
  }
  return out;
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return format == DatasetFormat::conll ? read_conll(in, path.string(), options)
                                        : read_jsonl(in, path.string());
}

nlohmann::ordered_json to_json(const InstanceRecord& record) {
  nlohmann::ordered_json j;
  j["id"] = record.id;
  j["tokens"] = record.tokens;
  j["label_set"] = record.label_set;
  if (record.generation) j["generation"] = *record.generation;
  if (record.gold_tags) j["gold_tags"] = *record.gold_tags;
  return j;
}

void write_jsonl(std::ostream& out, std::span<const InstanceRecord> records) {
  for (const auto& record : records) out << to_json(record).dump() << '\n';
}

void write_conll(std::ostream& out, std::span<const InstanceRecord> records) {
  for (const auto& record : records) {
    for (std::size_t i = 0; i < record.tokens.size(); ++i) {
      out << record.tokens[i] << ' '
          << (record.gold_tags ? (*record.gold_tags)[i] : std::string("O"))
          << '\n';
    }
    out << '\n';
  }
}

LabelSet record_labels(const InstanceRecord& record) {
  return LabelSet(record.label_set);
}

TaggedSequence gold_sequence(const InstanceRecord& record, Scheme scheme) {
  if (!record.gold_tags)
    throw std::invalid_argument("record " + record.id + " has no gold tags");
  const LabelSet labels(record.label_set);
  std::vector<Tag> tags;
  tags.reserve(record.gold_tags->size());
  for (const auto& text : *record.gold_tags)
    tags.push_back(parse_tag(text, labels, scheme).value_or(Tag::outside()));
  return TaggedSequence(TokenSequence(record.tokens), std::move(tags));
}

}  // namespace tagalign
