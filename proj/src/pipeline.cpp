#include "tagalign/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace tagalign {

ProcessResult process_record(const InstanceRecord& record,
                             const ProcessOptions& options, LcsWorkspace& ws) {
  const TokenSequence tokens(record.tokens);
  const LabelSet labels(record.label_set);

  ProcessResult result;
  result.id = record.id;

  const ParsedPrediction parsed =
      parse_generation(record.generation.value_or(std::string()));
  result.malformed = parsed.malformed;
  if (!record.generation) {
    result.diagnostic = "missing generation";
  } else if (parsed.total_failure()) {
    result.diagnostic = "no parseable segments";
  }

  AlignResult aligned =
      align_hierarchical(tokens, parsed, options.normalizer, ws);
  result.stats = aligned.stats;
  Projection projected = project_labels(tokens, parsed, aligned.alignment,
                                        labels, options.scheme);
  result.unknown_labels = projected.unknown_labels;
  result.entities =
      decode_entities(projected.sequence, options.scheme, options.repair);
  result.tags.reserve(tokens.size());
  for (const auto& tag : projected.sequence.tags())
    result.tags.push_back(render_tag(tag));
  return result;
}

ProcessResult process_record(const InstanceRecord& record,
                             const ProcessOptions& options) {
  LcsWorkspace ws;
  return process_record(record, options, ws);
}

nlohmann::ordered_json to_json(const EntitySpan& span) {
  nlohmann::ordered_json j;
  j["start"] = span.start;
  j["end"] = span.end;
  j["type"] = span.type;
  j["text"] = span.text;
  return j;
}

nlohmann::ordered_json to_json(const ProcessResult& result) {
  nlohmann::ordered_json j;
  j["id"] = result.id;
  j["tags"] = result.tags;
  nlohmann::ordered_json entities = nlohmann::ordered_json::array();
  for (const auto& span : result.entities) entities.push_back(to_json(span));
  j["entities"] = std::move(entities);
  nlohmann::ordered_json stats;
  stats["tier"] = std::string(to_string(result.stats.tier));
  stats["lcs_length"] = result.stats.lcs_length;
  stats["unmatched_pred"] = result.stats.unmatched_pred;
  stats["unmatched_orig"] = result.stats.unmatched_orig;
  stats["unknown_labels"] = result.unknown_labels;
  stats["malformed"] = result.malformed;
  j["stats"] = std::move(stats);
  if (result.diagnostic) j["diagnostic"] = *result.diagnostic;
  return j;
}

std::vector<std::string> process_corpus(std::span<const InstanceRecord> records,
                                        const ProcessOptions& options,
                                        unsigned jobs) {
  std::vector<std::string> lines(records.size());
  auto run_one = [&](std::size_t i, LcsWorkspace& ws) {
    nlohmann::ordered_json j;
    try {
      j = to_json(process_record(records[i], options, ws));
    } catch (const std::exception& e) {
      // invalid record: empty output plus the reason
      j["id"] = records[i].id;
      j["tags"] = nlohmann::ordered_json::array();
      j["entities"] = nlohmann::ordered_json::array();
      j["diagnostic"] = e.what();
    }
    lines[i] = j.dump();
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || records.size() < 2) {
    LcsWorkspace ws;
    for (std::size_t i = 0; i < records.size(); ++i) run_one(i, ws);
    return lines;
  }

  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    LcsWorkspace ws;
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= records.size()) return;
      const std::size_t end = std::min(records.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) run_one(i, ws);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return lines;
}

namespace {

std::vector<EntitySpan> spans_from_tags(const std::vector<std::string>& tags,
                                        const std::vector<std::string>& tokens,
                                        Scheme scheme) {
  std::vector<Tag> parsed;
  parsed.reserve(tags.size());
  for (const auto& t : tags)
    parsed.push_back(parse_tag_any_type(t, scheme).value_or(Tag::outside()));
  std::vector<std::string> words = tokens;
  if (words.size() != tags.size()) {
    // Tags without tokens: placeholder words, span text is not scored.
    words.assign(tags.size(), "_");
  }
  return decode_entities(TaggedSequence(TokenSequence(std::move(words)),
                                        std::move(parsed)),
                         scheme, RepairPolicy::conservative);
}

}  // namespace

SpanRecord spans_from_json(const nlohmann::json& j, Scheme scheme,
                           std::size_t index) {
  SpanRecord out;
  if (auto it = j.find("id"); it != j.end() && it->is_string()) {
    out.id = it->get<std::string>();
  } else if (it != j.end() && it->is_number_integer()) {
    out.id = it->dump();
  } else {
    out.id = std::to_string(index);
  }

  if (auto it = j.find("entities"); it != j.end()) {
    if (!it->is_array()) throw std::invalid_argument("\"entities\" must be an array");
    for (const auto& e : *it) {
      EntitySpan span;
      span.start = e.at("start").get<std::size_t>();
      span.end = e.at("end").get<std::size_t>();
      span.type = e.at("type").get<std::string>();
      if (auto t = e.find("text"); t != e.end() && t->is_string())
        span.text = t->get<std::string>();
      if (span.start >= span.end)
        throw std::invalid_argument("entity with start >= end");
      out.entities.push_back(std::move(span));
    }
    return out;
  }

  std::vector<std::string> tokens;
  if (auto it = j.find("tokens"); it != j.end())
    tokens = it->get<std::vector<std::string>>();
  for (const char* field : {"tags", "gold_tags"}) {
    if (auto it = j.find(field); it != j.end()) {
      out.entities = spans_from_tags(it->get<std::vector<std::string>>(),
                                     tokens, scheme);
      return out;
    }
  }
  throw std::invalid_argument("record " + out.id +
                              " has neither entities nor tags");
}

SpanRecord spans_from_record(const InstanceRecord& record, Scheme scheme) {
  return {record.id, decode_entities(gold_sequence(record, scheme), scheme,
                                     RepairPolicy::conservative)};
}

EvalReport evaluate_by_id(std::span<const SpanRecord> gold,
                          std::span<const SpanRecord> pred) {
  std::unordered_map<std::string, std::size_t> pred_index;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (!pred_index.emplace(pred[i].id, i).second)
      throw std::invalid_argument("duplicate prediction id " + pred[i].id);
  }
  std::unordered_map<std::string, bool> gold_ids;
  std::vector<std::string> missing_pred;
  for (const auto& g : gold) {
    if (!gold_ids.emplace(g.id, true).second)
      throw std::invalid_argument("duplicate gold id " + g.id);
    if (!pred_index.contains(g.id)) missing_pred.push_back(g.id);
  }
  std::vector<std::string> missing_gold;
  for (const auto& p : pred)
    if (!gold_ids.contains(p.id)) missing_gold.push_back(p.id);

  if (!missing_pred.empty() || !missing_gold.empty()) {
    std::string msg = "id mismatch between gold and prediction;";
    auto list = [&msg](const char* what, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string(" ") + what + ":";
      for (const auto& id : ids) msg += " " + id;
      msg += ";";
    };
    list("missing from prediction", missing_pred);
    list("missing from gold", missing_gold);
    msg.pop_back();
    throw std::invalid_argument(msg);
  }

  EvalAccumulator acc;
  for (const auto& g : gold)
    acc.add(g.entities, pred[pred_index.at(g.id)].entities);
  return acc.report();
}

}  // namespace tagalign
