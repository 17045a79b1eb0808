#include "tagalign/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "tagalign/bench.hpp"
#include "tagalign/noise.hpp"
#include "tagalign/pipeline.hpp"
#include "tagalign/rng.hpp"
#include "tagalign/schema.hpp"

namespace tagalign {

namespace {

// stdout for "-", otherwise a file opened for writing.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish(const std::string& what) {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed for " + what);
  }

 private:
  std::ofstream file_;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

LabelSet read_label_file(const std::string& path) {
  std::vector<std::string> names;
  for (const auto& line : read_lines(path)) {
    auto words = split_whitespace(line);
    if (!words.empty()) names.push_back(words.front());
  }
  return LabelSet(std::move(names));
}

std::vector<SpanRecord> read_span_file(const std::string& path, Scheme scheme) {
  std::vector<SpanRecord> out;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    if (split_whitespace(line).empty()) continue;
    try {
      out.push_back(spans_from_json(nlohmann::json::parse(line), scheme, out.size()));
    } catch (const std::exception& e) {
      throw DataError(path, line_no, e.what());
    }
  }
  return out;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

void report_diagnostics(const Dataset& data, std::ostream& err) {
  for (const auto& d : data.diagnostics) err << "warning: " << d << '\n';
}

}  // namespace

int cmd_build(const BuildCommand& cmd, std::ostream& err) {
  return guarded(err, [&] {
    const TargetVariant variant = parse_variant(cmd.variant);
    LoadOptions load;
    load.scheme = cmd.scheme;
    if (cmd.labels_file) load.labels = read_label_file(*cmd.labels_file);
    const Dataset data = load_dataset(cmd.input, cmd.format, load);
    report_diagnostics(data, err);

    // Default pool: every type seen anywhere in the corpus.
    LabelSet pool;
    if (cmd.pool_file) {
      pool = read_label_file(*cmd.pool_file);
    } else {
      std::vector<std::string> names;
      for (const auto& r : data.records)
        for (const auto& t : r.label_set)
          if (std::find(names.begin(), names.end(), t) == names.end())
            names.push_back(t);
      pool = LabelSet(std::move(names));
    }

    TargetOptions target;
    target.gap_marker = cmd.gap_marker;
    Output out(cmd.output);
    for (std::size_t i = 0; i < data.records.size(); ++i) {
      const auto& record = data.records[i];
      const TaggedSequence seq = gold_sequence(record, cmd.scheme);
      LabelSet labels = record_labels(record);
      if (cmd.shuffle) {
        SamplerConfig sampler;
        sampler.shuffle_seed = Rng::derive(cmd.seed, i);
        sampler.external_pool = pool;
        sampler.external_count = cmd.external_count;
        labels = sample_label_set(labels, sampler);
      }
      if (labels.empty())
        throw DataError(cmd.input, i, "record " + record.id + " has no entity types");
      out.stream() << to_json(build_instance(record.id, seq, labels, variant, target)).dump()
                   << '\n';
    }
    out.finish(cmd.output);
    return kExitOk;
  });
}

int cmd_process(const ProcessCommand& cmd, std::ostream& err) {
  return guarded(err, [&] {
    ProcessOptions options;
    options.scheme = cmd.scheme;
    options.normalizer = Normalizer::parse(cmd.normalizer);
    options.repair = cmd.repair;
    LoadOptions load;
    load.scheme = cmd.scheme;
    const Dataset data = load_dataset(cmd.input, cmd.format, load);
    report_diagnostics(data, err);

    const auto lines = process_corpus(data.records, options, cmd.jobs);
    Output out(cmd.output);
    for (const auto& line : lines) out.stream() << line << '\n';
    out.finish(cmd.output);
    return kExitOk;
  });
}

int cmd_evaluate(const EvaluateCommand& cmd, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<SpanRecord> gold;
    if (cmd.gold_format == DatasetFormat::conll) {
      LoadOptions load;
      load.scheme = cmd.scheme;
      const Dataset data = load_dataset(cmd.gold, DatasetFormat::conll, load);
      report_diagnostics(data, err);
      for (const auto& r : data.records) gold.push_back(spans_from_record(r, cmd.scheme));
    } else {
      gold = read_span_file(cmd.gold, cmd.scheme);
    }
    const auto pred = read_span_file(cmd.pred, cmd.scheme);
    const EvalReport report = evaluate_by_id(gold, pred);
    Output out(cmd.output);
    out.stream() << to_json(report, cmd.per_type).dump() << '\n';
    out.finish(cmd.output);
    return kExitOk;
  });
}

int cmd_corrupt(const CorruptCommand& cmd, std::ostream& err) {
  return guarded(err, [&] {
    NoiseConfig base = NoiseConfig::mixture(cmd.rate, cmd.seed, cmd.entity_safe);
    if (cmd.p_omit || cmd.p_add || cmd.p_sub) {
      base.p_omit = cmd.p_omit.value_or(0.0);
      base.p_add = cmd.p_add.value_or(0.0);
      base.p_sub = cmd.p_sub.value_or(0.0);
    }
    base.validate();

    LoadOptions load;
    load.scheme = cmd.scheme;
    Dataset data = load_dataset(cmd.input, cmd.format, load);
    report_diagnostics(data, err);

    Output out(cmd.output);
    for (std::size_t i = 0; i < data.records.size(); ++i) {
      auto& record = data.records[i];
      NoiseConfig cfg = base;
      cfg.seed = Rng::derive(cmd.seed, i);
      record.generation = corrupt(gold_sequence(record, cmd.scheme), cfg);
      out.stream() << to_json(record).dump() << '\n';
    }
    out.finish(cmd.output);
    return kExitOk;
  });
}

int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<BenchPair> corpus;
    if (cmd.input) {
      const Dataset data = load_dataset(*cmd.input, DatasetFormat::jsonl);
      for (const auto& r : data.records) {
        if (!r.generation) continue;
        corpus.push_back({r.tokens, parse_generation(*r.generation).tokens()});
      }
    } else {
      SyntheticBenchConfig synth;
      synth.pairs_per_bucket = cmd.synthetic_per_bucket;
      synth.bucket_edges = cmd.bucket_edges;
      synth.noise_rate = cmd.noise_rate;
      synth.seed = cmd.seed;
      corpus = synthetic_bench_corpus(synth);
    }
    BenchConfig cfg;
    cfg.bucket_edges = cmd.bucket_edges;
    cfg.repetitions = cmd.repetitions;
    cfg.warmup = cmd.warmup;
    const BenchReport report = run_benchmark(corpus, cfg);
    out << format_table(report);
    if (cmd.json_output) {
      Output json(*cmd.json_output);
      json.stream() << to_json(report).dump(2) << '\n';
      json.finish(*cmd.json_output);
    }
    return kExitOk;
  });
}

}  // namespace tagalign
