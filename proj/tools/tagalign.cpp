#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "tagalign/commands.hpp"

using namespace tagalign;

namespace {

const std::map<std::string, Scheme> kSchemes{{"bio", Scheme::bio},
                                             {"bioes", Scheme::bioes}};
const std::map<std::string, DatasetFormat> kFormats{
    {"conll", DatasetFormat::conll}, {"jsonl", DatasetFormat::jsonl}};
const std::map<std::string, RepairPolicy> kPolicies{
    {"conservative", RepairPolicy::conservative},
    {"strict", RepairPolicy::strict}};

template <class T>
T lookup(const std::map<std::string, T>& table, const std::string& key) {
  return table.at(key);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tagged-generation alignment toolkit for LLM-based NER"};
  app.require_subcommand(1);

  BuildCommand build;
  std::string build_format = "conll";
  auto* b = app.add_subcommand("build", "Turn a labelled corpus into prompt/target records");
  b->add_option("input", build.input, "Input corpus")->required();
  b->add_option("--format", build_format)->check(CLI::IsMember({"conll", "jsonl"}));
  b->add_option("-o,--output", build.output, "Output JSONL ('-' for stdout)");
  std::string build_scheme = "bio";
  b->add_option("--scheme", build_scheme, "Scheme of the input tags")
      ->check(CLI::IsMember({"bio", "bioes"}));
  b->add_option("--variant", build.variant,
                "token, token:bio, token:bioes, entity:<k> or entity:full");
  b->add_option("--labels", build.labels_file, "Label-set file, one type per line");
  b->add_option("--pool", build.pool_file, "External label pool file");
  b->add_option("--external", build.external_count, "Number of external labels to add");
  b->add_option("--seed", build.seed);
  bool no_shuffle = false;
  b->add_flag("--no-shuffle", no_shuffle, "Keep the label set as-is");
  b->add_option("--gap-marker", build.gap_marker);

  ProcessCommand process;
  std::string process_format = "jsonl";
  auto* p = app.add_subcommand("process", "Align generations and recover tag sequences");
  p->add_option("input", process.input)->required();
  p->add_option("--format", process_format)->check(CLI::IsMember({"conll", "jsonl"}));
  p->add_option("-o,--output", process.output);
  std::string process_scheme = "bio";
  p->add_option("--scheme", process_scheme)
      ->check(CLI::IsMember({"bio", "bioes"}));
  p->add_option("--normalizer", process.normalizer,
                "identity, unicode, vocab:<file>, joined with '+'");
  std::string repair = "conservative";
  p->add_option("--repair", repair)->check(CLI::IsMember({"conservative", "strict"}));
  p->add_option("-j,--jobs", process.jobs)->check(CLI::PositiveNumber);

  EvaluateCommand evaluate;
  std::string gold_format = "jsonl";
  auto* e = app.add_subcommand("evaluate", "Score predictions against gold spans");
  e->add_option("gold", evaluate.gold)->required();
  e->add_option("pred", evaluate.pred)->required();
  e->add_option("--gold-format", gold_format)->check(CLI::IsMember({"conll", "jsonl"}));
  std::string evaluate_scheme = "bio";
  e->add_option("--scheme", evaluate_scheme)
      ->check(CLI::IsMember({"bio", "bioes"}));
  e->add_flag("--per-type", evaluate.per_type);
  e->add_option("-o,--output", evaluate.output);

  CorruptCommand corrupt;
  std::string corrupt_format = "conll";
  auto* c = app.add_subcommand("corrupt", "Make noisy generations from gold tags");
  c->add_option("input", corrupt.input)->required();
  c->add_option("--format", corrupt_format)->check(CLI::IsMember({"conll", "jsonl"}));
  c->add_option("-o,--output", corrupt.output);
  std::string corrupt_scheme = "bio";
  c->add_option("--scheme", corrupt_scheme)
      ->check(CLI::IsMember({"bio", "bioes"}));
  c->add_option("--rate", corrupt.rate)->check(CLI::Range(0.0, 1.0));
  c->add_option("--p-omit", corrupt.p_omit)->check(CLI::Range(0.0, 1.0));
  c->add_option("--p-add", corrupt.p_add)->check(CLI::Range(0.0, 1.0));
  c->add_option("--p-sub", corrupt.p_sub)->check(CLI::Range(0.0, 1.0));
  c->add_flag("--entity-safe", corrupt.entity_safe);
  c->add_option("--seed", corrupt.seed);

  BenchCommand bench;
  auto* k = app.add_subcommand("bench", "Time the aligners by sentence length");
  k->add_option("--input", bench.input, "JSONL with tokens and generation");
  k->add_option("--per-bucket", bench.synthetic_per_bucket);
  k->add_option("--noise", bench.noise_rate)->check(CLI::Range(0.0, 1.0));
  k->add_option("--seed", bench.seed);
  k->add_option("--repetitions", bench.repetitions)->check(CLI::PositiveNumber);
  k->add_option("--warmup", bench.warmup);
  k->add_option("--edges", bench.bucket_edges)->delimiter(',');
  k->add_option("--json", bench.json_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  build.format = lookup(kFormats, build_format);
  process.format = lookup(kFormats, process_format);
  evaluate.gold_format = lookup(kFormats, gold_format);
  corrupt.format = lookup(kFormats, corrupt_format);
  build.scheme = lookup(kSchemes, build_scheme);
  process.scheme = lookup(kSchemes, process_scheme);
  process.repair = lookup(kPolicies, repair);
  evaluate.scheme = lookup(kSchemes, evaluate_scheme);
  corrupt.scheme = lookup(kSchemes, corrupt_scheme);

  if (b->parsed()) {
    build.shuffle = !no_shuffle;
    return cmd_build(build, std::cerr);
  }
  if (p->parsed()) return cmd_process(process, std::cerr);
  if (e->parsed()) return cmd_evaluate(evaluate, std::cerr);
  if (c->parsed()) return cmd_corrupt(corrupt, std::cerr);
  return cmd_bench(bench, std::cout, std::cerr);
}
