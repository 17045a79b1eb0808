#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tagalign/core.hpp"
#include "tagalign/dataset.hpp"
#include "tagalign/decode.hpp"

namespace tagalign {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// "-" means stdout for outputs.
struct BuildCommand {
  std::string input;
  DatasetFormat format = DatasetFormat::conll;
  std::string output = "-";
  Scheme scheme = Scheme::bio;  // how input tags are read
  std::string variant = "token";
  std::optional<std::string> labels_file;  // one type per line
  std::optional<std::string> pool_file;    // external sampling pool
  std::optional<std::size_t> external_count;
  std::uint64_t seed = 0;
  bool shuffle = true;
  std::string gap_marker = "...";
};

struct ProcessCommand {
  std::string input;
  DatasetFormat format = DatasetFormat::jsonl;
  std::string output = "-";
  Scheme scheme = Scheme::bio;
  std::string normalizer = "identity";
  RepairPolicy repair = RepairPolicy::conservative;
  unsigned jobs = 1;
};

struct EvaluateCommand {
  std::string gold;
  DatasetFormat gold_format = DatasetFormat::jsonl;
  std::string pred;
  Scheme scheme = Scheme::bio;
  bool per_type = false;
  std::string output = "-";
};

struct CorruptCommand {
  std::string input;
  DatasetFormat format = DatasetFormat::conll;
  std::string output = "-";
  Scheme scheme = Scheme::bio;
  double rate = 0.1;  // split 39:3:58 unless explicit probabilities are given
  std::optional<double> p_omit;
  std::optional<double> p_add;
  std::optional<double> p_sub;
  bool entity_safe = false;
  std::uint64_t seed = 0;
};

struct BenchCommand {
  std::optional<std::string> input;  // JSONL records with generations
  std::size_t synthetic_per_bucket = 200;
  double noise_rate = 0.03;
  std::uint64_t seed = 0;
  std::size_t repetitions = 5;
  std::size_t warmup = 2;
  std::vector<std::size_t> bucket_edges{0, 60, 100, 200};
  std::optional<std::string> json_output;
};

int cmd_build(const BuildCommand& cmd, std::ostream& err);
int cmd_process(const ProcessCommand& cmd, std::ostream& err);
int cmd_evaluate(const EvaluateCommand& cmd, std::ostream& err);
int cmd_corrupt(const CorruptCommand& cmd, std::ostream& err);
int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace tagalign
