#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tagalign/noise.hpp"

namespace tagalign {

struct BenchPair {
  std::vector<std::string> orig;
  std::vector<std::string> pred;
};

enum class Algorithm { naive_dp = 0, hunt_szymanski = 1, hierarchical = 2 };
inline constexpr std::size_t kAlgorithmCount = 3;

std::string_view to_string(Algorithm algorithm);

struct BenchConfig {
  // Bucket i holds pairs with bucket_edges[i] <= |orig| < bucket_edges[i+1].
  std::vector<std::size_t> bucket_edges{0, 60, 100, 200};
  std::size_t repetitions = 5;
  std::size_t warmup = 2;
};

struct BucketReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t samples = 0;
  std::array<double, kAlgorithmCount> mean_us{};  // per pair, median over reps
  std::array<double, kAlgorithmCount> speedup{};  // naive time / own time
  std::array<std::size_t, 3> tiers{};             // exact, subsequence, lcs
};

struct BenchReport {
  std::vector<BucketReport> buckets;  // only buckets with samples
  std::size_t skipped = 0;            // pairs outside every bucket
  std::size_t repetitions = 0;
  std::size_t warmup = 0;
};

// Times the three aligners on identical inputs, one algorithm at a time.
// Before any timing, all three must agree on every alignment length;
// otherwise std::logic_error. Throws std::invalid_argument for an empty
// corpus or zero repetitions.
BenchReport run_benchmark(std::span<const BenchPair> corpus,
                          const BenchConfig& cfg = {});

std::string format_table(const BenchReport& report);
nlohmann::ordered_json to_json(const BenchReport& report);

struct SyntheticBenchConfig {
  std::size_t pairs_per_bucket = 200;
  std::vector<std::size_t> bucket_edges{0, 60, 100, 200};
  double noise_rate = 0.03;  // per token, default omit/add/sub mixture
  std::uint64_t seed = 0;
};

// Noise-corrupted synthetic generations spread evenly over the buckets.
std::vector<BenchPair> synthetic_bench_corpus(const SyntheticBenchConfig& cfg);

}  // namespace tagalign
