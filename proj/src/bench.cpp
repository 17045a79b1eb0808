#include "tagalign/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "tagalign/align.hpp"
#include "tagalign/genparse.hpp"
#include "tagalign/lcs.hpp"
#include "tagalign/rng.hpp"
#include "tagalign/synth.hpp"

namespace tagalign {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t run_once(Algorithm algorithm, const BenchPair& pair,
                     LcsWorkspace& ws) {
  switch (algorithm) {
    case Algorithm::naive_dp:
      return lcs_dp_oracle(pair.pred, pair.orig).size();
    case Algorithm::hunt_szymanski:
      return lcs_hunt_szymanski(pair.pred, pair.orig, ws).size();
    case Algorithm::hierarchical:
      return align_tokens(pair.orig, pair.pred, ws).alignment.size();
  }
  return 0;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::naive_dp: return "LCS O(N^2)";
    case Algorithm::hunt_szymanski: return "LCS O(N log N)";
    case Algorithm::hierarchical: return "LCS hierarchical";
  }
  return "";
}

BenchReport run_benchmark(std::span<const BenchPair> corpus,
                          const BenchConfig& cfg) {
  if (corpus.empty()) throw std::invalid_argument("empty benchmark corpus");
  if (cfg.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (cfg.bucket_edges.size() < 2 ||
      !std::is_sorted(cfg.bucket_edges.begin(), cfg.bucket_edges.end()))
    throw std::invalid_argument("bucket edges must be sorted, at least two");

  LcsWorkspace ws;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::size_t naive = run_once(Algorithm::naive_dp, corpus[i], ws);
    for (auto a : {Algorithm::hunt_szymanski, Algorithm::hierarchical}) {
      if (run_once(a, corpus[i], ws) != naive)
        throw std::logic_error("alignment lengths disagree on benchmark pair " +
                               std::to_string(i));
    }
  }

  BenchReport report;
  report.repetitions = cfg.repetitions;
  report.warmup = cfg.warmup;
  std::vector<std::vector<const BenchPair*>> buckets(cfg.bucket_edges.size() - 1);
  for (const auto& pair : corpus) {
    const std::size_t len = pair.orig.size();
    auto it = std::upper_bound(cfg.bucket_edges.begin(), cfg.bucket_edges.end(), len);
    const auto b = static_cast<std::size_t>(it - cfg.bucket_edges.begin());
    if (b == 0 || b == cfg.bucket_edges.size()) {
      ++report.skipped;
    } else {
      buckets[b - 1].push_back(&pair);
    }
  }

  volatile std::size_t sink = 0;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    const auto& items = buckets[b];
    if (items.empty()) continue;
    BucketReport bucket;
    bucket.lower = cfg.bucket_edges[b];
    bucket.upper = cfg.bucket_edges[b + 1];
    bucket.samples = items.size();

    for (const auto* pair : items) {
      const auto tier = align_tokens(pair->orig, pair->pred, ws).stats.tier;
      ++bucket.tiers[static_cast<std::size_t>(tier)];
    }

    for (std::size_t a = 0; a < kAlgorithmCount; ++a) {
      const auto algorithm = static_cast<Algorithm>(a);
      std::vector<double> totals;
      for (std::size_t rep = 0; rep < cfg.warmup + cfg.repetitions; ++rep) {
        const auto start = Clock::now();
        std::size_t acc = 0;
        for (const auto* pair : items) acc += run_once(algorithm, *pair, ws);
        const auto stop = Clock::now();
        sink = sink + acc;
        if (rep >= cfg.warmup)
          totals.push_back(
              std::chrono::duration<double, std::micro>(stop - start).count());
      }
      bucket.mean_us[a] = median(std::move(totals)) / static_cast<double>(items.size());
    }
    for (std::size_t a = 0; a < kAlgorithmCount; ++a) {
      bucket.speedup[a] = a == 0 ? 1.0
                                 : bucket.mean_us[0] / std::max(bucket.mean_us[a], 1e-9);
    }
    report.buckets.push_back(bucket);
  }
  return report;
}

std::string format_table(const BenchReport& report) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-20s", "Sequence Length");
  out += buf;
  for (const auto& b : report.buckets) {
    std::snprintf(buf, sizeof buf, " | %10s",
                  (std::to_string(b.lower) + "-" + std::to_string(b.upper)).c_str());
    out += buf;
  }
  out += '\n';
  for (std::size_t a = 0; a < kAlgorithmCount; ++a) {
    std::snprintf(buf, sizeof buf, "%-20s",
                  std::string(to_string(static_cast<Algorithm>(a))).c_str());
    out += buf;
    for (const auto& b : report.buckets) {
      std::snprintf(buf, sizeof buf, " | %9.1fx", b.speedup[a]);
      out += buf;
    }
    out += '\n';
  }
  std::snprintf(buf, sizeof buf, "%-20s", "samples");
  out += buf;
  for (const auto& b : report.buckets) {
    std::snprintf(buf, sizeof buf, " | %10zu", b.samples);
    out += buf;
  }
  out += '\n';
  return out;
}

nlohmann::ordered_json to_json(const BenchReport& report) {
  nlohmann::ordered_json j;
  j["repetitions"] = report.repetitions;
  j["warmup"] = report.warmup;
  j["skipped"] = report.skipped;
  nlohmann::ordered_json buckets = nlohmann::ordered_json::array();
  for (const auto& b : report.buckets) {
    nlohmann::ordered_json jb;
    jb["lower"] = b.lower;
    jb["upper"] = b.upper;
    jb["samples"] = b.samples;
    nlohmann::ordered_json algos = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < kAlgorithmCount; ++a) {
      algos.push_back({{"algorithm", std::string(to_string(static_cast<Algorithm>(a)))},
                       {"mean_us", b.mean_us[a]},
                       {"speedup", b.speedup[a]}});
    }
    jb["algorithms"] = std::move(algos);
    jb["tiers"] = {{"exact", b.tiers[0]},
                   {"subsequence", b.tiers[1]},
                   {"lcs", b.tiers[2]}};
    buckets.push_back(std::move(jb));
  }
  j["buckets"] = std::move(buckets);
  return j;
}

std::vector<BenchPair> synthetic_bench_corpus(const SyntheticBenchConfig& cfg) {
  std::vector<BenchPair> out;
  for (std::size_t b = 0; b + 1 < cfg.bucket_edges.size(); ++b) {
    SynthConfig synth;
    synth.sentences = cfg.pairs_per_bucket;
    synth.min_length = std::max<std::size_t>(1, cfg.bucket_edges[b]);
    synth.max_length = cfg.bucket_edges[b + 1] - 1;
    synth.seed = Rng::derive(cfg.seed, b);
    const auto sentences = synthetic_sentences(synth);
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      const auto noise = NoiseConfig::mixture(
          cfg.noise_rate, Rng::derive(synth.seed, s + 1));
      out.push_back({sentences[s].tokens().tokens(),
                     parse_generation(corrupt(sentences[s], noise)).tokens()});
    }
  }
  return out;
}

}  // namespace tagalign
