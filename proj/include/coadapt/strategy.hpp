#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coadapt {

// A 3D parallel execution strategy: degrees of data, tensor, and pipeline
// parallelism. d * t * p must equal the GPU count of whatever profile or
// layout the strategy is used with.
struct ParallelStrategy {
  int d = 1;
  int t = 1;
  int p = 1;

  int gpus() const { return d * t * p; }
  auto operator<=>(const ParallelStrategy&) const = default;

  // "d2t1p4" — used in CSV-safe config labels and log lines.
  std::string label() const;
};

// One execution configuration: strategy plus global and micro batch size.
// Valid configurations have global_batch divisible by d * micro_batch; the
// quotient is the gradient-accumulation count.
struct ConfigTuple {
  ParallelStrategy strategy;
  std::int64_t global_batch = 0;
  std::int64_t micro_batch = 0;

  bool divisible() const;
  std::int64_t grad_accum() const;  // global_batch / (d * micro_batch)
  auto operator<=>(const ConfigTuple&) const = default;

  // "d2t1p4_g16_m2"
  std::string label() const;
};

// Throw ValidationError unless d,t,p >= 1 and d*t*p == n_gpus.
void validate_strategy(const ParallelStrategy& s, int n_gpus);

// validate_strategy plus batch positivity and the divisibility invariant.
void validate_config(const ConfigTuple& c, int n_gpus);

ParallelStrategy parse_strategy_label(const std::string& text);  // "2,1,4" or "d2t1p4"

}  // namespace coadapt
