#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace coadapt {

// Collects per-micro-batch squared gradient norms for one optimizer step.
// With D data-parallel ranks each running M micro-batches, the independent
// sample count is N = M * D; in simulation every rank's values land in the
// same accumulator (the all-reduce is modeled as summation over the lists),
// so N equals the number of recorded values and M = N / D.
class StepAccumulator {
 public:
  StepAccumulator(int dp_size, std::int64_t global_batch);

  // Append one micro-batch's squared norm. Negative input is rejected.
  void record_micro_batch(double squared_norm);

  int dp_size() const { return dp_size_; }
  std::int64_t global_batch() const { return global_batch_; }
  std::int64_t sample_count() const;  // N
  std::int64_t micro_count() const;   // M = N / dp_size
  std::span<const double> squared_norms() const { return squared_norms_; }

 private:
  int dp_size_;
  std::int64_t global_batch_;
  std::vector<double> squared_norms_;
};

// Unbiased signal/noise estimates for one step.
struct StepStats {
  double signal = 0.0;        // ||G||^2 estimate; may be negative
  double noise = 0.0;         // tr(Sigma) estimate, clamped at 0
  double noise_raw = 0.0;     // unclamped value, kept for diagnostics
  double mean_grad_sq = 0.0;  // squared norm of the synchronized mean gradient
};

//   sbar   = (sum of all s_m) / N
//   signal = (N * gbar^2 - sbar) / (N - 1)
//   noise  = (sbar - gbar^2) * B_g / (N - 1)
// Requires N >= 2. The overload taking the mean gradient computes gbar^2
// itself; the scalar overload takes it precomputed.
StepStats finalize_step(const StepAccumulator& acc,
                        std::span<const double> mean_gradient);
StepStats finalize_step(const StepAccumulator& acc, double mean_grad_sq);

// EMA-smoothed signal/noise with a two-phase coefficient: alpha_early until
// phase_boundary_tokens have been seen, alpha_late afterwards.
struct GnsState {
  double ema_signal = 0.0;
  double ema_noise = 0.0;
  double alpha_early = 0.95;
  double alpha_late = 0.99;
  std::int64_t phase_boundary_tokens = 8'000'000;
  std::int64_t tokens_seen = 0;
  double calibration = 2.0;  // c, multiplies the noise term in gns()
  bool initialized = false;  // first update adopts the raw values
};

// x <- alpha * x + (1 - alpha) * raw for both streams, then advance
// tokens_seen. The very first update sets the EMAs to the raw values so the
// smoothed stream carries no zero bias. ema_noise is clamped at 0.
void update_ema(GnsState& state, const StepStats& stats,
                std::int64_t tokens_this_step);

// Calibrated noise scale phi = c * ema_noise / ema_signal, or nullopt while
// ema_signal <= 0 (the raw signal estimate is legitimately negative early;
// callers treat the stream as not ready).
std::optional<double> gns(const GnsState& state);

// Synthetic gradient source: `count` draws of G_true + zeta with independent
// components, Var(zeta_i) = sigma_diag[i] / micro_batch_samples. The true
// noise scale of this source is sum(sigma_diag) / ||G_true||^2.
std::vector<std::vector<double>> simulate_micro_gradients(
    std::span<const double> true_gradient, std::span<const double> sigma_diag,
    std::int64_t micro_batch_samples, int count, std::uint64_t seed);

// Optional trace output, header:
// step,tokens,signal_raw,noise_raw,ema_signal,ema_noise,phi
struct GnsTraceRow {
  std::int64_t step = 0;
  std::int64_t tokens = 0;
  double signal_raw = 0.0;
  double noise_raw = 0.0;
  double ema_signal = 0.0;
  double ema_noise = 0.0;
  double phi = 0.0;  // NaN while unavailable
};

std::string gns_trace_csv(std::span<const GnsTraceRow> rows);

}  // namespace coadapt
