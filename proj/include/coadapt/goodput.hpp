#pragma once

#include <cstdint>
#include <span>

namespace coadapt {

// Inputs the goodput evaluation needs beyond the throughput table: the
// calibrated noise scale, the reference batch the base learning rate was
// tuned at, and that base learning rate.
struct EfficiencyContext {
  double phi = 0.0;
  double reference_batch = 16.0;
  double base_lr = 2e-4;

  // Square-root rule: lr at `global_batch` given base_lr at reference_batch.
  double lr_at(double global_batch) const;
};

// Per-sample statistical efficiency SE = (1 + phi) / (B_g + phi).
// phi is the calibrated noise scale; SE(1) == 1 for any phi.
double stat_eff(double global_batch, double phi);

// Goodput = throughput * statistical efficiency.
double goodput(double throughput, double stat_efficiency);

// LR-aware goodput: T * SE(B_g) * sqrt(B_g / reference_batch). The
// sqrt(1/reference_batch) factor is shared by all candidates and only
// normalizes the displayed scale; rankings do not depend on it.
double goodput_lr(double throughput, double global_batch, double phi,
                  double reference_batch);

// Square-root learning-rate rescale for a batch change. Composes: rescaling
// old->mid->new equals old->new.
double lr_rescale(double eta, double batch_old, double batch_new);

// Closed-form continuous maximizer of B_g / ((B_g + B_hw)(B_g + B_crit_scaled)):
// the geometric mean sqrt(B_hw * B_crit_scaled). B_crit_scaled is the
// calibrated critical-batch estimate.
double optimal_batch_continuous(double batch_hw, double batch_crit_scaled);

enum class CbsDistance { kLog, kLinear };

// The candidate batch size closest to the calibrated noise scale, log-space
// distance by default (batch grids are geometric). phi below 1 is treated
// as 1; ties go to the smaller candidate.
std::int64_t cbs_target(double phi, std::span<const std::int64_t> candidates,
                        CbsDistance metric = CbsDistance::kLog);

}  // namespace coadapt
