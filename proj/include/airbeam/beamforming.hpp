#pragma once

#include "airbeam/model.hpp"
#include "airbeam/sdp.hpp"
#include "airbeam/types.hpp"

#include <vector>

namespace airbeam {

/// Zero-forcing transmit precoder W with F W = sqrt(zeta) I and
/// Tr(W W^H) equal to the total transmit power.
struct ZfPrecoder {
  CMatrix w;  // T_x x K, column k serves user k
  Real zeta = 0.0;
};

/// Right pseudo-inverse ZF precoder for a K x T_x channel (K <= T_x),
/// scaled to spend p_total_watts. Throws SingularChannel when the channel
/// is rank deficient (condition number above 1e12).
ZfPrecoder zf_precoder(const CMatrix& f, Real p_total_watts);

/// Per-user SINR under the precoder; exact ZF gives zeta / sigma_s2 for all.
RVector zf_sinr(const CMatrix& f, const ZfPrecoder& precoder, Real sigma_s2);

/// Quadratic-form matrices of the reflection optimization. For reflection
/// vector z (conjugated diagonal of the reflection matrix), the received
/// powers become trace forms: z^H q_signal[k] z = ||g_k Psi H_k||^2 with
/// Psi = diag(z)^H, and likewise per interferer block.
struct MuSdrMatrices {
  std::vector<CMatrix> q_signal;              // K entries
  std::vector<std::vector<CMatrix>> q_cross;  // [user][interferer]
  std::vector<CMatrix> q_noise;               // RIS amplifier noise, K entries
  Real trace_cap = 0.0;                       // reflection power budget on Tr(Z)
};

/// Reflection power budget p_a / (p_bs Tr(H H^H) + sigma2) from the
/// Cauchy-Schwarz bound on the amplified power.
Real power_budget(const CMatrix& h, Real p_bs_watts, Real sigma2, Real p_a_watts);

MuSdrMatrices build_mu_sdr(const ChannelSet& channels, const SystemConfig& config);

/// Result of the SINR-target feasibility solve plus rank-one rounding.
struct MuOptimization {
  ReflectionVector reflection;
  SdpSolution relaxed;
  bool feasible = false;        // relaxed problem admits the targets
  bool rounded_feasible = false;  // rounded vector meets the targets too
};

/// Finds reflection coefficients meeting per-user SINR targets: max-slack
/// feasibility over the trace forms, then Gaussian randomization scored by
/// the worst target margin.
MuOptimization optimize_reflection_mu(const ChannelSet& channels,
                                      const SystemConfig& config,
                                      const RVector& gamma_targets, Rng& rng);

/// Per-user downlink SINR for reflection vector z. RIS amplifier noise is
/// taken in expectation: sigma_v^2 sum_n |g_kn z_n|^2.
RVector sinr_mu(const ChannelSet& channels, const ReflectionVector& reflection,
                const SystemConfig& config);

/// sum_k log2(1 + gamma_k); rejects negative SINRs.
Real sum_rate(const RVector& sinrs);

struct MaxMinResult {
  Real gamma_star = 0.0;  // linear scale
  ReflectionVector reflection;
  bool feasible = false;
};

/// Largest common SINR target reachable by every user simultaneously,
/// located by bisecting the target in dB and checking feasibility of the
/// relaxed problem; returns the rounded reflection vector of the best
/// feasible target.
MaxMinResult max_min_sinr(const ChannelSet& channels, const SystemConfig& config,
                          Rng& rng);

}  // namespace airbeam
