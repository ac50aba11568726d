#pragma once

#include "airbeam/rng.hpp"
#include "airbeam/types.hpp"

#include <cstdint>

namespace airbeam {

struct BisectionSettings {
  Real gamma_lo_db = -40.0;
  Real gamma_hi_db = 60.0;
  int max_iter = 60;
  Real tol_db = 0.05;
};

/// System geometry, powers and solver knobs. Powers are stored in dBm as
/// configured; the watts accessors below convert on demand so all internal
/// math runs in linear scale.
struct SystemConfig {
  int n_ris = 16;       // reflecting elements N
  int tx_antennas = 2;  // T_x
  int users = 2;        // K
  int rx_antennas = 1;  // R_x
  int mod_order = 4;    // M

  Real p_total_dbm = 10.0;
  Real p_bs_dbm = 0.0;
  Real p_a_dbm = 10.0;

  Real c0_db = -30.0;  // reference attenuation at 1 m
  Real beta_t = 2.2;
  Real beta_k = 2.8;
  Real beta_d = 3.5;
  Real d_t = 20.0;
  Real d_k = 30.0;
  Real d_d = 50.0;

  Real sigma_s_dbm = -90.0;
  Real sigma_v_dbm = -90.0;

  long trials = 100;
  std::uint64_t seed = 1;

  int sdr_candidates = 200;  // Gaussian randomization draws G
  Real delta_r = 100.0;      // index-modulation dominance factor

  BisectionSettings bisection;

  Real p_total_watts() const { return dbm_unchecked(p_total_dbm); }
  Real p_bs_watts() const { return dbm_unchecked(p_bs_dbm); }
  Real p_a_watts() const { return dbm_unchecked(p_a_dbm); }
  Real sigma_s2_watts() const { return dbm_unchecked(sigma_s_dbm); }
  Real sigma_v2_watts() const { return dbm_unchecked(sigma_v_dbm); }

  Real loss_t() const;  // transmitter-to-RIS attenuation
  Real loss_k() const;  // RIS-to-receiver attenuation
  Real loss_d() const;  // direct-link attenuation

  /// Throws InvalidInput on the first violated structural invariant
  /// (antenna counts, divisibility, power positivity, ...).
  void validate() const;

 private:
  static Real dbm_unchecked(Real dbm);
};

/// One block-fading draw. Path attenuation is folded into the entries:
/// h carries sqrt(L_T), each row of g carries sqrt(L_k), f carries sqrt(L_D).
struct ChannelSet {
  CMatrix h;  // N x T_x, transmitter to RIS
  CMatrix g;  // rows x N, RIS to receivers (rows = K downlink, R_x uplink)
  CMatrix f;  // rows x T_x, direct links (baselines only)
};

/// i.i.d. CN(0,1) entries, drawn row-major for reproducibility.
CMatrix sample_rayleigh(int rows, int cols, Rng& rng);

/// Downlink set: g has one row per user, f is the K x T_x direct channel.
ChannelSet generate_channels(const SystemConfig& config, Rng& rng);

/// Uplink set for receive index modulation: g has one row per receive
/// antenna, f is the R_x x T_x direct channel used by the RSM baseline.
ChannelSet generate_channels_uplink(const SystemConfig& config, Rng& rng);

/// Active-RIS reflection coefficients. Entries are the conjugated diagonal
/// of the reflection matrix, i.e. coeffs[n] = alpha_n * exp(-j phi_n) and
/// the matrix itself is diag(coeffs)^H. Amplitudes may exceed one.
struct ReflectionVector {
  CVector coeffs;
};

}  // namespace airbeam
