#include "airbeam/model.hpp"

#include "airbeam/psk.hpp"
#include "airbeam/units.hpp"

#include <cmath>
#include <string>

namespace airbeam {

Real SystemConfig::dbm_unchecked(Real dbm) { return dbm_to_watts(dbm); }

Real SystemConfig::loss_t() const { return path_loss(c0_db, d_t, beta_t); }
Real SystemConfig::loss_k() const { return path_loss(c0_db, d_k, beta_k); }
Real SystemConfig::loss_d() const { return path_loss(c0_db, d_d, beta_d); }

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw InvalidInput("SystemConfig: " + msg); };
  if (n_ris < 1) fail("n_ris must be >= 1");
  if (tx_antennas < 1) fail("tx_antennas must be >= 1");
  if (users < 1) fail("users must be >= 1");
  if (rx_antennas < 1) fail("rx_antennas must be >= 1");
  if (tx_antennas % users != 0) fail("users must divide tx_antennas");
  if (!is_power_of_two(static_cast<unsigned>(mod_order))) {
    fail("mod_order must be a power of two");
  }
  if (!is_power_of_two(static_cast<unsigned>(rx_antennas))) {
    fail("rx_antennas must be a power of two");
  }
  if (!(p_bs_watts() > 0.0)) fail("p_bs_dbm must convert to positive watts");
  if (!(p_a_watts() > 0.0)) fail("p_a_dbm must convert to positive watts");
  if (!(delta_r > 1.0)) fail("delta_r must exceed 1");
  if (!(d_t > 0.0 && d_k > 0.0 && d_d > 0.0)) fail("distances must be positive");
  if (trials < 1) fail("trials must be >= 1");
  if (sdr_candidates < 1) fail("sdr_candidates must be >= 1");
  if (!(bisection.gamma_hi_db >= bisection.gamma_lo_db)) {
    fail("bisection gamma_hi must be >= gamma_lo");
  }
  if (bisection.max_iter < 1) fail("bisection max_iter must be >= 1");
  if (!(bisection.tol_db > 0.0)) fail("bisection tol must be positive");
}

CMatrix sample_rayleigh(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) {
    throw InvalidInput("sample_rayleigh: dimensions must be >= 1");
  }
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = rng.cgaussian();
    }
  }
  return m;
}

namespace {

// Draw order is fixed (h, then g, then f) so a seed pins the whole set.
ChannelSet generate_impl(const SystemConfig& config, Rng& rng, int receiver_rows) {
  config.validate();
  const Real amp_t = std::sqrt(config.loss_t());
  const Real amp_k = std::sqrt(config.loss_k());
  const Real amp_d = std::sqrt(config.loss_d());

  ChannelSet channels;
  channels.h = amp_t * sample_rayleigh(config.n_ris, config.tx_antennas, rng);
  channels.g = amp_k * sample_rayleigh(receiver_rows, config.n_ris, rng);
  channels.f = amp_d * sample_rayleigh(receiver_rows, config.tx_antennas, rng);
  return channels;
}

}  // namespace

ChannelSet generate_channels(const SystemConfig& config, Rng& rng) {
  return generate_impl(config, rng, config.users);
}

ChannelSet generate_channels_uplink(const SystemConfig& config, Rng& rng) {
  return generate_impl(config, rng, config.rx_antennas);
}

}  // namespace airbeam
