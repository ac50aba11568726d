#include "airbeam/model.hpp"

#include "airbeam/psk.hpp"
#include "airbeam/units.hpp"

#include <doctest.h>

#include <cmath>

using namespace airbeam;

TEST_CASE("dbm conversion") {
  CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0));
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1.0e-3));
  CHECK(dbm_to_watts(-90.0) == doctest::Approx(1.0e-12));
  CHECK(watts_to_dbm(dbm_to_watts(17.5)) == doctest::Approx(17.5));
}

TEST_CASE("path loss follows the distance power law") {
  CHECK(path_loss(-30.0, 1.0, 2.2) == doctest::Approx(1.0e-3));
  CHECK(path_loss(-30.0, 20.0, 2.2) ==
        doctest::Approx(1.372e-6).epsilon(1e-3));
  CHECK(path_loss(-30.0, 50.0, 3.5) ==
        doctest::Approx(1.131e-9).epsilon(1e-3));
  CHECK_THROWS_AS(path_loss(-30.0, 0.0, 2.2), InvalidInput);
  CHECK_THROWS_AS(path_loss(-30.0, -1.0, 2.2), InvalidInput);
}

TEST_CASE("path loss is strictly decreasing in distance and exponent") {
  Real prev = path_loss(-30.0, 1.5, 2.2);
  for (Real d = 2.0; d <= 100.0; d += 1.5) {
    const Real cur = path_loss(-30.0, d, 2.2);
    CHECK(cur < prev);
    prev = cur;
  }
  prev = path_loss(-30.0, 10.0, 1.0);
  for (Real beta = 1.25; beta <= 4.0; beta += 0.25) {
    const Real cur = path_loss(-30.0, 10.0, beta);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("rayleigh sampling has the right moments") {
  Rng rng(5150);
  const CMatrix m = sample_rayleigh(1000, 1000, rng);
  const Real mean_power = m.squaredNorm() / static_cast<Real>(m.size());
  CHECK(mean_power == doctest::Approx(1.0).epsilon(0.01));
  const Complex mean = m.sum() / static_cast<Real>(m.size());
  CHECK(std::abs(mean.real()) < 0.01);
  CHECK(std::abs(mean.imag()) < 0.01);
}

TEST_CASE("rayleigh sampling is reproducible from the rng state") {
  Rng a(99);
  Rng b(99);
  const CMatrix ma = sample_rayleigh(8, 5, a);
  const CMatrix mb = sample_rayleigh(8, 5, b);
  CHECK((ma - mb).norm() == 0.0);
  CHECK_THROWS_AS(sample_rayleigh(0, 3, a), InvalidInput);
}

TEST_CASE("generated channels carry the configured attenuations") {
  SystemConfig cfg;
  cfg.n_ris = 64;
  cfg.tx_antennas = 8;
  cfg.users = 4;
  cfg.rx_antennas = 4;

  Rng rng(77);
  const ChannelSet ch = generate_channels(cfg, rng);
  CHECK(ch.h.rows() == 64);
  CHECK(ch.h.cols() == 8);
  CHECK(ch.g.rows() == 4);
  CHECK(ch.g.cols() == 64);
  CHECK(ch.f.rows() == 4);
  CHECK(ch.f.cols() == 8);
  CHECK(ch.h.allFinite());

  // Second moments: average |entry|^2 approaches the path attenuation.
  Rng moment_rng(123);
  Real acc = 0.0;
  long count = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const ChannelSet draw = generate_channels(cfg, moment_rng);
    acc += draw.h.squaredNorm();
    count += draw.h.size();
  }
  const Real mean_h = acc / static_cast<Real>(count);
  CHECK(mean_h == doctest::Approx(cfg.loss_t()).epsilon(0.02));
}

TEST_CASE("unit-distance channels are raw Rayleigh scale") {
  SystemConfig cfg;
  cfg.d_t = 1.0;
  cfg.c0_db = 0.0;
  cfg.n_ris = 100;
  cfg.tx_antennas = 100;
  cfg.users = 2;
  Rng rng(31337);
  const ChannelSet ch = generate_channels(cfg, rng);
  const Real mean_power = ch.h.squaredNorm() / static_cast<Real>(ch.h.size());
  CHECK(mean_power == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("same seed gives bitwise-identical channel sets") {
  SystemConfig cfg;
  cfg.n_ris = 16;
  cfg.tx_antennas = 4;
  cfg.users = 2;
  Rng a(42);
  Rng b(42);
  const ChannelSet ca = generate_channels(cfg, a);
  const ChannelSet cb = generate_channels(cfg, b);
  CHECK((ca.h - cb.h).norm() == 0.0);
  CHECK((ca.g - cb.g).norm() == 0.0);
  CHECK((ca.f - cb.f).norm() == 0.0);
}

TEST_CASE("config validation") {
  SystemConfig cfg;
  cfg.users = 3;
  cfg.tx_antennas = 4;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg.users = 2;
  CHECK_NOTHROW(cfg.validate());
  cfg.mod_order = 3;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg.mod_order = 4;
  cfg.delta_r = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}

TEST_CASE("psk constellation is unit modulus, distinct, gray labeled") {
  for (unsigned m : {2u, 4u, 8u, 16u}) {
    for (unsigned i = 0; i < m; ++i) {
      const Complex p = psk_modulate(i, m);
      CHECK(std::abs(std::abs(p) - 1.0) < 1e-12);
      for (unsigned j = 0; j < i; ++j) {
        CHECK(std::abs(p - psk_modulate(j, m)) > 1e-6);
      }
      CHECK(psk_demodulate(p, m) == i);
    }
  }
  CHECK(psk_modulate(0, 2) == Complex(1.0, 0.0));
  const Complex bpsk1 = psk_modulate(1, 2);
  CHECK(bpsk1.real() == doctest::Approx(-1.0));
  CHECK(std::abs(bpsk1.imag()) < 1e-12);
}

TEST_CASE("psk demodulation conventions") {
  CHECK(psk_demodulate(Complex(1.0, 0.0), 4) == gray_decode(0));
  CHECK(psk_demodulate(Complex(0.0, 1.0), 4) == gray_decode(1));
  CHECK(psk_demodulate(0.9 * std::polar(1.0, 0.1), 2) == 0);
  CHECK(psk_demodulate(Complex(0.0, 0.0), 4) == 0);
  CHECK_THROWS_AS(psk_modulate(4, 4), InvalidInput);
  CHECK_THROWS_AS(psk_modulate(0, 3), InvalidInput);
}
