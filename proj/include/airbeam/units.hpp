#pragma once

#include "airbeam/types.hpp"

#include <cmath>

namespace airbeam {

inline Real dbm_to_watts(Real p_dbm) {
  return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

inline Real watts_to_dbm(Real watts) {
  return 10.0 * std::log10(watts) + 30.0;
}

inline Real db_to_linear(Real db) { return std::pow(10.0, db / 10.0); }

inline Real linear_to_db(Real x) { return 10.0 * std::log10(x); }

/// Distance-dependent attenuation c0 * d^-beta with c0 given in dB.
inline Real path_loss(Real c0_db, Real distance_m, Real beta) {
  if (!(distance_m > 0.0)) {
    throw InvalidInput("path_loss: distance must be positive");
  }
  return db_to_linear(c0_db) * std::pow(distance_m, -beta);
}

}  // namespace airbeam
