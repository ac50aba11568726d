#include "airbeam/psk.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace airbeam {

bool is_power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned gray_encode(unsigned v) { return v ^ (v >> 1); }

unsigned gray_decode(unsigned g) {
  unsigned v = 0;
  for (; g != 0; g >>= 1) v ^= g;
  return v;
}

Complex psk_modulate(unsigned symbol_index, unsigned mod_order) {
  if (!is_power_of_two(mod_order)) {
    throw InvalidInput("psk_modulate: modulation order must be a power of two");
  }
  if (symbol_index >= mod_order) {
    throw InvalidInput("psk_modulate: symbol index out of range");
  }
  const Real phase = 2.0 * std::numbers::pi *
                     static_cast<Real>(gray_encode(symbol_index)) /
                     static_cast<Real>(mod_order);
  return {std::cos(phase), std::sin(phase)};
}

unsigned psk_demodulate(Complex y, unsigned mod_order) {
  if (!is_power_of_two(mod_order)) {
    throw InvalidInput("psk_demodulate: modulation order must be a power of two");
  }
  if (y == Complex{0.0, 0.0}) return 0;
  unsigned best = 0;
  Real best_metric = -std::numeric_limits<Real>::infinity();
  for (unsigned index = 0; index < mod_order; ++index) {
    const Real metric = std::real(y * std::conj(psk_modulate(index, mod_order)));
    if (metric > best_metric) {
      best_metric = metric;
      best = index;
    }
  }
  return best;
}

}  // namespace airbeam
