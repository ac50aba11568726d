#pragma once

#include "airbeam/types.hpp"

namespace airbeam {

bool is_power_of_two(unsigned n);

/// Binary-reflected Gray code and its inverse.
unsigned gray_encode(unsigned v);
unsigned gray_decode(unsigned g);

/// Symbol index -> unit-modulus M-PSK point exp(j*2*pi*gray(index)/M).
/// Gray labeling keeps adjacent constellation points one bit apart.
Complex psk_modulate(unsigned symbol_index, unsigned mod_order);

/// Hard decision: index whose constellation point maximizes Re(y * conj(p)),
/// ties broken toward the smaller index. y == 0 decides index 0.
unsigned psk_demodulate(Complex y, unsigned mod_order);

}  // namespace airbeam
