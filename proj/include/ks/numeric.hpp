#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace ks {

using Int = mpz_class;
using Rat = mpq_class;

/// Fractional part, always in [0,1).
Rat mod1(const Rat& r);

/// num/den with canonicalization (mpq_class's two-argument constructor
/// requires it; a negative or non-coprime denominator is UB otherwise).
Rat make_rat(const Int& num, const Int& den);

Int int_pow(const Int& base, unsigned long e);

double to_double(const Rat& r);
double to_double(const Int& n);

/// log of a positive big integer; valid even when n overflows double.
double log_int(const Int& n);

std::string rat_string(const Rat& r);

/// e^{2*pi*i*angle}
std::complex<double> unit_phase(const Rat& angle);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace ks
