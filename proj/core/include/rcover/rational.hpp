#pragma once
// Exact rational arithmetic helpers. All optimization-facing values in this
// library are mpq_class rationals; floating point appears only in display
// code and in upper estimates of transcendental constants (see ln_upper).
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace rcover {

using Rat = mpq_class;
using Int = mpz_class;

// Parse "12", "-3.25" or "7/4" into an exact rational. Throws
// std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

// Canonical text form: integer when denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// H_n = sum_{i=1..n} 1/i, exact. H_0 = 0.
Rat harmonic(int n);

// Exact q^e for integer e >= 0.
Rat rat_pow(const Rat& q, unsigned e);

// A rational u with u >= ln(x) and u - ln(x) <= ~1e-13 * max(1, ln x).
// Computed from the double log rounded up a few ulps; x must be >= 1.
// Only used for algorithm constants where any upper bound is sound.
Rat ln_upper(const Rat& x);

// A rational u with u*u >= q and u within relative 2^-60 of sqrt(q).
// Certified by integer square roots; q must be >= 0.
Rat sqrt_upper(const Rat& q);

// Upper bound on 10*e/(e-1), same contract as ln_upper.
Rat ten_e_over_e_minus_one_upper();

// Lower bound on 1 - 1/e (dyadic, certified from the alternating series).
Rat one_minus_inv_e_lower();

// Least common multiple of denominators; multiplying every cost by the
// returned factor yields integers. Returns 1 for an empty list.
Int common_denominator(const std::vector<Rat>& values);

}  // namespace rcover
