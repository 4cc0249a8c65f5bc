#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "diffmod/errors.hpp"

namespace diffmod {

// Exact rationals. mpq_class already maintains the invariants we need
// (gcd(|num|, den) = 1, den >= 1) as long as values are canonicalized,
// which all arithmetic paths guarantee.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "a" or "a/b" (b > 0 after canonicalization). Throws ParseError.
Rat rat_from_string(const std::string& s);

// Canonical serialization: "a/b", with "/b" omitted when b = 1.
std::string rat_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_rat(const Rat& q);

// Fractional part in [0, 1).
Rat frac_rat(const Rat& q);

long to_long(const Int& n);

// All (positive) divisors of |n|, n != 0. Factors via trial division plus
// deterministic Pollard-Brent rho; fine for the coefficient sizes that show
// up in profiles.
std::vector<Int> divisors(const Int& n);

} // namespace diffmod
