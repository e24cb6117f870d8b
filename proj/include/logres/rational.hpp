/// @file rational.hpp
/// @brief Exact rational and integer scalars used throughout the kernel.
///
/// All coefficient arithmetic is exact.  We use GMP's C++ bindings: mpq_class
/// for field coefficients and mpz_class for integer (Laurent polynomial)
/// coefficients.  Nothing in the library ever rounds.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace logres {

using Rat = mpq_class; ///< exact rational coefficient
using ZZ  = mpz_class; ///< exact integer (Hilbert numerators, counts)
using Int = long long; ///< degrees, twists, exponents of t

/// Render a rational as "p" or "p/q" (canonical form, q > 0).
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

/// Parse a rational from "p" or "p/q".  Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

} // namespace logres
