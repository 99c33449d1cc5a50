#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace df {

/// Arbitrary-precision integer used by every exact computation in the library.
using Int = mpz_class;

inline std::string to_string(const Int& x) { return x.get_str(); }

inline bool is_unit(const Int& x) { return x == 1 || x == -1; }

}  // namespace df
