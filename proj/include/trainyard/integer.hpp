#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace trainyard {

/// Arbitrary-precision signed integer used for every count and coefficient.
using Integer = mpz_class;

/// Rod lengths and sequence indices. Lengths are always >= 1; indices may be
/// negative transiently (out-of-range values read as zero).
using Length = std::int64_t;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::optional<std::int64_t> to_int64(const Integer& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

inline int sign_of(const Integer& v) { return sgn(v); }

}  // namespace trainyard
