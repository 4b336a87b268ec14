#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quadgap {

using i64 = int64_t;
using u64 = uint64_t;
using u32 = uint32_t;

// Exact integer / rational types. QuadInt components and anything CRT-sized
// live here; hot loops work on i64 lattice coordinates instead.
using Int = mpz_class;
using Rat = mpq_class;

inline bool fits_i64(const Int& v) { return v.fits_slong_p(); }

inline i64 to_i64(const Int& v) {
    if (!fits_i64(v)) throw std::overflow_error("integer exceeds 64 bits: " + v.get_str());
    return static_cast<i64>(v.get_si());
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline i64 isqrt_i64(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Least nonnegative residue.
inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace quadgap
