#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corecrank {

// All public arithmetic runs on arbitrary-precision integers. Internal
// fast paths may drop to 64-bit words, but never change results.
using Integer = mpz_class;

// Residue of v modulo 3 in {0,1,2} (floor convention, so -2 -> 1).
inline int mod3(const Integer& v) {
    return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), 3));
}

inline bool is_even(const Integer& v) { return mpz_even_p(v.get_mpz_t()) != 0; }
inline bool is_odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

inline bool same_parity(const Integer& a, const Integer& b) {
    return is_even(a) == is_even(b);
}

inline bool is_perfect_square(const Integer& v) {
    return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

// Floor of sqrt(v); v must be nonnegative.
inline Integer isqrt(const Integer& v) {
    if (sgn(v) < 0) throw std::invalid_argument("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Nonnegative residue of a modulo positive m.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_int64(const Integer& v) { return v.fits_slong_p(); }

inline long to_int64(const Integer& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("Integer does not fit in 64 bits: " + v.get_str());
    return static_cast<long>(v.get_si());
}

inline unsigned long to_ulong(const Integer& v) {
    if (sgn(v) < 0 || !v.fits_ulong_p())
        throw std::overflow_error("Integer does not fit in unsigned long: " + v.get_str());
    return v.get_ui();
}

}  // namespace corecrank
