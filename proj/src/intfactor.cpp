#include "corecrank/intfactor.hpp"

#include <algorithm>
#include <map>

namespace corecrank::intfactor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1'000'000;

// First twelve primes: a deterministic Miller-Rabin witness set for all
// n < 3.3e24 (Sorenson-Webster).
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

u64 mulmod_u64(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod_u64(u64 b, u64 e, u64 n) {
    u64 r = 1 % n;
    b %= n;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, n);
        b = mulmod_u64(b, b, n);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : kWitnesses) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_mpz(const Integer& n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer nm1 = n - 1;
    for (u64 a : kWitnesses) {
        Integer x;
        Integer base(static_cast<unsigned long>(a));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == nm1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

// Brent's cycle variant of Pollard rho; returns n on failure for this c.
u64 rho_round_u64(u64 n, u64 c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            const u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u64(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd_u64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

u64 rho_u64(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 g = rho_round_u64(n, c);
        if (g != n && g != 1) return g;
    }
}

Integer rho_round_mpz(const Integer& n, unsigned long c) {
    Integer y = 2, q = 1, g = 1, x, ys;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            const u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = f(y);
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(Integer(abs(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

Integer rho_mpz(const Integer& n) {
    if (is_even(n)) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer g = rho_round_mpz(n, c);
        if (g != 1 && g != n) return g;
    }
}

void factor_u64_into(u64 m, std::map<Integer, unsigned long>& out) {
    for (u64 d : {2ull, 3ull}) {
        while (m % d == 0) { ++out[Integer(static_cast<unsigned long>(d))]; m /= d; }
    }
    for (u64 d = 5; d <= kTrialBound && d * d <= m; d += 6) {
        for (u64 dd : {d, d + 2}) {
            while (m % dd == 0) { ++out[Integer(static_cast<unsigned long>(dd))]; m /= dd; }
        }
    }
    if (m == 1) return;
    if (is_prime_u64(m)) {
        ++out[Integer(static_cast<unsigned long>(m))];
        return;
    }
    u64 d = rho_u64(m);
    factor_u64_into(d, out);
    factor_u64_into(m / d, out);
}

void factor_into(Integer m, std::map<Integer, unsigned long>& out) {
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
        factor_u64_into(m.get_ui(), out);
        return;
    }
    for (u64 d = 2; d <= kTrialBound; d = (d == 2 ? 3 : d + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++out[Integer(static_cast<unsigned long>(d))];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
        if (mpz_fits_ulong_p(m.get_mpz_t())) {
            factor_u64_into(m.get_ui(), out);
            return;
        }
    }
    if (m == 1) return;
    if (is_prime_mpz(m)) {
        ++out[m];
        return;
    }
    Integer d = rho_mpz(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

// Deterministic scan 2, 3, 5, 7, ... for a quadratic non-residue mod p.
u64 nonresidue_u64(u64 p) {
    for (u64 c = 2;; c = (c == 2 ? 3 : c + 2)) {
        if (powmod_u64(c, (p - 1) / 2, p) == p - 1) return c;
    }
}

u64 sqrt_mod_u64(u64 a, u64 p) {
    // a is a residue, 0 < a < p, p odd prime.
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 z = nonresidue_u64(p);
    u64 m = s;
    u64 c = powmod_u64(z, q, p);
    u64 t = powmod_u64(a, q, p);
    u64 r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, t2 = t;
        while (t2 != 1) { t2 = mulmod_u64(t2, t2, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

Integer powm(const Integer& b, const Integer& e, const Integer& n) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer nonresidue_mpz(const Integer& p) {
    Integer half = (p - 1) / 2;
    for (Integer c = 2;; c = (c == 2) ? Integer(3) : Integer(c + 2)) {
        if (powm(c, half, p) == p - 1) return c;
    }
}

Integer sqrt_mod_mpz(const Integer& a, const Integer& p) {
    if (mod_floor(p, 4) == 3) return powm(a, (p + 1) / 4, p);
    Integer q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Integer z = nonresidue_mpz(p);
    unsigned long m = s;
    Integer c = powm(z, q, p);
    Integer t = powm(a, q, p);
    Integer r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        unsigned long i = 0;
        Integer t2 = t;
        while (t2 != 1) { t2 = t2 * t2 % p; ++i; }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8)
        return is_prime_u64(n.get_ui());
    return is_prime_mpz(n);
}

Factorization factorize(const Integer& m) {
    if (m <= 0) throw std::invalid_argument("factorize: argument must be positive, got " + m.get_str());
    std::map<Integer, unsigned long> acc;
    factor_into(m, acc);
    Factorization f;
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

unsigned long valuation(const Integer& m, const Integer& p) {
    if (m <= 0) throw std::invalid_argument("valuation: argument must be positive, got " + m.get_str());
    if (!is_prime(p)) throw std::invalid_argument("valuation: modulus " + p.get_str() + " is not prime");
    Integer rest;
    return static_cast<unsigned long>(
        mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p) {
    if (p < 3 || is_even(p)) throw std::invalid_argument("sqrt_mod: modulus " + p.get_str() + " is not an odd prime");
    if (!is_prime(p)) throw std::invalid_argument("sqrt_mod: modulus " + p.get_str() + " is composite");
    Integer an = mod_floor(a, p);
    if (an == 0) return Integer(0);
    Integer t;
    if (mpz_fits_ulong_p(p.get_mpz_t()) && sizeof(unsigned long) == 8) {
        const u64 au = an.get_ui(), pu = p.get_ui();
        if (powmod_u64(au, (pu - 1) / 2, pu) == pu - 1) return std::nullopt;
        t = Integer(static_cast<unsigned long>(sqrt_mod_u64(au, pu)));
    } else {
        if (powm(an, (p - 1) / 2, p) == p - 1) return std::nullopt;
        t = sqrt_mod_mpz(an, p);
    }
    return std::min(t, Integer(p - t));
}

PrimeClass prime_class(const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_class: " + p.get_str() + " is not prime");
    if (p == 3) return PrimeClass::Three;
    return mod3(p) == 1 ? PrimeClass::Pi1 : PrimeClass::Pi2;
}

}  // namespace corecrank::intfactor
