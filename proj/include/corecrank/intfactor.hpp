#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "corecrank/integer.hpp"

namespace corecrank::intfactor {

// Prime factorization of a positive integer: (prime, exponent) pairs with
// primes strictly ascending and exponents >= 1. factorize(1) is empty.
struct Factorization {
    std::vector<std::pair<Integer, unsigned long>> factors;

    Integer product() const {
        Integer m = 1;
        for (const auto& [p, e] : factors) m *= pow_ui(p, e);
        return m;
    }
};

// Residue class of a prime modulo 3. 2 lies in Pi2.
enum class PrimeClass { Pi1, Pi2, Three };

// Deterministic Miller-Rabin. Exact for all n below 3.3e24 (fixed witness
// set), which covers every input this library is meant for.
bool is_prime(const Integer& n);

// Trial division to 1e6, then Pollard rho (Brent) with Miller-Rabin
// certification of every emitted prime. Rejects m <= 0.
Factorization factorize(const Integer& m);

// Largest v with p^v | m. Rejects m <= 0 and non-prime p.
unsigned long valuation(const Integer& m, const Integer& p);

// Square root of a modulo an odd prime p, or nullopt if a is a non-residue.
// Returns the smaller of the two roots, so the result is in [0, p/2].
// Tonelli-Shanks, with the direct exponent shortcut for p = 3 mod 4.
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p);

// Rejects composites.
PrimeClass prime_class(const Integer& p);

}  // namespace corecrank::intfactor
