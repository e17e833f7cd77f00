#pragma once

#include "corecrank/cores.hpp"
#include "corecrank/integer.hpp"

namespace corecrank::identities {

// k qualifies for hs_count: 3 does not divide k and every prime 2 mod 3
// divides k to an even power.
bool hs_valid_k(const Integer& k);

// The target index kn + (k-1)/3 (k = 1 mod 3 whenever hs_valid_k holds).
Integer hs_target(const Integer& k, const Integer& n);

// a3(kn+(k-1)/3) evaluated through the valuation product
//     a3(n) * prod_p (v_p(k)+v_p(3n+1)+1)/(v_p(3n+1)+1)
// over primes p = 1 mod 3; zero when a3(n) is zero.
Integer hs_count(const Integer& k, const Integer& n);

// Product map on characteristic vectors:
//   ((x,y),(x',y')) -> (x+x'+3xx'+3xy'+3yx', y+y'-3xx'+3yy').
// Restricted to C_n x C_{n+3^k} it bijects onto C_{3n^2+(3^{k+1}+2)n+3^k}.
cores::CharVector alpha(const cores::CharVector& c, const cores::CharVector& cp);

// N = 4^m n + (10*4^(m-1)-1)/3; always a3(N) = 0 since v_2(3N+1) = 2m-1.
Integer han_i(const Integer& n, unsigned long m);

struct HanCounterexample {
    Integer N, a3_value, m, k;
};

// The failing instance of the unrestricted vanishing criterion:
// N = 58 = (6k-1)m + 4k-1 with (m,k) = (1,6), m != 2k-1 mod 6k-1, yet
// a3(58) = 2.
HanCounterexample han_ii_counterexample();

struct HanIIResult {
    Integer N;
    // Every prime p = 2 mod 3 divides 6k-1 to an odd power AND
    // m != 2k-1 (mod p) for each of them; exactly then the criterion
    // certifies a3(N) = 0.
    bool hypothesis_holds = false;
    Integer a3_value;
    bool verdict = false;  // hypothesis_holds && a3_value == 0
};

// N = (6k-1)^2 n + (6k-1)m + 4k-1 for n >= 0, m >= 1, k >= 1 with
// m != 2k-1 (mod 6k-1); rejects tuples violating that congruence.
HanIIResult han_ii_fixed(const Integer& n, const Integer& m, const Integer& k);

struct HanWitness {
    int form = 0;   // 1: N = 4^m n + (10*4^(m-1)-1)/3; 2: N = (6k-1)m + 4k-1
    Integer p;      // chosen prime 2 mod 3 with odd valuation in 3N+1
    Integer n, m;   // form 1 parameters (n, m); form 2 uses m with n = 0
    Integer k;      // form 2 parameter
};

// Decomposes any N with a3(N) = 0 into one of the two sanctioned shapes,
// preferring the smallest qualifying odd prime. Rejects N with a3(N) != 0.
HanWitness han_iii_decompose(const Integer& N);

}  // namespace corecrank::identities
