#pragma once

#include <vector>

#include "corecrank/geometry.hpp"
#include "corecrank/integer.hpp"

namespace corecrank::cores {

// Non-increasing positive parts.
using Partition = std::vector<long>;

// Characteristic vector of a 3-core, identified with the zero-sum triple
// (c0,c1,c2) = (-x-y, x, y).
struct CharVector {
    Integer x, y;

    Integer c0() const { return -x - y; }

    friend bool operator==(const CharVector& a, const CharVector& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const CharVector& a, const CharVector& b) { return !(a == b); }
    friend bool operator<(const CharVector& a, const CharVector& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Legs and arms of the diagonal hooks, both strictly decreasing, equal
// lengths.
struct FrobeniusSymbol {
    std::vector<long> legs, arms;

    friend bool operator==(const FrobeniusSymbol& a, const FrobeniusSymbol& b) {
        return a.legs == b.legs && a.arms == b.arms;
    }
};

inline constexpr long kDefaultBruteForceBound = 80;

// Size of the 3-core with characteristic vector c: 3x^2+3xy+3y^2+x+2y.
Integer size_of(const CharVector& c);

// (x,y) -> (6x+3y+1, 3y+1), landing on x^2+3y^2 = 12*size_of+4 with both
// coordinates 1 mod 3.
geometry::Solution theta(const CharVector& c);

// Inverse on the residue-(1,1) solutions; rejects anything else.
CharVector theta_inv(const geometry::Solution& s);

// Characteristic vectors of the 3-cores of n, recovered from the canonical
// orbit representatives. Sorted by (x, y).
std::vector<CharVector> enumerate_charvecs(const Integer& n);

// Independent oracle: bounded scan of the size form.
std::vector<CharVector> enumerate_charvecs_bruteforce(const Integer& n);

// Abacus reading of a characteristic vector: runner r with c_r > 0
// contributes arms 3q+r (0 <= q < c_r), runner r with c_r < 0 contributes
// legs 3q+(2-r) (0 <= q < -c_r).
FrobeniusSymbol charvec_to_frobenius(const CharVector& c);

// Rebuild the partition row by row; rejects malformed symbols.
Partition frobenius_to_partition(const FrobeniusSymbol& f);

Partition conjugate(const Partition& p);

// Hook lengths of every box, row-major.
std::vector<long> hooklengths(const Partition& p);

// No hook of length exactly 3 / no hook divisible by 3. The two tests
// agree on every partition.
bool is_3core(const Partition& p);
bool is_3core_div3(const Partition& p);

// All 3-cores of n by full partition enumeration; the oracle the fast
// paths are checked against. Rejects n above the bound.
std::vector<Partition> enumerate_3cores_bruteforce(const Integer& n,
                                                   long bound = kDefaultBruteForceBound);

// Count of 3-cores of n via the valuations of 3n+1: zero if some prime
// 2 mod 3 divides it to an odd power, else the product of (v_p + 1) over
// primes 1 mod 3.
Integer a3(const Integer& n);

// Conjugate partition on characteristic vectors: (x,y) -> (-x, x+y).
CharVector conj_charvec(const CharVector& c);

// 1 iff n has a (necessarily unique) self-conjugate 3-core, i.e. 3n+1 is
// a perfect square.
int asc3(const Integer& n);

}  // namespace corecrank::cores
