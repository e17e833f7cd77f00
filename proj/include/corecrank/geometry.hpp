#pragma once

#include <array>
#include <vector>

#include "corecrank/integer.hpp"

namespace corecrank::geometry {

// Lattice point on x^2 + 3y^2 = k. Construction checks the equation.
struct Solution {
    Integer x, y, k;

    Solution(Integer x_, Integer y_, Integer k_);

    friend bool operator==(const Solution& a, const Solution& b) {
        return a.x == b.x && a.y == b.y && a.k == b.k;
    }
    friend bool operator!=(const Solution& a, const Solution& b) { return !(a == b); }
    friend bool operator<(const Solution& a, const Solution& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Pair of residues mod 3; the crank takes values in the six classes of
// residue_cycle() on k = 4 (mod 12).
struct CrankValue {
    int first = 0, second = 0;

    friend bool operator==(const CrankValue& a, const CrankValue& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator!=(const CrankValue& a, const CrankValue& b) { return !(a == b); }
    friend bool operator<(const CrankValue& a, const CrankValue& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

// The six coordinate-residue classes hit by solutions for k = 4 (mod 12),
// listed in the order the R-action walks them.
const std::array<CrankValue, 6>& residue_cycle();

// All of U_k by direct scan, sorted lexicographically.
std::vector<Solution> solutions_bruteforce(const Integer& k);

// U_{12n+4} reconstructed from the Eisenstein classes of norm 3n+1,
// closed under R. Equals solutions_bruteforce(12n+4).
std::vector<Solution> solutions_via_eisenstein(const Integer& n);

// Order-6 rotation (x,y) -> ((x-3y)/2, (x+y)/2). Needs x = y (mod 2).
Solution apply_R(const Solution& s);

// Reflection (x,y) -> ((-x+3y)/2, (x+y)/2); an involution. Needs x = y (mod 2).
Solution apply_conj(const Solution& s);

// (2x mod 3, 2x+2y mod 3).
CrankValue crank(const Solution& s);

using Orbit = std::vector<Solution>;  // 6 elements, R^0..R^5 from the canonical one

// Partition of U_{12n+4} into R-orbits, listed by canonical representative
// in lexicographic order.
std::vector<Orbit> orbits(const Integer& n);

// The unique member with x = y = 1 (mod 3). Validates the orbit.
Solution canonical_rep(const Orbit& orbit);

}  // namespace corecrank::geometry
