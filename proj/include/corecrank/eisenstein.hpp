#pragma once

#include <array>
#include <string>
#include <vector>

#include "corecrank/integer.hpp"

namespace corecrank::eisenstein {

// Element of Z[w], w = e^{2*pi*i/3}, stored as z = a + b*w. The
// half-coordinate view u = 2a - b, v = b writes the same element as
// z = (u + v*sqrt(3)*i)/2; u and v always share parity.
class EisInt {
public:
    EisInt() : a_(0), b_(0) {}
    EisInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

    // Requires u = v (mod 2).
    static EisInt from_half_coords(const Integer& u, const Integer& v);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    Integer u() const { return 2 * a_ - b_; }
    Integer v() const { return b_; }

    // a^2 - ab + b^2 = (u^2 + 3v^2)/4, nonnegative, zero only at zero.
    Integer norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    // Complex conjugate: w -> w^2, i.e. (a,b) -> (a-b,-b).
    EisInt conj() const { return EisInt(a_ - b_, -b_); }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    friend EisInt operator*(const EisInt& x, const EisInt& y) {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
        return EisInt(x.a_ * y.a_ - x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_);
    }
    friend EisInt operator+(const EisInt& x, const EisInt& y) {
        return EisInt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend EisInt operator-(const EisInt& x, const EisInt& y) {
        return EisInt(x.a_ - y.a_, x.b_ - y.b_);
    }
    EisInt operator-() const { return EisInt(-a_, -b_); }
    EisInt& operator*=(const EisInt& y) { return *this = *this * y; }

    friend bool operator==(const EisInt& x, const EisInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const EisInt& x, const EisInt& y) { return !(x == y); }

    // Lexicographic on half-coordinates (u, then v); the canonical output
    // order everywhere a list of elements is produced.
    friend bool operator<(const EisInt& x, const EisInt& y) {
        Integer ux = x.u(), uy = y.u();
        if (ux != uy) return ux < uy;
        return x.v() < y.v();
    }

    std::string to_string_basis() const;  // "a+b*w", exact round trip
    std::string to_string_half() const;   // "(u,v)/2", exact round trip

private:
    Integer a_, b_;
};

// Accepts both textual renderings.
EisInt parse_eisint(const std::string& text);

// The unit group: the six powers of 1+w, in ascending power order
// 1, 1+w, w, -1, -1-w, -w.
const std::array<EisInt, 6>& units();

EisInt pow(const EisInt& z, unsigned long e);

// Deterministic irreducible of norm p for p = 1 (mod 3): the unique
// solution of u^2 + 3v^2 = 4p with 0 < v < u < 3v. Found by a square
// root of -3 mod p followed by the Cornacchia remainder descent.
EisInt split_prime(const Integer& p);

// The unique unit multiple of z whose half-coordinates are both 1 (mod 3).
// Requires norm(z) = 1 (mod 3) (in particular z != 0).
EisInt canonical_associate(const EisInt& z);

// All elements of norm M up to units, canonicalized and sorted; empty iff
// some prime 2 mod 3 divides M to an odd power. Rejects M <= 0 and 3 | M.
std::vector<EisInt> norm_representations(const Integer& M);

}  // namespace corecrank::eisenstein
