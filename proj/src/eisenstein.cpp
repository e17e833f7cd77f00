#include "corecrank/eisenstein.hpp"

#include <algorithm>
#include <stdexcept>

#include "corecrank/intfactor.hpp"

namespace corecrank::eisenstein {

EisInt EisInt::from_half_coords(const Integer& u, const Integer& v) {
    if (!same_parity(u, v))
        throw std::invalid_argument("EisInt: half-coordinates (" + u.get_str() + "," +
                                    v.get_str() + ") have mixed parity");
    return EisInt((u + v) / 2, v);
}

std::string EisInt::to_string_basis() const {
    std::string s = a_.get_str();
    s += (sgn(b_) < 0) ? "-" : "+";
    s += Integer(abs(b_)).get_str();
    s += "*w";
    return s;
}

std::string EisInt::to_string_half() const {
    return "(" + u().get_str() + "," + v().get_str() + ")/2";
}

namespace {

Integer parse_integer(const std::string& text) {
    Integer v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("EisInt: bad integer literal '" + text + "'");
    return v;
}

}  // namespace

EisInt parse_eisint(const std::string& text) {
    if (!text.empty() && text.front() == '(') {
        auto comma = text.find(',');
        auto close = text.find(')');
        if (comma == std::string::npos || close == std::string::npos || comma > close ||
            text.substr(close) != ")/2")
            throw std::invalid_argument("EisInt: cannot parse '" + text + "'");
        Integer u = parse_integer(text.substr(1, comma - 1));
        Integer v = parse_integer(text.substr(comma + 1, close - comma - 1));
        return EisInt::from_half_coords(u, v);
    }
    auto star = text.rfind("*w");
    if (star == std::string::npos || star + 2 != text.size())
        throw std::invalid_argument("EisInt: cannot parse '" + text + "'");
    // Split at the sign of the w-coefficient, skipping a leading sign on a.
    auto split = text.find_last_of("+-", star);
    if (split == std::string::npos || split == 0)
        throw std::invalid_argument("EisInt: cannot parse '" + text + "'");
    Integer a = parse_integer(text.substr(0, split));
    Integer b = parse_integer(text.substr(split + 1, star - split - 1));
    if (text[split] == '-') b = -b;
    return EisInt(a, b);
}

const std::array<EisInt, 6>& units() {
    static const std::array<EisInt, 6> us = [] {
        std::array<EisInt, 6> r;
        EisInt gen(1, 1);  // 1+w
        EisInt acc(1, 0);
        for (int k = 0; k < 6; ++k) {
            r[k] = acc;
            acc *= gen;
        }
        return r;
    }();
    return us;
}

EisInt pow(const EisInt& z, unsigned long e) {
    EisInt r(1, 0), base = z;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

EisInt canonical_associate(const EisInt& z) {
    if (z.is_zero() || mod3(z.norm()) != 1)
        throw std::invalid_argument("canonical_associate: norm of " + z.to_string_half() +
                                    " is not 1 mod 3");
    EisInt result;
    bool found = false;
    for (const EisInt& e : units()) {
        EisInt candidate = e * z;
        if (mod3(candidate.u()) == 1 && mod3(candidate.v()) == 1) {
            if (found) throw std::logic_error("canonical_associate: residue class not unique");
            result = candidate;
            found = true;
        }
    }
    if (!found) throw std::logic_error("canonical_associate: no unit multiple has residues (1,1)");
    return result;
}

EisInt split_prime(const Integer& p) {
    if (intfactor::prime_class(p) != intfactor::PrimeClass::Pi1)
        throw std::invalid_argument("split_prime: " + p.get_str() + " is not 1 mod 3");
    auto root = intfactor::sqrt_mod(Integer(-3), p);
    if (!root) throw std::logic_error("split_prime: -3 must be a residue mod " + p.get_str());

    // Cornacchia for u^2 + 3v^2 = 4p: descend the remainder sequence of
    // (2p, t) with t odd, t^2 = -3 (mod p), down to 2*sqrt(p).
    Integer t = *root;
    if (is_even(t)) t = p - t;
    Integer a = 2 * p, b = t;
    const Integer stop = isqrt(4 * p);
    while (b > stop) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    Integer rem = 4 * p - b * b;
    if (rem % 3 != 0 || !is_perfect_square(rem / 3))
        throw std::logic_error("split_prime: descent failed for " + p.get_str());
    EisInt z = EisInt::from_half_coords(b, isqrt(rem / 3));

    // Normalize to the unique associate-or-conjugate with 0 < v < u < 3v.
    EisInt result;
    bool found = false;
    for (const EisInt& zc : {z, z.conj()}) {
        for (const EisInt& e : units()) {
            EisInt candidate = e * zc;
            Integer u = candidate.u(), v = candidate.v();
            if (sgn(v) > 0 && v < u && u < 3 * v) {
                if (found) throw std::logic_error("split_prime: sector representative not unique");
                result = candidate;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("split_prime: no sector representative for " + p.get_str());
    return result;
}

std::vector<EisInt> norm_representations(const Integer& M) {
    if (M <= 0) throw std::invalid_argument("norm_representations: need M >= 1, got " + M.get_str());
    if (mod3(M) == 0)
        throw std::invalid_argument("norm_representations: 3 divides " + M.get_str() +
                                    "; 3 ramifies and is out of range here");

    const auto fact = intfactor::factorize(M);
    Integer q = 1;
    std::vector<std::pair<EisInt, unsigned long>> split;  // (x_p, v_p), primes ascending
    for (const auto& [p, e] : fact.factors) {
        if (intfactor::prime_class(p) == intfactor::PrimeClass::Pi2) {
            if (e % 2 != 0) return {};
            q *= pow_ui(p, e / 2);
        } else {
            split.emplace_back(split_prime(p), e);
        }
    }

    // Odometer over exponent vectors, smallest prime fastest.
    std::vector<unsigned long> j(split.size(), 0);
    std::vector<EisInt> out;
    for (;;) {
        EisInt z(q, 0);
        for (std::size_t i = 0; i < split.size(); ++i) {
            const auto& [xp, e] = split[i];
            z *= pow(xp, j[i]);
            z *= pow(xp.conj(), e - j[i]);
        }
        out.push_back(canonical_associate(z));
        std::size_t i = 0;
        while (i < split.size() && j[i] == split[i].second) j[i++] = 0;
        if (i == split.size()) break;
        ++j[i];
    }

    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1])
            throw std::logic_error("norm_representations: duplicate class for M=" + M.get_str());
    return out;
}

}  // namespace corecrank::eisenstein
