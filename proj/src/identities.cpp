#include "corecrank/identities.hpp"

#include <stdexcept>

#include "corecrank/intfactor.hpp"

namespace corecrank::identities {

using intfactor::PrimeClass;

bool hs_valid_k(const Integer& k) {
    if (k <= 0 || mod3(k) == 0) return false;
    for (const auto& [p, e] : intfactor::factorize(k).factors)
        if (intfactor::prime_class(p) == PrimeClass::Pi2 && e % 2 != 0) return false;
    return true;
}

Integer hs_target(const Integer& k, const Integer& n) { return k * n + (k - 1) / 3; }

Integer hs_count(const Integer& k, const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("hs_count: need n >= 0");
    if (k <= 0 || mod3(k) == 0)
        throw std::invalid_argument("hs_count: k=" + k.get_str() + " must be positive and prime to 3");
    const auto kfact = intfactor::factorize(k);
    for (const auto& [p, e] : kfact.factors)
        if (intfactor::prime_class(p) == PrimeClass::Pi2 && e % 2 != 0)
            throw std::invalid_argument("hs_count: the 2-mod-3 part of k=" + k.get_str() +
                                        " is not a square");

    const Integer base = cores::a3(n);
    if (base == 0) return 0;
    Integer num = base, den = 1;
    const Integer m = 3 * n + 1;
    for (const auto& [p, e] : kfact.factors) {
        if (intfactor::prime_class(p) != PrimeClass::Pi1) continue;
        const unsigned long vm = intfactor::valuation(m, p);
        num *= (e + vm + 1);
        den *= (vm + 1);
    }
    if (num % den != 0) throw std::logic_error("hs_count: non-integral valuation product");
    return num / den;
}

cores::CharVector alpha(const cores::CharVector& c, const cores::CharVector& cp) {
    const Integer &x = c.x, &y = c.y, &xp = cp.x, &yp = cp.y;
    return cores::CharVector{x + xp + 3 * x * xp + 3 * x * yp + 3 * y * xp,
                             y + yp - 3 * x * xp + 3 * y * yp};
}

Integer han_i(const Integer& n, unsigned long m) {
    if (sgn(n) < 0) throw std::invalid_argument("han_i: need n >= 0");
    if (m < 1) throw std::invalid_argument("han_i: need m >= 1");
    return pow_ui(Integer(4), m) * n + (10 * pow_ui(Integer(4), m - 1) - 1) / 3;
}

HanCounterexample han_ii_counterexample() {
    const Integer k = 6, m = 1;
    const Integer N = (6 * k - 1) * m + 4 * k - 1;
    if (N != 58) throw std::logic_error("han_ii_counterexample: wrong N");
    if (mod_floor(m, 6 * k - 1) == mod_floor(2 * k - 1, 6 * k - 1))
        throw std::logic_error("han_ii_counterexample: congruence guard violated");
    const Integer count = cores::a3(N);
    if (count != 2) throw std::logic_error("han_ii_counterexample: a3(58) != 2");
    return HanCounterexample{N, count, m, k};
}

HanIIResult han_ii_fixed(const Integer& n, const Integer& m, const Integer& k) {
    if (sgn(n) < 0 || m < 1 || k < 1)
        throw std::invalid_argument("han_ii_fixed: need n >= 0, m >= 1, k >= 1");
    const Integer r = 6 * k - 1;
    if (mod_floor(m, r) == mod_floor(2 * k - 1, r))
        throw std::invalid_argument("han_ii_fixed: m = 2k-1 (mod 6k-1) is excluded");

    // The criterion certifies vanishing when every prime p = 2 (mod 3)
    // divides 6k-1 to an odd power and m avoids 2k-1 mod each such p.
    // Avoiding 2k-1 only mod 6k-1 is weaker and does not suffice:
    // n=0, m=1, k=6 passes it, yet N=58 has two 3-cores.
    bool hypothesis = true;
    for (const auto& [p, e] : intfactor::factorize(r).factors) {
        if (intfactor::prime_class(p) != PrimeClass::Pi2) continue;
        if (e % 2 == 0 || mod_floor(m, p) == mod_floor(2 * k - 1, p)) hypothesis = false;
    }

    HanIIResult result;
    result.N = r * r * n + r * m + 4 * k - 1;
    result.hypothesis_holds = hypothesis;
    result.a3_value = cores::a3(result.N);
    result.verdict = hypothesis && result.a3_value == 0;
    if (hypothesis && result.a3_value != 0)
        throw std::logic_error("han_ii_fixed: certified N has a 3-core, N=" + result.N.get_str());
    return result;
}

HanWitness han_iii_decompose(const Integer& N) {
    if (sgn(N) < 0) throw std::invalid_argument("han_iii_decompose: need N >= 0");
    if (cores::a3(N) != 0)
        throw std::invalid_argument("han_iii_decompose: a3(" + N.get_str() + ") is nonzero");

    const Integer M = 3 * N + 1;
    Integer p = 0;
    unsigned long v = 0;
    for (const auto& [q, e] : intfactor::factorize(M).factors) {
        if (q != 2 && intfactor::prime_class(q) == PrimeClass::Pi2 && e % 2 != 0) {
            p = q;
            v = e;
            break;  // factors ascend, so this is the smallest qualifying odd prime
        }
    }
    if (p == 0) throw std::logic_error("han_iii_decompose: no odd prime 2 mod 3 with odd valuation");

    const Integer pk = pow_ui(p, v);
    if (mod_floor(pk + 1, 6) != 0)
        throw std::logic_error("han_iii_decompose: p^v is not -1 mod 6");
    const Integer k = (pk + 1) / 6;
    const Integer q = M / pk;

    HanWitness w;
    w.p = p;
    if (q == 2) {
        w.form = 1;
        w.n = k - 1;
        w.m = 1;
        if (han_i(w.n, 1) != N) throw std::logic_error("han_iii_decompose: form-1 reconstruction failed");
    } else {
        if (mod3(q) != 2) throw std::logic_error("han_iii_decompose: cofactor residue is off");
        w.form = 2;
        w.k = k;
        w.m = (q - 2) / 3;
        w.n = 0;
        if (w.m < 1) throw std::logic_error("han_iii_decompose: form-2 needs m >= 1");
        if (mod_floor(w.m, p) == mod_floor(2 * k - 1, p))
            throw std::logic_error("han_iii_decompose: excluded congruence class reached");
        if ((6 * k - 1) * w.m + 4 * k - 1 != N)
            throw std::logic_error("han_iii_decompose: form-2 reconstruction failed");
    }
    return w;
}

}  // namespace corecrank::identities
