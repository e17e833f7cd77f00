#include "corecrank/cores.hpp"

#include <algorithm>
#include <stdexcept>

#include "corecrank/intfactor.hpp"

namespace corecrank::cores {

namespace {

void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
}

void conjugate_into(const Partition& p, std::vector<long>& conj) {
    conj.assign(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (long part : p)
        for (long j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
}

template <typename Pred>
bool no_hook_matches(const Partition& p, std::vector<long>& conj, Pred bad) {
    conjugate_into(p, conj);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (long j = 0; j < p[i]; ++j) {
            long hook = p[i] - j + conj[static_cast<std::size_t>(j)] -
                             static_cast<long>(i) - 1;
            if (bad(hook)) return false;
        }
    }
    return true;
}

}  // namespace

Integer size_of(const CharVector& c) {
    return 3 * c.x * c.x + 3 * c.x * c.y + 3 * c.y * c.y + c.x + 2 * c.y;
}

geometry::Solution theta(const CharVector& c) {
    return geometry::Solution(6 * c.x + 3 * c.y + 1, 3 * c.y + 1, 12 * size_of(c) + 4);
}

CharVector theta_inv(const geometry::Solution& s) {
    if (mod3(s.x) != 1 || mod3(s.y) != 1)
        throw std::invalid_argument("theta_inv: (" + s.x.get_str() + "," + s.y.get_str() +
                                    ") does not have residues (1,1) mod 3");
    if (!same_parity(s.x, s.y))
        throw std::invalid_argument("theta_inv: coordinates have mixed parity");
    return CharVector{(s.x - s.y) / 6, (s.y - 1) / 3};
}

std::vector<CharVector> enumerate_charvecs(const Integer& n) {
    std::vector<CharVector> out;
    for (const auto& orbit : geometry::orbits(n)) out.push_back(theta_inv(canonical_rep(orbit)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CharVector> enumerate_charvecs_bruteforce(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("enumerate_charvecs_bruteforce: need n >= 0");
    std::vector<CharVector> out;
    const Integer bound = isqrt(n) + 2;
    for (Integer x = -bound; x <= bound; ++x)
        for (Integer y = -bound; y <= bound; ++y)
            if (size_of(CharVector{x, y}) == n) out.push_back(CharVector{x, y});
    std::sort(out.begin(), out.end());
    return out;
}

FrobeniusSymbol charvec_to_frobenius(const CharVector& c) {
    const Integer triple[3] = {c.c0(), c.x, c.y};
    FrobeniusSymbol f;
    for (int r = 0; r < 3; ++r) {
        const long count = to_int64(abs(triple[r]));
        if (sgn(triple[r]) > 0)
            for (long q = 0; q < count; ++q) f.arms.push_back(3 * q + r);
        else
            for (long q = 0; q < count; ++q) f.legs.push_back(3 * q + (2 - r));
    }
    std::sort(f.arms.rbegin(), f.arms.rend());
    std::sort(f.legs.rbegin(), f.legs.rend());
    if (f.arms.size() != f.legs.size())
        throw std::logic_error("charvec_to_frobenius: arm/leg counts differ");
    return f;
}

Partition frobenius_to_partition(const FrobeniusSymbol& f) {
    const std::size_t d = f.arms.size();
    if (f.legs.size() != d)
        throw std::invalid_argument("frobenius_to_partition: arm/leg counts differ");
    for (const auto* side : {&f.legs, &f.arms}) {
        for (std::size_t i = 0; i < side->size(); ++i) {
            if ((*side)[i] < 0)
                throw std::invalid_argument("frobenius_to_partition: negative entry");
            if (i > 0 && (*side)[i] >= (*side)[i - 1])
                throw std::invalid_argument("frobenius_to_partition: entries must strictly decrease");
        }
    }

    Partition p;
    for (std::size_t i = 0; i < d; ++i) p.push_back(f.arms[i] + static_cast<long>(i) + 1);

    // Row i > d of the partition counts the legs whose column reaches it:
    // leg_j + j boxes of column 1 belong to the hook of diagonal box j.
    std::vector<long> depth(d);
    for (std::size_t j = 0; j < d; ++j) depth[j] = f.legs[j] + static_cast<long>(j) + 1;
    std::size_t ptr = d;
    for (long i = static_cast<long>(d) + 1;; ++i) {
        while (ptr > 0 && depth[ptr - 1] < i) --ptr;
        if (ptr == 0) break;
        p.push_back(static_cast<long>(ptr));
    }

    long total = 0;
    for (long part : p) total += part;
    long expected = static_cast<long>(d);
    for (std::size_t i = 0; i < d; ++i) expected += f.arms[i] + f.legs[i];
    if (total != expected)
        throw std::logic_error("frobenius_to_partition: size mismatch after reconstruction");
    return p;
}

Partition conjugate(const Partition& p) {
    validate_partition(p);
    std::vector<long> conj;
    conjugate_into(p, conj);
    return conj;
}

std::vector<long> hooklengths(const Partition& p) {
    validate_partition(p);
    std::vector<long> conj, hooks;
    conjugate_into(p, conj);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (long j = 0; j < p[i]; ++j)
            hooks.push_back(p[i] - j + conj[static_cast<std::size_t>(j)] -
                            static_cast<long>(i) - 1);
    return hooks;
}

bool is_3core(const Partition& p) {
    validate_partition(p);
    std::vector<long> conj;
    return no_hook_matches(p, conj, [](long h) { return h == 3; });
}

bool is_3core_div3(const Partition& p) {
    validate_partition(p);
    std::vector<long> conj;
    return no_hook_matches(p, conj, [](long h) { return h % 3 == 0; });
}

std::vector<Partition> enumerate_3cores_bruteforce(const Integer& n, long bound) {
    if (sgn(n) < 0) throw std::invalid_argument("enumerate_3cores_bruteforce: need n >= 0");
    if (n > bound)
        throw std::invalid_argument("enumerate_3cores_bruteforce: n=" + n.get_str() +
                                    " exceeds the bound " + std::to_string(bound));
    const long size = to_int64(n);
    std::vector<Partition> out;
    Partition cur;
    std::vector<long> scratch;
    auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
        if (remaining == 0) {
            if (no_hook_matches(cur, scratch, [](long h) { return h == 3; }))
                out.push_back(cur);
            return;
        }
        for (long part = std::min(maxpart, remaining); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, size, size);
    std::sort(out.begin(), out.end());
    return out;
}

Integer a3(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("a3: need n >= 0");
    Integer count = 1;
    for (const auto& [p, e] : intfactor::factorize(3 * n + 1).factors) {
        if (intfactor::prime_class(p) == intfactor::PrimeClass::Pi2) {
            if (e % 2 != 0) return 0;
        } else {
            count *= (e + 1);
        }
    }
    return count;
}

CharVector conj_charvec(const CharVector& c) { return CharVector{-c.x, c.x + c.y}; }

int asc3(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("asc3: need n >= 0");
    return is_perfect_square(3 * n + 1) ? 1 : 0;
}

}  // namespace corecrank::cores
