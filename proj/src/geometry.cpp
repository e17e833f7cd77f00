#include "corecrank/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "corecrank/eisenstein.hpp"

namespace corecrank::geometry {

Solution::Solution(Integer x_, Integer y_, Integer k_)
    : x(std::move(x_)), y(std::move(y_)), k(std::move(k_)) {
    if (x * x + 3 * y * y != k)
        throw std::invalid_argument("Solution: (" + x.get_str() + "," + y.get_str() +
                                    ") does not satisfy x^2+3y^2=" + k.get_str());
}

const std::array<CrankValue, 6>& residue_cycle() {
    static const std::array<CrankValue, 6> cycle = {
        CrankValue{1, 1}, CrankValue{2, 1}, CrankValue{1, 0},
        CrankValue{2, 2}, CrankValue{1, 2}, CrankValue{2, 0}};
    return cycle;
}

std::vector<Solution> solutions_bruteforce(const Integer& k) {
    std::vector<Solution> out;
    if (sgn(k) < 0) return out;
    Integer ybound = isqrt(k / 3);
    for (Integer y = -ybound; y <= ybound; ++y) {
        Integer rest = k - 3 * y * y;
        if (!is_perfect_square(rest)) continue;
        Integer x = isqrt(rest);
        out.emplace_back(x, y, k);
        if (sgn(x) != 0) out.emplace_back(-x, y, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_parity(const Solution& s, const char* what) {
    if (!same_parity(s.x, s.y))
        throw std::invalid_argument(std::string(what) + ": coordinates (" + s.x.get_str() +
                                    "," + s.y.get_str() + ") have mixed parity");
}

}  // namespace

Solution apply_R(const Solution& s) {
    check_parity(s, "apply_R");
    return Solution((s.x - 3 * s.y) / 2, (s.x + s.y) / 2, s.k);
}

Solution apply_conj(const Solution& s) {
    check_parity(s, "apply_conj");
    return Solution((-s.x + 3 * s.y) / 2, (s.x + s.y) / 2, s.k);
}

CrankValue crank(const Solution& s) {
    return CrankValue{mod3(2 * s.x), mod3(2 * s.x + 2 * s.y)};
}

std::vector<Solution> solutions_via_eisenstein(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("solutions_via_eisenstein: need n >= 0");
    const Integer k = 12 * n + 4;
    std::vector<Solution> out;
    for (const auto& z : eisenstein::norm_representations(3 * n + 1)) {
        Solution s(z.u(), z.v(), k);
        for (int i = 0; i < 6; ++i) {
            out.push_back(s);
            s = apply_R(s);
        }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1])
            throw std::logic_error("solutions_via_eisenstein: unit classes overlap for n=" +
                                   n.get_str());
    return out;
}

std::vector<Orbit> orbits(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("orbits: need n >= 0");
    const std::vector<Solution> all = solutions_bruteforce(12 * n + 4);

    std::set<std::pair<Integer, Integer>> remaining;
    for (const auto& s : all) remaining.emplace(s.x, s.y);

    std::vector<Orbit> out;
    for (const auto& rep : all) {  // lexicographic, so orbits come out ordered
        if (mod3(rep.x) != 1 || mod3(rep.y) != 1) continue;
        Orbit orbit;
        Solution s = rep;
        for (int i = 0; i < 6; ++i) {
            if (remaining.erase({s.x, s.y}) != 1)
                throw std::logic_error("orbits: R-action is not free on U_" + Integer(12 * n + 4).get_str());
            orbit.push_back(s);
            s = apply_R(s);
        }
        if (s != rep) throw std::logic_error("orbits: R^6 is not the identity");
        out.push_back(std::move(orbit));
    }
    if (!remaining.empty())
        throw std::logic_error("orbits: solutions left without a canonical representative");
    return out;
}

Solution canonical_rep(const Orbit& orbit) {
    if (orbit.size() != 6) throw std::invalid_argument("canonical_rep: orbit must have 6 elements");
    std::set<std::pair<Integer, Integer>> seen;
    for (const auto& s : orbit) {
        if (s.k != orbit.front().k)
            throw std::invalid_argument("canonical_rep: mixed k inside one orbit");
        seen.emplace(s.x, s.y);
    }
    if (seen.size() != 6) throw std::invalid_argument("canonical_rep: repeated elements");
    for (const auto& s : orbit) {
        Solution t = apply_R(s);
        if (!seen.count({t.x, t.y}))
            throw std::invalid_argument("canonical_rep: set is not closed under R");
    }
    const Solution* found = nullptr;
    for (const auto& s : orbit) {
        if (mod3(s.x) == 1 && mod3(s.y) == 1) {
            if (found) throw std::invalid_argument("canonical_rep: residue (1,1) member not unique");
            found = &s;
        }
    }
    if (!found) throw std::invalid_argument("canonical_rep: no member with residues (1,1)");
    return *found;
}

}  // namespace corecrank::geometry
