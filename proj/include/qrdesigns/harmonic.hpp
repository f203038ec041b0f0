#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "jacobi.hpp"
#include "linear_code.hpp"
#include "proj_geom.hpp"
#include "rational.hpp"

namespace qrd {

// Degree-3 harmonic function constant on the two PSL_2(p) triple orbits,
// described by its value on each orbit.
struct HarmonicFunction3 {
    int p;
    Rat f1;  // value on the orbit of {0,1,inf}
    Rat f2;  // value on the other orbit

    Rat value(int orbit_label) const { return orbit_label == 1 ? f1 : f2; }
};

// Per-pair incidence count: number of orbit-i triples containing a fixed
// pair. Constant over pairs by 2-transitivity; k_i = 3|GT_i| / C(p+1,2).
inline std::array<Rat, 2> pair_incidence_counts(const OrbitPartition& orbits) {
    long long pairs = binomial(orbits.p + 1, 2);
    return {Rat(3 * orbits.sizes[0], pairs), Rat(3 * orbits.sizes[1], pairs)};
}

// The unique (up to scalar) G-invariant degree-3 harmonic function: the
// kernel condition f1*k1 + f2*k2 = 0 fixes the value pair proportional to
// (k2, -k1), normalized to the smallest integral pair with f1 > 0.
inline HarmonicFunction3 invariant_harmonic3(const OrbitPartition& orbits) {
    auto k = pair_incidence_counts(orbits);
    if (!k[0].is_integer() || !k[1].is_integer())
        throw std::logic_error("invariant_harmonic3: non-integral pair incidence counts");
    long long k1 = k[0].num, k2 = k[1].num;
    long long g = std::gcd(k1, k2);
    HarmonicFunction3 f{orbits.p, Rat(k2 / g), Rat(-k1 / g)};

    // gamma-kernel check: the image on every pair must vanish
    int p = orbits.p;
    for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            Rat acc;
            for (int x = 0; x <= p; ++x) {
                if (x == i || x == j) continue;
                acc = acc + f.value(orbits.label_of({i, j, x}));
            }
            if (!acc.is_zero()) throw std::logic_error("invariant_harmonic3: gamma image does not vanish");
        }
    return f;
}

// ftilde(block) = sum of f over all 3-subsets of the block.
inline Rat ftilde(const HarmonicFunction3& f, const OrbitPartition& orbits,
                  const std::vector<int>& block) {
    Rat acc;
    std::size_t m = block.size();
    for (std::size_t a = 0; a + 2 < m; ++a)
        for (std::size_t b = a + 1; b + 1 < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                acc = acc + f.value(orbits.label_of({block[a], block[b], block[c]}));
    return acc;
}

// Harmonic weight enumerator w_{C,f}(x,y); coeff[ell] multiplies x^(n-ell) y^ell.
struct HarmonicEnumerator {
    int n = 0;
    std::vector<Rat> coeff;

    bool is_zero() const {
        for (const Rat& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const HarmonicEnumerator& o) const { return n == o.n && coeff == o.coeff; }

    HarmonicEnumerator operator+(const HarmonicEnumerator& o) const {
        if (n != o.n) throw std::invalid_argument("HarmonicEnumerator: length mismatch");
        HarmonicEnumerator s{n, coeff};
        for (int i = 0; i <= n; ++i) s.coeff[i] = s.coeff[i] + o.coeff[i];
        return s;
    }
};

// Assembled from the two orbit-representative Jacobi polynomials: since
// covering counts are constant on Aut(C)-orbits of triples,
//   coeff(ell) = f1 |GT1| cc(J_{C,T1}, ell) + f2 |GT2| cc(J_{C,T2}, ell).
inline HarmonicEnumerator harmonic_weight_enumerator(const LinearCode& C, const HarmonicFunction3& f,
                                                     const OrbitPartition& orbits, int threads = 1,
                                                     int budget = default_enum_budget()) {
    if (C.length() != orbits.p + 1)
        throw std::invalid_argument("harmonic_weight_enumerator: code length does not match point set");
    HarmonicEnumerator w{C.length(), std::vector<Rat>(C.length() + 1)};
    for (int rep = 0; rep < 2; ++rep) {
        const auto& T = orbits.representatives[rep];
        JacobiTable J = jacobi(C, {T[0], T[1], T[2]}, threads, budget);
        Rat scale = (rep == 0 ? f.f1 : f.f2) * Rat(orbits.sizes[rep]);
        for (int ell = 3; ell <= C.length(); ++ell)
            w.coeff[ell] = w.coeff[ell] + scale * Rat(J.covering_count(ell));
    }
    return w;
}

}  // namespace qrd
