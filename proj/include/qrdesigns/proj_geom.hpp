#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "linear_code.hpp"
#include "numtheory.hpp"

namespace qrd {

// Points of PG(1,p) are 0..p-1 plus infinity, encoded as the index p.
inline int infinity_point(int p) { return p; }

// Fractional-linear map x -> (ax+b)/(cx+d) mod p, ad - bc != 0.
struct MobiusMap {
    int a, b, c, d, p;

    MobiusMap(int a_, int b_, int c_, int d_, int p_) : a(a_), b(b_), c(c_), d(d_), p(p_) {
        auto m = [&](int v) { return ((v % p) + p) % p; };
        a = m(a);
        b = m(b);
        c = m(c);
        d = m(d);
        if ((static_cast<long long>(a) * d - static_cast<long long>(b) * c) % p == 0)
            throw std::invalid_argument("MobiusMap: singular");
        canonicalize();
    }

    int apply(int x) const {
        if (x == p) {  // x = infinity -> a/c
            if (c == 0) return p;
            return static_cast<int>(static_cast<long long>(a) * mod_inv(c, p) % p);
        }
        long long numv = (static_cast<long long>(a) * x + b) % p;
        long long denv = (static_cast<long long>(c) * x + d) % p;
        if (denv == 0) return p;
        return static_cast<int>(numv * mod_inv(denv, p) % p);
    }

    std::vector<int> as_permutation() const {
        std::vector<int> perm(p + 1);
        for (int x = 0; x <= p; ++x) perm[x] = apply(x);
        return perm;
    }

private:
    void canonicalize() {  // scale so the first nonzero of (a,b,c,d) is 1
        int first = a ? a : b ? b : c ? c : d;
        long long inv = mod_inv(first, p);
        a = static_cast<int>(a * inv % p);
        b = static_cast<int>(b * inv % p);
        c = static_cast<int>(c * inv % p);
        d = static_cast<int>(d * inv % p);
    }
};

// Permutations of {0..p} generating the PSL_2(p) action on PG(1,p):
// x -> x+1, x -> s^2 x (s the smallest primitive root), x -> -1/x.
inline std::vector<std::vector<int>> psl2_generators(int p) {
    if (p % 8 != 1) throw std::invalid_argument("psl2_generators: p must be 1 mod 8");
    int s = primitive_root(p);
    int s2 = static_cast<int>(static_cast<long long>(s) * s % p);
    return {
        MobiusMap(1, 1, 0, 1, p).as_permutation(),
        MobiusMap(s2, 0, 0, 1, p).as_permutation(),
        MobiusMap(0, -1, 1, 0, p).as_permutation(),
    };
}

// Order of the group generated by permutations, by breadth-first closure.
inline std::size_t permutation_group_order(const std::vector<std::vector<int>>& gens) {
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> work;
    std::vector<int> id(gens.at(0).size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    seen.insert(id);
    work.push(id);
    while (!work.empty()) {
        std::vector<int> g = work.front();
        work.pop();
        for (const auto& h : gens) {
            std::vector<int> gh(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) gh[i] = h[g[i]];
            if (seen.insert(gh).second) work.push(gh);
        }
    }
    return seen.size();
}

// Colex rank of a sorted 3-subset {i<j<k} of {0..n-1}: C(k,3)+C(j,2)+i.
inline long long triple_colex_rank(int i, int j, int k) {
    return binomial(k, 3) + binomial(j, 2) + i;
}

// Orbit label of a 3-subset of PG(1,p) under PSL_2(p), p = 1 mod 8.
// The map sending (0,1,inf) to (x,y,z) has determinant (y-x)(z-y)(z-x);
// the triple lies in the orbit of {0,1,inf} iff that product is a square,
// dropping any factor involving infinity. Since -1 is a square mod p the
// square class does not depend on the ordering of the triple.
inline int triple_orbit_label(int p, std::array<int, 3> t) {
    if (p % 8 != 1) throw std::invalid_argument("triple_orbit_label: p must be 1 mod 8");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        throw std::invalid_argument("triple_orbit_label: points not distinct");
    long long prod = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (t[i] == p || t[j] == p) continue;  // factor involving infinity is dropped
            long long d = ((t[j] - t[i]) % p + p) % p;
            prod = prod * d % p;
        }
    return is_quadratic_residue(prod, p) ? 1 : 2;
}

// Two-orbit decomposition of all 3-subsets of PG(1,p) under PSL_2(p).
struct OrbitPartition {
    int p;
    std::array<std::array<int, 3>, 2> representatives;  // {0,1,inf}, {0,a,inf}
    std::array<long long, 2> sizes;
    std::vector<std::uint8_t> labels;  // indexed by colex rank, values 1 or 2

    int label_of(std::array<int, 3> t) const {
        std::sort(t.begin(), t.end());
        return labels[triple_colex_rank(t[0], t[1], t[2])];
    }
};

namespace detail {

// Checks the label formula against explicit orbit closure under the group
// generators: every generator must preserve every triple's label, and the
// orbit of each representative must be exactly its label class.
inline void orbit_self_check(const OrbitPartition& part) {
    int p = part.p;
    auto gens = psl2_generators(p);
    for (const auto& g : gens)
        for (int k = 2; k <= p; ++k)
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i) {
                    std::array<int, 3> im{g[i], g[j], g[k]};
                    if (part.label_of(im) != part.labels[triple_colex_rank(i, j, k)])
                        throw std::logic_error("orbit_partition: label not generator-invariant");
                }
    for (int rep = 0; rep < 2; ++rep) {
        std::set<long long> orbit;
        std::queue<std::array<int, 3>> work;
        std::array<int, 3> t = part.representatives[rep];
        std::sort(t.begin(), t.end());
        orbit.insert(triple_colex_rank(t[0], t[1], t[2]));
        work.push(t);
        while (!work.empty()) {
            std::array<int, 3> cur = work.front();
            work.pop();
            for (const auto& g : gens) {
                std::array<int, 3> im{g[cur[0]], g[cur[1]], g[cur[2]]};
                std::sort(im.begin(), im.end());
                if (orbit.insert(triple_colex_rank(im[0], im[1], im[2])).second) work.push(im);
            }
        }
        if (static_cast<long long>(orbit.size()) != part.sizes[rep])
            throw std::logic_error("orbit_partition: closure size disagrees with label formula");
    }
}

}  // namespace detail

inline OrbitPartition orbit_partition(int p, bool self_check = true) {
    if (p % 8 != 1) throw std::invalid_argument("orbit_partition: p must be 1 mod 8");
    OrbitPartition part;
    part.p = p;
    int a = primitive_root(p);
    part.representatives = {{{0, 1, infinity_point(p)}, {0, a, infinity_point(p)}}};
    part.sizes = {0, 0};
    part.labels.assign(binomial(p + 1, 3), 0);
    for (int k = 2; k <= p; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                int lab = triple_orbit_label(p, {i, j, k});
                part.labels[triple_colex_rank(i, j, k)] = static_cast<std::uint8_t>(lab);
                ++part.sizes[lab - 1];
            }
    if (part.label_of(part.representatives[0]) != 1 || part.label_of(part.representatives[1]) != 2)
        throw std::logic_error("orbit_partition: representative labels wrong");
    if (self_check) detail::orbit_self_check(part);
    return part;
}

// Coordinate permutation sigma with C^sigma = C^perp for the extended QR
// code; candidates are x -> c x and x -> c / x over non-residues c.
inline std::vector<int> duality_permutation(int p, const LinearCode& code) {
    if (p % 8 != 1) throw std::invalid_argument("duality_permutation: p must be 1 mod 8");
    LinearCode d = code.dual();
    std::vector<MobiusMap> candidates;
    for (int c = 2; c < p; ++c) {
        if (is_quadratic_residue(c, p)) continue;
        candidates.emplace_back(c, 0, 0, 1, p);  // x -> c x
        candidates.emplace_back(0, c, 1, 0, p);  // x -> c / x
    }
    for (const auto& m : candidates) {
        std::vector<int> sigma = m.as_permutation();
        if (code.permute(sigma) == d) return sigma;
    }
    throw std::logic_error("duality_permutation: no candidate maps the code onto its dual");
}

}  // namespace qrd
