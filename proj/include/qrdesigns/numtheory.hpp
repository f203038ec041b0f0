#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace qrd {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long mod_pow(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline long long mod_inv(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("mod_inv: zero");
    return mod_pow(a, p - 2, p);
}

// Multiplicative order of a mod m (m prime or not; a coprime to m).
inline int mult_order(long long a, long long m) {
    long long x = a % m;
    if (x < 0) x += m;
    long long cur = x;
    for (int k = 1; k < m; ++k) {
        if (cur == 1) return k;
        cur = cur * x % m;
    }
    throw std::invalid_argument("mult_order: not coprime");
}

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> f;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

// The (p-1)/2 nonzero squares mod p.
inline std::set<int> quadratic_residues(int p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("quadratic_residues: p must be an odd prime");
    std::set<int> qr;
    for (int x = 1; x < p; ++x) qr.insert(static_cast<int>(static_cast<long long>(x) * x % p));
    return qr;
}

inline bool is_quadratic_residue(long long a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("is_quadratic_residue: zero");
    return mod_pow(a, (p - 1) / 2, p) == 1;
}

// Smallest positive primitive root of F_p.
inline int primitive_root(int p) {
    auto fac = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : fac)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

struct CyclotomicCoset {
    int representative;
    std::vector<int> members;  // sorted, closed under doubling mod p
};

// Partition of {1,...,p-1} into orbits of multiplication by 2.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(int p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("cyclotomic_cosets: p must be an odd prime");
    std::vector<CyclotomicCoset> out;
    std::vector<bool> seen(p, false);
    for (int r = 1; r < p; ++r) {
        if (seen[r]) continue;
        CyclotomicCoset c;
        c.representative = r;
        long long x = r;
        do {
            seen[x] = true;
            c.members.push_back(static_cast<int>(x));
            x = x * 2 % p;
        } while (x != r);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace qrd
