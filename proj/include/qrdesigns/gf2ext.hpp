#pragma once

#include <cstdint>
#include <stdexcept>

#include "gf2poly.hpp"
#include "numtheory.hpp"

namespace qrd {

// GF(2^m), elements as bit patterns mod a fixed irreducible modulus.
// m <= 30 keeps products inside 64 bits.
class Gf2ExtField {
public:
    using Elem = std::uint32_t;

    explicit Gf2ExtField(int m) : m_(m) {
        if (m < 1 || m > 30) throw std::invalid_argument("Gf2ExtField: unsupported degree");
        modulus_ = find_modulus(m);
        modulus_bits_ = to_bits(modulus_);
    }

    int degree() const { return m_; }
    const Gf2Poly& modulus() const { return modulus_; }
    std::uint64_t order() const { return (std::uint64_t{1} << m_) - 1; }  // multiplicative group order

    Elem mul(Elem a, Elem b) const {
        std::uint64_t r = 0, x = a;
        while (b) {
            if (b & 1) r ^= x;
            x <<= 1;
            b >>= 1;
        }
        // reduce: degree of r is at most 2m-2
        for (int d = 2 * m_ - 2; d >= m_; --d)
            if (r >> d & 1) r ^= modulus_bits_ << (d - m_);
        return static_cast<Elem>(r);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Smallest element (by bit pattern) generating the multiplicative group.
    Elem generator() const {
        auto fac = prime_factors(static_cast<long long>(order()));
        for (Elem g = 2;; ++g) {
            bool ok = true;
            for (long long q : fac)
                if (pow(g, order() / q) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
            if (g == order()) throw std::logic_error("Gf2ExtField: no generator");
        }
    }

    // Lexicographically smallest irreducible monic polynomial of degree m,
    // ordered by the bit pattern of the low coefficients.
    static Gf2Poly find_modulus(int m) {
        for (std::uint64_t low = 1; low < (std::uint64_t{1} << m); low += 2) {
            Gf2Poly f = Gf2Poly::from_bits(low) + Gf2Poly::monomial(m);
            if (is_irreducible(f)) return f;
        }
        throw std::logic_error("Gf2ExtField: no irreducible modulus found");
    }

    static bool is_irreducible(const Gf2Poly& f) {
        int m = f.deg();
        if (m < 1) return false;
        // x^(2^m) == x mod f, and gcd(x^(2^(m/q)) - x, f) = 1 for prime q | m
        Gf2Poly x = Gf2Poly::monomial(1);
        Gf2Poly t = x;
        for (int i = 0; i < m; ++i) t = (t * t) % f;
        if (!(t == x % f)) return false;
        for (long long q : prime_factors(m)) {
            Gf2Poly s = x;
            for (int i = 0; i < m / q; ++i) s = (s * s) % f;
            if (!(gcd(s + x, f) == Gf2Poly::one())) return false;
        }
        return true;
    }

private:
    static std::uint64_t to_bits(const Gf2Poly& p) {
        std::uint64_t b = 0;
        for (int i = 0; i <= p.deg(); ++i)
            if (p.coeff(i)) b |= std::uint64_t{1} << i;
        return b;
    }

    int m_;
    Gf2Poly modulus_;
    std::uint64_t modulus_bits_;  // includes the leading x^m term
};

}  // namespace qrd
