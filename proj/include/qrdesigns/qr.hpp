#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gf2ext.hpp"
#include "gf2poly.hpp"
#include "numtheory.hpp"

namespace qrd {

// Generator polynomial of the binary quadratic residue code of length p:
// the monic degree-(p-1)/2 divisor of x^p - 1 whose roots are alpha^r for
// r a nonzero square mod p, with alpha a fixed p-th root of unity in GF(2^m).
inline Gf2Poly qr_generator_polynomial(int p) {
    if (!is_prime(p)) throw std::invalid_argument("qr_generator_polynomial: p must be prime");
    int pm8 = p % 8;
    if (pm8 != 1 && pm8 != 7)
        throw std::invalid_argument("qr_generator_polynomial: p must be +-1 mod 8");

    int m = mult_order(2, p);
    Gf2ExtField F(m);
    Gf2ExtField::Elem beta = F.generator();
    Gf2ExtField::Elem alpha = F.pow(beta, F.order() / p);
    if (F.pow(alpha, p) != 1 || alpha == 1)
        throw std::logic_error("qr_generator_polynomial: alpha is not a primitive p-th root of unity");

    // g(x) = prod over residues r of (x + alpha^r), coefficients over GF(2^m)
    std::vector<Gf2ExtField::Elem> g{1};
    for (int r : quadratic_residues(p)) {
        Gf2ExtField::Elem ar = F.pow(alpha, r);
        std::vector<Gf2ExtField::Elem> next(g.size() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] ^= g[i];
            next[i] ^= F.mul(g[i], ar);
        }
        g = std::move(next);
    }

    Gf2Poly out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > 1) throw std::logic_error("qr_generator_polynomial: coefficient outside GF(2)");
        if (g[i]) out.set_coeff(static_cast<int>(i), true);
    }
    if (out.deg() != (p - 1) / 2 || !out.divides(Gf2Poly::xn_plus_one(p)))
        throw std::logic_error("qr_generator_polynomial: construction check failed");

    // Replacing alpha by alpha^c for a non-residue c swaps the residue-rooted
    // factor with its complementary twin; both are QR generator polynomials.
    // Pin the choice to the lexicographically smaller ascending coefficient
    // string so the construction is independent of the field generator found.
    Gf2Poly twin = (Gf2Poly::xn_plus_one(p) / out) / Gf2Poly::from_string("11");
    if (twin.to_string() < out.to_string()) return twin;
    return out;
}

}  // namespace qrd
