#pragma once

// Reference data for the length-42 extended quadratic residue code: the two
// orbit-representative Jacobi coefficient tables, the closed form of their
// difference, and the closed form of the degree-3 harmonic weight enumerator.

#include <array>
#include <vector>

#include "jacobi.hpp"
#include "numtheory.hpp"
#include "rational.hpp"

namespace qrd::ref42 {

struct Term {
    int m1;     // z exponent
    int n1;     // y exponent
    long long c;
};

// J for T in the orbit of {0, 1, inf}
inline const std::vector<Term>& jacobi_T1_terms() {
    static const std::vector<Term> terms = {
        {0, 0, 1},      {0, 10, 744},   {0, 12, 3756},  {0, 14, 14211}, {0, 16, 35703},
        {0, 18, 60172}, {0, 20, 65436}, {0, 22, 48330}, {0, 24, 24318}, {0, 26, 7668},
        {0, 28, 1584},  {0, 30, 203},   {0, 32, 18},
        {1, 9, 744},    {1, 11, 4827},  {1, 13, 22977}, {1, 15, 71316}, {1, 17, 147924},
        {1, 19, 195930},{1, 21, 177630},{1, 23, 109116},{1, 25, 42876}, {1, 27, 11043},
        {1, 29, 1833},  {1, 31, 216},
        {2, 8, 216},    {2, 10, 1833},  {2, 12, 11043}, {2, 14, 42876}, {2, 16, 109116},
        {2, 18, 177630},{2, 20, 195930},{2, 22, 147924},{2, 24, 71316}, {2, 26, 22977},
        {2, 28, 4827},  {2, 30, 744},
        {3, 7, 18},     {3, 9, 203},    {3, 11, 1584},  {3, 13, 7668},  {3, 15, 24318},
        {3, 17, 48330}, {3, 19, 65436}, {3, 21, 60172}, {3, 23, 35703}, {3, 25, 14211},
        {3, 27, 3756},  {3, 29, 744},   {3, 39, 1},
    };
    return terms;
}

// J for T in the orbit of {0, 6, inf}
inline const std::vector<Term>& jacobi_T2_terms() {
    static const std::vector<Term> terms = {
        {0, 0, 1},      {0, 10, 744},   {0, 12, 3755},  {0, 14, 14220}, {0, 16, 35667},
        {0, 18, 60256}, {0, 20, 65310}, {0, 22, 48456}, {0, 24, 24234}, {0, 26, 7704},
        {0, 28, 1575},  {0, 30, 204},   {0, 32, 18},
        {1, 9, 744},    {1, 11, 4830},  {1, 13, 22950}, {1, 15, 71424}, {1, 17, 147672},
        {1, 19, 196308},{1, 21, 177252},{1, 23, 109368},{1, 25, 42768}, {1, 27, 11070},
        {1, 29, 1830},  {1, 31, 216},
        {2, 8, 216},    {2, 10, 1830},  {2, 12, 11070}, {2, 14, 42768}, {2, 16, 109368},
        {2, 18, 177252},{2, 20, 196308},{2, 22, 147672},{2, 24, 71424}, {2, 26, 22950},
        {2, 28, 4830},  {2, 30, 744},
        {3, 7, 18},     {3, 9, 204},    {3, 11, 1575},  {3, 13, 7704},  {3, 15, 24234},
        {3, 17, 48456}, {3, 19, 65310}, {3, 21, 60256}, {3, 23, 35667}, {3, 25, 14220},
        {3, 27, 3755},  {3, 29, 744},   {3, 39, 1},
    };
    return terms;
}

inline JacobiTable expected_jacobi(const std::vector<Term>& terms, std::vector<int> T) {
    JacobiTable J(42, std::move(T));
    for (const Term& t : terms) J.at(t.m1, t.n1) = t.c;
    return J;
}

// Symbolic expansion of x^9 y^9 (x^2 - y^2)^9 (w y - x z)^3 as a signed
// coefficient table in the (m1, n1) indexing of a length-42, |T| = 3 Jacobi
// polynomial: the w^(3-i) z^i term carries x^(27-2j+i) y^(12+2j-i) with
// coefficient C(9,j) C(3,i) (-1)^(i+j).
inline SignedJacobiTable difference_closed_form() {
    SignedJacobiTable d;
    d.n = 42;
    d.t = 3;
    d.coeff.assign(4 * 40, 0);
    for (int j = 0; j <= 9; ++j)
        for (int i = 0; i <= 3; ++i) {
            long long c = binomial(9, j) * binomial(3, i);
            if ((i + j) & 1) c = -c;
            d.at(i, 12 + 2 * j - i) += c;
        }
    return d;
}

// Coefficients of -5740 x^12 y^12 (x^2 - y^2)^9: index ell multiplies
// x^(42-ell) y^ell.
inline std::vector<Rat> harmonic_closed_form() {
    std::vector<Rat> w(43);
    for (int j = 0; j <= 9; ++j) {
        long long c = -5740 * binomial(9, j);
        if (j & 1) c = -c;
        w[12 + 2 * j] = Rat(c);
    }
    return w;
}

}  // namespace qrd::ref42
