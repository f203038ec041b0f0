#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitvec.hpp"
#include "enumerate.hpp"
#include "linear_code.hpp"

namespace qrd {

// Coefficient table of the Jacobi polynomial J_{C,T}(w,z,x,y): the term
// w^m0 z^m1 x^n0 y^n1 counts codewords with m1 ones inside T and n1 ones
// outside, m0 = t - m1 and n0 = n - t - n1 implied.
struct JacobiTable {
    int n = 0;
    int t = 0;
    std::vector<int> T;  // coordinate positions, sorted
    std::vector<long long> coeff;  // (t+1) x (n-t+1), row m1, column n1

    JacobiTable() = default;
    JacobiTable(int n_, std::vector<int> T_) : n(n_), t(static_cast<int>(T_.size())), T(std::move(T_)) {
        coeff.assign(static_cast<std::size_t>(t + 1) * (n - t + 1), 0);
    }

    long long& at(int m1, int n1) { return coeff[static_cast<std::size_t>(m1) * (n - t + 1) + n1]; }
    long long at(int m1, int n1) const {
        if (m1 < 0 || m1 > t || n1 < 0 || n1 > n - t) return 0;
        return coeff[static_cast<std::size_t>(m1) * (n - t + 1) + n1];
    }

    long long total() const {
        long long s = 0;
        for (long long c : coeff) s += c;
        return s;
    }

    // Number of weight-ell codewords whose support contains T:
    // the coefficient of z^t x^(n-ell) y^(ell-t).
    long long covering_count(int ell) const {
        if (ell < t || ell > n) throw std::out_of_range("covering_count: weight out of range");
        return at(t, ell - t);
    }

    // Specialization w=x, z=y: the ordinary weight enumerator.
    std::vector<long long> specialize_weight_enumerator() const {
        std::vector<long long> w(n + 1, 0);
        for (int m1 = 0; m1 <= t; ++m1)
            for (int n1 = 0; n1 <= n - t; ++n1) w[m1 + n1] += at(m1, n1);
        return w;
    }

    bool operator==(const JacobiTable& o) const { return n == o.n && t == o.t && coeff == o.coeff; }

    // Terms in the monomial style "744w^3x^29y^10", grouped by ascending m1
    // then ascending y-exponent.
    std::string pretty() const {
        std::ostringstream os;
        bool first = true;
        for (int m1 = 0; m1 <= t; ++m1)
            for (int n1 = 0; n1 <= n - t; ++n1) {
                long long c = at(m1, n1);
                if (c == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (c != 1) os << c;
                auto var = [&](const char* v, int e) {
                    if (e == 0) return;
                    os << v;
                    if (e > 1) os << '^' << e;
                };
                var("w", t - m1);
                var("z", m1);
                var("x", n - t - n1);
                var("y", n1);
                if (c == 1 && t - m1 == 0 && m1 == 0 && n - t - n1 == 0 && n1 == 0) os << 1;
            }
        if (first) os << 0;
        return os.str();
    }
};

// One enumeration pass: tally (ones inside T, ones outside T) per codeword.
inline JacobiTable jacobi(const LinearCode& C, const std::vector<int>& T, int threads = 1,
                          int budget = default_enum_budget()) {
    std::vector<int> Ts = T;
    std::sort(Ts.begin(), Ts.end());
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        if (Ts[i] < 0 || Ts[i] >= C.length()) throw std::invalid_argument("jacobi: label out of range");
        if (i && Ts[i] == Ts[i - 1]) throw std::invalid_argument("jacobi: repeated label");
    }
    BitVec mask(C.length());
    for (int i : Ts) mask.set(i, true);
    JacobiTable init(C.length(), Ts);
    return enumerate_parallel(
        C, threads, init,
        [&mask](JacobiTable& a, const BitVec& w, int wt) {
            int m1 = w.popcount_and(mask);
            ++a.at(m1, wt - m1);
        },
        [](JacobiTable& a, const JacobiTable& b) {
            for (std::size_t i = 0; i < a.coeff.size(); ++i) a.coeff[i] += b.coeff[i];
        },
        budget);
}

// Signed difference J1 - J2 of two same-shape tables.
struct SignedJacobiTable {
    int n = 0;
    int t = 0;
    std::vector<long long> coeff;

    long long at(int m1, int n1) const {
        if (m1 < 0 || m1 > t || n1 < 0 || n1 > n - t) return 0;
        return coeff[static_cast<std::size_t>(m1) * (n - t + 1) + n1];
    }
    long long& at(int m1, int n1) { return coeff[static_cast<std::size_t>(m1) * (n - t + 1) + n1]; }

    bool is_zero() const {
        for (long long c : coeff)
            if (c) return false;
        return true;
    }
    bool operator==(const SignedJacobiTable& o) const { return n == o.n && t == o.t && coeff == o.coeff; }
};

inline SignedJacobiTable jacobi_difference(const JacobiTable& a, const JacobiTable& b) {
    if (a.n != b.n || a.t != b.t) throw std::invalid_argument("jacobi_difference: shape mismatch");
    SignedJacobiTable d{a.n, a.t, a.coeff};
    for (std::size_t i = 0; i < d.coeff.size(); ++i) d.coeff[i] -= b.coeff[i];
    return d;
}

inline JacobiTable jacobi_sum(const JacobiTable& a, const JacobiTable& b) {
    if (a.n != b.n || a.t != b.t) throw std::invalid_argument("jacobi_sum: shape mismatch");
    JacobiTable s = a;
    for (std::size_t i = 0; i < s.coeff.size(); ++i) s.coeff[i] += b.coeff[i];
    return s;
}

}  // namespace qrd
