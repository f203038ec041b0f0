#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrd {

// Degree of a GF(2) polynomial; the zero polynomial has degree -infinity.
struct Degree {
    bool neg_inf = true;
    int value = 0;

    static Degree minus_infinity() { return {}; }
    static Degree of(int d) { return {false, d}; }

    bool operator==(const Degree&) const = default;
    auto operator<=>(const Degree& o) const {
        if (neg_inf != o.neg_inf) return neg_inf ? std::strong_ordering::less : std::strong_ordering::greater;
        if (neg_inf) return std::strong_ordering::equal;
        return value <=> o.value;
    }
};

// Polynomial over GF(2), coefficients packed lowest degree first.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }

    static Gf2Poly monomial(int d) {
        Gf2Poly p;
        p.set_coeff(d, true);
        return p;
    }

    // x^n + 1
    static Gf2Poly xn_plus_one(int n) {
        Gf2Poly p = monomial(n);
        p.set_coeff(0, true);
        return p;
    }

    // Ascending-degree 0/1 string, e.g. "1101" = 1 + x + x^3.
    static Gf2Poly from_string(const std::string& s) {
        Gf2Poly p;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                p.set_coeff(static_cast<int>(i), true);
            else if (s[i] != '0')
                throw std::invalid_argument("Gf2Poly: bad character");
        }
        return p;
    }

    // Low bits of v as coefficients (bit i -> coefficient of x^i).
    static Gf2Poly from_bits(std::uint64_t v) {
        Gf2Poly p;
        for (int i = 0; v; ++i, v >>= 1)
            if (v & 1) p.set_coeff(i, true);
        return p;
    }

    bool is_zero() const { return w_.empty(); }

    Degree degree() const {
        if (w_.empty()) return Degree::minus_infinity();
        std::uint64_t top = w_.back();
        int bit = 63;
        while (!(top >> bit & 1)) --bit;
        return Degree::of(static_cast<int>(w_.size() - 1) * 64 + bit);
    }

    // Degree as plain int; only valid for nonzero polynomials.
    int deg() const {
        Degree d = degree();
        if (d.neg_inf) throw std::logic_error("Gf2Poly: degree of zero polynomial");
        return d.value;
    }

    bool coeff(int i) const {
        std::size_t word = static_cast<std::size_t>(i) >> 6;
        if (word >= w_.size()) return false;
        return (w_[word] >> (i & 63)) & 1u;
    }

    void set_coeff(int i, bool b) {
        std::size_t word = static_cast<std::size_t>(i) >> 6;
        if (word >= w_.size()) {
            if (!b) return;
            w_.resize(word + 1, 0);
        }
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b)
            w_[word] |= m;
        else
            w_[word] &= ~m;
        trim();
    }

    Gf2Poly operator+(const Gf2Poly& o) const {
        Gf2Poly r = *this;
        if (o.w_.size() > r.w_.size()) r.w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) r.w_[i] ^= o.w_[i];
        r.trim();
        return r;
    }

    Gf2Poly operator*(const Gf2Poly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        Gf2Poly r;
        r.w_.assign(w_.size() + o.w_.size(), 0);
        int db = o.deg();
        for (int i = 0; i <= db; ++i) {
            if (!o.coeff(i)) continue;
            // r ^= this << i
            int ws = i >> 6, bs = i & 63;
            for (std::size_t j = 0; j < w_.size(); ++j) {
                r.w_[j + ws] ^= w_[j] << bs;
                if (bs) r.w_[j + ws + 1] ^= w_[j] >> (64 - bs);
            }
        }
        r.trim();
        return r;
    }

    // Quotient and remainder of *this by d.
    std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("Gf2Poly: division by zero polynomial");
        Gf2Poly q, r = *this;
        int dd = d.deg();
        while (!r.is_zero() && r.deg() >= dd) {
            int shift = r.deg() - dd;
            q.set_coeff(shift, true);
            r = r + d.shifted(shift);
        }
        return {q, r};
    }

    Gf2Poly operator%(const Gf2Poly& d) const { return divmod(d).second; }
    Gf2Poly operator/(const Gf2Poly& d) const { return divmod(d).first; }

    bool divides(const Gf2Poly& other) const { return (other % *this).is_zero(); }

    Gf2Poly shifted(int s) const {
        Gf2Poly r;
        if (is_zero()) return r;
        int d = deg();
        for (int i = 0; i <= d; ++i)
            if (coeff(i)) r.set_coeff(i + s, true);
        return r;
    }

    bool operator==(const Gf2Poly& o) const = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s(static_cast<std::size_t>(deg()) + 1, '0');
        for (int i = 0; i <= deg(); ++i)
            if (coeff(i)) s[i] = '1';
        return s;
    }

    // Human-readable form like "x^3 + x + 1".
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = deg(); i >= 0; --i) {
            if (!coeff(i)) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += "x";
            else
                s += "x^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;  // bit i of word j: coefficient of x^(64j+i)
};

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;  // monic automatically over GF(2)
}

}  // namespace qrd
