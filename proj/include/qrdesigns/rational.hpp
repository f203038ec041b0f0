#pragma once

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qrd {

// Exact rational on long long, always normalized with positive denominator.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::invalid_argument("Rat: division by zero");
        return Rat(num * o.den, den * o.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace qrd
