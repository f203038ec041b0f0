#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrd {

// Fixed-length bit vector over 64-bit words, bit i = word[i/64] >> (i%64).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("BitVec: negative length");
    }

    static BitVec from_string(const std::string& s) {
        BitVec v(static_cast<int>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(static_cast<int>(i), true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVec: bad character in bit string");
        }
        return v;
    }

    int size() const { return n_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool b) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void operator^=(const BitVec& o) {
        for (std::size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
    }

    BitVec operator^(const BitVec& o) const {
        BitVec r = *this;
        r ^= o;
        return r;
    }

    int popcount() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    int popcount_and(const BitVec& o) const {
        int c = 0;
        for (std::size_t j = 0; j < w_.size(); ++j) c += std::popcount(w_[j] & o.w_[j]);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    // Index of the lowest set bit, -1 if none.
    int lowest_set() const {
        for (std::size_t j = 0; j < w_.size(); ++j)
            if (w_[j]) return static_cast<int>(j) * 64 + std::countr_zero(w_[j]);
        return -1;
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < n_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace qrd
