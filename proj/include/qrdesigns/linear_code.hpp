#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitvec.hpp"
#include "gf2poly.hpp"

namespace qrd {

// Binary linear code, generator rows kept in reduced row-echelon form
// (pivot-leftmost), which is the canonical form used for code equality.
class LinearCode {
public:
    LinearCode(int n, std::vector<BitVec> rows) : n_(n), rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.size() != n_) throw std::invalid_argument("LinearCode: row length mismatch");
        rref();
    }

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<BitVec>& rows() const { return rows_; }

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    bool contains(const BitVec& v) const {
        if (v.size() != n_) return false;
        BitVec r = v;
        for (const auto& row : rows_) {
            if (r.lowest_set() == -1) break;
            int piv = row.lowest_set();
            if (r.get(piv)) r ^= row;
        }
        return r.lowest_set() == -1;
    }

    // Parity extension: one appended coordinate making every weight even.
    LinearCode extend_parity() const {
        std::vector<BitVec> rows;
        rows.reserve(rows_.size());
        for (const auto& r : rows_) {
            BitVec e(n_ + 1);
            for (int i = 0; i < n_; ++i) e.set(i, r.get(i));
            e.set(n_, r.popcount() & 1);
            rows.push_back(std::move(e));
        }
        return LinearCode(n_ + 1, std::move(rows));
    }

    LinearCode dual() const {
        int k = dimension();
        std::vector<int> pivots;
        pivots.reserve(k);
        for (const auto& r : rows_) pivots.push_back(r.lowest_set());
        std::vector<bool> is_pivot(n_, false);
        for (int p : pivots) is_pivot[p] = true;

        std::vector<BitVec> drows;
        drows.reserve(n_ - k);
        for (int f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            BitVec d(n_);
            d.set(f, true);
            for (int r = 0; r < k; ++r) d.set(pivots[r], rows_[r].get(f));
            drows.push_back(std::move(d));
        }
        return LinearCode(n_, std::move(drows));
    }

    // C^sigma: coordinate i of the image carries coordinate sigma(i) of the original.
    LinearCode permute(const std::vector<int>& sigma) const {
        if (static_cast<int>(sigma.size()) != n_)
            throw std::invalid_argument("LinearCode::permute: permutation length mismatch");
        std::vector<BitVec> rows;
        rows.reserve(rows_.size());
        for (const auto& r : rows_) {
            BitVec q(n_);
            for (int i = 0; i < n_; ++i) q.set(i, r.get(sigma[i]));
            rows.push_back(std::move(q));
        }
        return LinearCode(n_, std::move(rows));
    }

    // dim(C + D), via the rank of the stacked generator matrices.
    static int sum_dimension(const LinearCode& a, const LinearCode& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("sum_dimension: length mismatch");
        std::vector<BitVec> rows = a.rows_;
        rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
        return LinearCode(a.n_, std::move(rows)).dimension();
    }

    static int intersection_dimension(const LinearCode& a, const LinearCode& b) {
        return a.dimension() + b.dimension() - sum_dimension(a, b);
    }

    // Text format: first line "n k", then k rows of n characters from {0,1}.
    std::string to_text() const {
        std::ostringstream os;
        os << n_ << ' ' << dimension() << '\n';
        for (const auto& r : rows_) os << r.to_string() << '\n';
        return os.str();
    }

    static LinearCode from_text(std::istream& in) {
        int n, k;
        if (!(in >> n >> k)) throw std::invalid_argument("LinearCode: bad header");
        std::vector<BitVec> rows;
        rows.reserve(k);
        for (int i = 0; i < k; ++i) {
            std::string line;
            if (!(in >> line) || static_cast<int>(line.size()) != n)
                throw std::invalid_argument("LinearCode: bad matrix row");
            rows.push_back(BitVec::from_string(line));
        }
        LinearCode c(n, std::move(rows));
        if (c.dimension() != k) throw std::invalid_argument("LinearCode: rows not independent");
        return c;
    }

private:
    void rref() {
        std::size_t rank = 0;
        for (int col = 0; col < n_ && rank < rows_.size(); ++col) {
            std::size_t piv = rank;
            while (piv < rows_.size() && !rows_[piv].get(col)) ++piv;
            if (piv == rows_.size()) continue;
            std::swap(rows_[rank], rows_[piv]);
            for (std::size_t r = 0; r < rows_.size(); ++r)
                if (r != rank && rows_[r].get(col)) rows_[r] ^= rows_[rank];
            ++rank;
        }
        rows_.resize(rank, BitVec(n_));
    }

    int n_;
    std::vector<BitVec> rows_;
};

// Cyclic code of length p generated by g; g must divide x^p - 1.
inline LinearCode cyclic_code(const Gf2Poly& g, int p) {
    if (g.is_zero() || !g.divides(Gf2Poly::xn_plus_one(p)))
        throw std::invalid_argument("cyclic_code: g does not divide x^p - 1");
    int k = p - g.deg();
    std::vector<BitVec> rows;
    rows.reserve(k);
    for (int s = 0; s < k; ++s) {
        BitVec r(p);
        for (int i = 0; i <= g.deg(); ++i)
            if (g.coeff(i)) r.set(i + s, true);
        rows.push_back(std::move(r));
    }
    return LinearCode(p, std::move(rows));
}

inline bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("same_code: length mismatch");
    return a == b;
}

}  // namespace qrd
