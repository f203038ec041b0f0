#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bitvec.hpp"
#include "linear_code.hpp"

namespace qrd {

struct BudgetExceeded : std::runtime_error {
    int required;
    int budget;
    BudgetExceeded(int req, int bud)
        : std::runtime_error("enumeration refused: dimension " + std::to_string(req) +
                             " exceeds budget " + std::to_string(bud)),
          required(req),
          budget(bud) {}
};

inline int default_enum_budget() {
    if (const char* e = std::getenv("QRD_ENUM_BUDGET")) return std::atoi(e);
    return 25;
}

// Visits the 2^b codewords spanned by rows[lo..lo+b) of C, offset by `start`,
// in Gray-code order: one row XOR per step. visitor(word, weight).
template <class Visitor>
void enumerate_span(const LinearCode& C, const BitVec& start, int lo, int b, Visitor&& visit) {
    BitVec cur = start;
    visit(cur, cur.popcount());
    const auto& rows = C.rows();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << b); ++i) {
        cur ^= rows[lo + std::countr_zero(i)];
        visit(cur, cur.popcount());
    }
}

// Full enumeration, 2^k visits.
template <class Visitor>
void enumerate_codewords(const LinearCode& C, Visitor&& visit, int budget = default_enum_budget()) {
    int k = C.dimension();
    if (k > budget) throw BudgetExceeded(k, budget);
    enumerate_span(C, BitVec(C.length()), 0, k, visit);
}

// Partitioned enumeration: the message space splits into 2^b blocks by the
// top b message bits; block `part` is enumerated independently.
template <class Visitor>
void enumerate_partition(const LinearCode& C, int b, std::uint64_t part, Visitor&& visit,
                         int budget = default_enum_budget()) {
    int k = C.dimension();
    if (k > budget) throw BudgetExceeded(k, budget);
    if (b < 0 || b > k || part >= (std::uint64_t{1} << b))
        throw std::invalid_argument("enumerate_partition: bad partition index");
    BitVec start(C.length());
    for (int j = 0; j < b; ++j)
        if (part >> j & 1) start ^= C.rows()[k - b + j];
    enumerate_span(C, start, 0, k - b, visit);
}

// Runs one accumulator per thread over a partitioned enumeration and merges
// the results with `merge`. Accumulators are pure: merging is additive.
template <class Acc, class Visit, class Merge>
Acc enumerate_parallel(const LinearCode& C, int threads, Acc init, Visit&& visit, Merge&& merge,
                       int budget = default_enum_budget()) {
    int k = C.dimension();
    if (k > budget) throw BudgetExceeded(k, budget);
    if (threads < 1) threads = 1;
    int b = 0;
    while ((1 << b) < threads && b < k) ++b;
    int parts = 1 << b;
    std::vector<Acc> acc(parts, init);
    std::vector<std::thread> pool;
    pool.reserve(parts);
    for (int t = 0; t < parts; ++t)
        pool.emplace_back([&, t] {
            enumerate_partition(
                C, b, static_cast<std::uint64_t>(t),
                [&](const BitVec& w, int wt) { visit(acc[t], w, wt); }, budget);
        });
    for (auto& th : pool) th.join();
    Acc out = std::move(acc[0]);
    for (int t = 1; t < parts; ++t) merge(out, acc[t]);
    return out;
}

struct WeightDistribution {
    std::vector<long long> counts;  // index = weight 0..n
    long long total() const {
        long long s = 0;
        for (long long c : counts) s += c;
        return s;
    }
};

inline WeightDistribution weight_distribution(const LinearCode& C, int threads = 1,
                                              int budget = default_enum_budget()) {
    WeightDistribution init{std::vector<long long>(C.length() + 1, 0)};
    return enumerate_parallel(
        C, threads, init, [](WeightDistribution& a, const BitVec&, int wt) { ++a.counts[wt]; },
        [](WeightDistribution& a, const WeightDistribution& b) {
            for (std::size_t i = 0; i < a.counts.size(); ++i) a.counts[i] += b.counts[i];
        },
        budget);
}

// Supports of all weight-ell codewords, as sorted coordinate sets.
inline std::vector<std::vector<int>> shell(const LinearCode& C, int ell,
                                           int budget = default_enum_budget()) {
    std::vector<std::vector<int>> blocks;
    enumerate_codewords(
        C,
        [&](const BitVec& w, int wt) {
            if (wt == ell) blocks.push_back(w.support());
        },
        budget);
    return blocks;
}

}  // namespace qrd
