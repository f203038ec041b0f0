#include <doctest.h>

#include <qrdesigns/enumerate.hpp>
#include <qrdesigns/proj_geom.hpp>
#include <qrdesigns/qr.hpp>

using namespace qrd;

static LinearCode extended_qr(int p) { return cyclic_code(qr_generator_polynomial(p), p).extend_parity(); }

TEST_CASE("mobius action on the projective line") {
    int p = 17;
    MobiusMap id(1, 0, 0, 1, p);
    for (int x = 0; x <= p; ++x) CHECK(id.apply(x) == x);

    MobiusMap inv(0, 1, 1, 0, p);  // x -> 1/x
    CHECK(inv.apply(0) == infinity_point(p));
    CHECK(inv.apply(infinity_point(p)) == 0);
    CHECK(inv.apply(2) == 9);  // 2 * 9 = 18 = 1 mod 17

    MobiusMap shift(1, 1, 0, 1, p);  // x -> x + 1
    CHECK(shift.apply(p - 1) == 0);
    CHECK(shift.apply(infinity_point(p)) == infinity_point(p));

    CHECK_THROWS_AS(MobiusMap(1, 1, 1, 1, p), std::invalid_argument);
}

TEST_CASE("colex ranking of triples") {
    CHECK(triple_colex_rank(0, 1, 2) == 0);
    // strictly increasing in colex order
    long long prev = -1;
    for (int k = 2; k < 8; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                long long r = triple_colex_rank(i, j, k);
                CHECK(r == prev + 1);
                prev = r;
            }
}

TEST_CASE("triple orbit labels at p=41") {
    CHECK(triple_orbit_label(41, {0, 1, 41}) == 1);   // {0, 1, inf}
    CHECK(triple_orbit_label(41, {0, 6, 41}) == 2);   // {0, 6, inf}, 6 a non-residue
    CHECK_THROWS_AS(triple_orbit_label(41, {0, 0, 41}), std::invalid_argument);
    CHECK_THROWS_AS(triple_orbit_label(23, {0, 1, 23}), std::invalid_argument);
}

TEST_CASE("orbit label is ordering-independent") {
    int p = 17;
    std::array<int, 3> t{3, 11, infinity_point(p)};
    int lab = triple_orbit_label(p, t);
    std::array<std::array<int, 3>, 5> reorders{{{11, 3, 17}, {17, 3, 11}, {3, 17, 11}, {11, 17, 3}, {17, 11, 3}}};
    for (const auto& r : reorders) CHECK(triple_orbit_label(p, r) == lab);
}

TEST_CASE("orbit partition sizes") {
    OrbitPartition o17 = orbit_partition(17);  // self-check enabled
    CHECK(o17.sizes[0] + o17.sizes[1] == binomial(18, 3));
    CHECK(o17.representatives[1][1] == 3);  // smallest primitive root of 17

    OrbitPartition o41 = orbit_partition(41);
    CHECK(o41.sizes[0] == 5740);
    CHECK(o41.sizes[1] == 5740);
    CHECK(o41.representatives[1][1] == 6);
}

TEST_CASE("psl2 generators fix the extended code (p=17)") {
    LinearCode q18 = extended_qr(17);
    for (const auto& g : psl2_generators(17)) CHECK(same_code(q18.permute(g), q18));
}

TEST_CASE("psl2 generators act within orbits") {
    OrbitPartition o17 = orbit_partition(17, false);
    for (const auto& g : psl2_generators(17))
        for (int k = 2; k <= 17; ++k)
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i)
                    CHECK(o17.label_of({g[i], g[j], g[k]}) == static_cast<int>(o17.labels[triple_colex_rank(i, j, k)]));
}

TEST_CASE("generated group has the PSL_2 order (p=17)") {
    CHECK(permutation_group_order(psl2_generators(17)) == 17u * 16 * 18 / 2);  // 2448
}

TEST_CASE("duality permutation (p=17)") {
    LinearCode q18 = extended_qr(17);
    std::vector<int> sigma = duality_permutation(17, q18);
    LinearCode d = q18.dual();
    CHECK(same_code(q18.permute(sigma), d));
    // sigma twice brings the code back
    CHECK(same_code(q18.permute(sigma).permute(sigma), q18));

    // sigma swaps the two triple orbits
    OrbitPartition o17 = orbit_partition(17, false);
    for (int k = 2; k <= 17; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                int lab = o17.labels[triple_colex_rank(i, j, k)];
                int im = o17.label_of({sigma[i], sigma[j], sigma[k]});
                CHECK(lab + im == 3);
            }
}

TEST_CASE("generated group has the PSL_2 order (p=41)") {
    CHECK(permutation_group_order(psl2_generators(41)) == 41u * 40 * 42 / 2);  // 34440
}
