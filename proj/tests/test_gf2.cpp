#include <doctest.h>

#include <qrdesigns/gf2ext.hpp>
#include <qrdesigns/gf2poly.hpp>
#include <qrdesigns/linear_code.hpp>
#include <qrdesigns/numtheory.hpp>
#include <qrdesigns/qr.hpp>

#include <set>
#include <vector>

using namespace qrd;

TEST_CASE("polynomial arithmetic basics") {
    Gf2Poly a = Gf2Poly::from_string("101");  // x^2 + 1
    Gf2Poly b = Gf2Poly::from_string("11");   // x + 1
    CHECK(gcd(a, b) == b);
    CHECK(b * b == a);  // characteristic-2 squaring
    CHECK((a % b).is_zero());
    CHECK_THROWS_AS(a.divmod(Gf2Poly::zero()), std::invalid_argument);
}

TEST_CASE("degree sentinel") {
    CHECK(Gf2Poly::zero().degree() == Degree::minus_infinity());
    CHECK(Degree::minus_infinity() < Degree::of(0));
    CHECK(Degree::of(3) < Degree::of(5));
    CHECK(Gf2Poly::from_string("0001").degree() == Degree::of(3));
}

TEST_CASE("string round trip") {
    Gf2Poly p = Gf2Poly::from_string("1101");
    CHECK(p.to_string() == "1101");
    CHECK(p.pretty() == "x^3 + x + 1");
}

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(7) == std::set<int>{1, 2, 4});
    CHECK(quadratic_residues(17) == std::set<int>{1, 2, 4, 8, 9, 13, 15, 16});
    auto qr41 = quadratic_residues(41);
    CHECK(qr41.size() == 20);
    CHECK(qr41.count(2) == 1);
    CHECK(qr41.count(6) == 0);  // 6 generates F_41^*
}

TEST_CASE("cyclotomic cosets") {
    auto c7 = cyclotomic_cosets(7);
    REQUIRE(c7.size() == 2);
    CHECK(c7[0].members == std::vector<int>{1, 2, 4});
    CHECK(c7[1].members == std::vector<int>{3, 5, 6});

    auto c17 = cyclotomic_cosets(17);
    REQUIRE(c17.size() == 2);
    CHECK(c17[0].members == std::vector<int>{1, 2, 4, 8, 9, 13, 15, 16});
    CHECK(c17[1].members == std::vector<int>{3, 5, 6, 7, 10, 11, 12, 14});

    CHECK_THROWS_AS(cyclotomic_cosets(15), std::invalid_argument);
}

TEST_CASE("cyclotomic cosets partition and respect the residue split") {
    for (int p : {7, 17, 41}) {
        auto cosets = cyclotomic_cosets(p);
        std::set<int> all;
        auto qr = quadratic_residues(p);
        for (const auto& c : cosets) {
            bool in_qr = qr.count(c.members[0]) > 0;
            for (int m : c.members) {
                CHECK(all.insert(m).second);
                CHECK((qr.count(m) > 0) == in_qr);  // 2 is a residue for p = +-1 mod 8
            }
        }
        CHECK(static_cast<int>(all.size()) == p - 1);
    }
    auto c41 = cyclotomic_cosets(41);
    for (const auto& c : c41) CHECK(c.members.size() == 20);  // ord_41(2) = 20
}

TEST_CASE("extension field basics") {
    Gf2ExtField F(8);
    CHECK(F.modulus().deg() == 8);
    CHECK(Gf2ExtField::is_irreducible(F.modulus()));
    auto g = F.generator();
    CHECK(F.pow(g, F.order()) == 1);
    // generator has full order: no proper-divisor power is 1
    for (long long q : prime_factors(static_cast<long long>(F.order())))
        CHECK(F.pow(g, F.order() / q) != 1);
}

TEST_CASE("qr generator polynomial p=7") {
    Gf2Poly g = qr_generator_polynomial(7);
    // one of the two degree-3 irreducible factors of x^7 - 1
    bool ok = g == Gf2Poly::from_string("1101") || g == Gf2Poly::from_string("1011");
    CHECK(ok);
}

TEST_CASE("qr generator polynomial degree and divisibility") {
    for (int p : {7, 17, 23, 31, 41}) {
        Gf2Poly g = qr_generator_polynomial(p);
        CHECK(g.deg() == (p - 1) / 2);
        CHECK(g.divides(Gf2Poly::xn_plus_one(p)));
        CHECK((Gf2Poly::xn_plus_one(p) % g).is_zero());
    }
}

TEST_CASE("qr generator rejects bad p") {
    CHECK_THROWS_AS(qr_generator_polynomial(13), std::invalid_argument);  // 13 = 5 mod 8
    CHECK_THROWS_AS(qr_generator_polynomial(12), std::invalid_argument);
}

// Independent oracle: gcd of a residue-sum idempotent with x^p - 1 generates
// a QR code; the constructed code must equal that code, possibly after the
// coordinate relabeling i -> c i for a non-residue c.
static bool matches_idempotent_oracle(int p) {
    Gf2Poly g = qr_generator_polynomial(p);
    LinearCode C = cyclic_code(g, p);
    Gf2Poly xp1 = Gf2Poly::xn_plus_one(p);

    auto qr = quadratic_residues(p);
    Gf2Poly e1, e2 = Gf2Poly::one();
    for (int r = 1; r < p; ++r) {
        if (qr.count(r))
            e1.set_coeff(r, true);
        else
            e2.set_coeff(r, true);
    }
    std::vector<Gf2Poly> cands{gcd(e1, xp1), gcd(e2, xp1)};
    for (const auto& h : cands) {
        if (h.is_zero() || h.deg() != (p - 1) / 2) continue;
        LinearCode D = cyclic_code(h, p);
        if (same_code(C, D)) return true;
        for (int c = 2; c < p; ++c) {
            if (is_quadratic_residue(c, p)) continue;
            std::vector<int> sigma(p);
            for (int i = 0; i < p; ++i) sigma[i] = static_cast<int>(static_cast<long long>(c) * i % p);
            if (same_code(C, D.permute(sigma))) return true;
        }
    }
    return false;
}

TEST_CASE("qr generator agrees with the idempotent-gcd oracle") {
    for (int p : {7, 17, 41}) CHECK(matches_idempotent_oracle(p));
}

TEST_CASE("x^17 - 1 reduces to zero mod g_17") {
    Gf2Poly g = qr_generator_polynomial(17);
    CHECK((Gf2Poly::xn_plus_one(17) % g).is_zero());
    // cross-check by multiplying out the coset factorization: g times the
    // product of the remaining irreducible factors is x^17 - 1
    Gf2Poly rest = Gf2Poly::xn_plus_one(17) / g;
    CHECK(g * rest == Gf2Poly::xn_plus_one(17));
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root(41) == 6);
    CHECK(primitive_root(17) == 3);
    CHECK(mult_order(2, 41) == 20);
    CHECK(mult_order(2, 17) == 8);
    CHECK(mult_order(2, 73) == 9);
}
