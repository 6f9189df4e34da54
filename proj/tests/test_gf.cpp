#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpart/gf.hpp"

using namespace qpart::gf;

TEST_CASE("prime fields: arithmetic is mod p") {
    auto F = FieldSpec::make(7, 1);
    CHECK(F.q() == 7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.neg(2) == 5);
    CHECK(F.inv(3) == 5);
    CHECK(F.pow(3, 6) == 1);  // Fermat
}

TEST_CASE("GF(4): canonical modulus and full tables") {
    auto F = FieldSpec::make(2, 2);
    // x^2 + x + 1 is the only irreducible quadratic over GF(2).
    CHECK(F.modulus() == std::vector<Elem>{1, 1, 1});
    // Elements 0,1,x,x+1 encoded as 0,1,2,3. x * x = x + 1.
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.add(2, 3) == 1);
    CHECK(F.inv(2) == 3);
}

TEST_CASE("GF(8) and GF(9): lex-least moduli") {
    auto F8 = FieldSpec::make(2, 3);
    // Candidates in base-2-integer order of (c0,c1): x^3+1 (reducible),
    // x^3+x (reducible), x^3+x+1 (irreducible).
    CHECK(F8.modulus() == std::vector<Elem>{1, 1, 0, 1});
    auto F9 = FieldSpec::make(3, 2);
    // x^2+1 is irreducible over GF(3) and least: (c0,c1)=(1,0).
    CHECK(F9.modulus() == std::vector<Elem>{1, 0, 1});
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}, {3u, 2u}, {5u, 1u}}) {
        auto F = FieldSpec::make(p, e);
        const Elem q = F.q();
        for (Elem a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
                CHECK(F.pow(a, q - 1) == 1);
            }
            for (Elem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("encode/decode round trip") {
    auto F = FieldSpec::make(3, 2);
    for (Elem a = 0; a < F.q(); ++a) {
        auto d = F.decode(a);
        REQUIRE(d.size() == 2);
        CHECK(F.encode(d) == a);
    }
    CHECK(F.decode(5) == std::vector<Elem>{2, 1});  // 5 = 2 + 1*3
}

TEST_CASE("errors: non-prime p, reducible modulus, zero inverse, mismatch guards") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::make(6, 2), NonPrimeCharacteristic);
    // x^2 + 1 = (x+1)^2 over GF(2).
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<Elem>{1, 0, 1}), ReducibleModulus);
    auto F = FieldSpec::make(2, 2);
    CHECK_THROWS_AS(F.inv(0), ZeroInverse);
    CHECK_THROWS_AS(F.div(1, 0), ZeroInverse);
}

TEST_CASE("custom irreducible modulus is honored") {
    // x^3 + x^2 + 1, the other irreducible cubic over GF(2).
    auto F = FieldSpec::make(2, 3, std::vector<Elem>{1, 0, 1, 1});
    CHECK(F.modulus() == std::vector<Elem>{1, 0, 1, 1});
    for (Elem a = 1; a < 8; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    // x * x * x = x^2 + 1 under this modulus.
    CHECK(F.mul(2, F.mul(2, 2)) == 5);
}

TEST_CASE("polynomial utilities") {
    auto F2 = FieldSpec::make(2, 1);
    CHECK(poly_trim({1, 1, 0, 0}) == std::vector<Elem>{1, 1});
    // (x+1)^2 = x^2 + 1 over GF(2).
    std::vector<Elem> a{1, 1};
    CHECK(poly_mul(F2, a, a) == std::vector<Elem>{1, 0, 1});
    CHECK(poly_is_irreducible(F2, std::vector<Elem>{1, 1, 1}));
    CHECK_FALSE(poly_is_irreducible(F2, std::vector<Elem>{1, 0, 1}));
    CHECK(least_irreducible(F2, 2) == std::vector<Elem>{1, 1, 1});
    // x^4 + x + 1 is the least irreducible quartic over GF(2).
    CHECK(least_irreducible(F2, 4) == std::vector<Elem>{1, 1, 0, 0, 1});
}

TEST_CASE("extension tower GF((2^2)^2) behaves like a field of 16 elements") {
    auto F4 = FieldSpec::make(2, 2);
    ExtField E(F4, 2);
    auto one = E.one();
    auto x = E.monomial(1);
    // x^(q^t - 1) = 1 for every nonzero element generated by x.
    auto acc = one;
    int order = 0;
    do {
        acc = E.mul(acc, x);
        ++order;
    } while (!(acc == one) && order <= 16);
    CHECK(15 % order == 0);
    CHECK(E.is_zero(E.add(x, x)));  // characteristic 2
}

TEST_CASE("large prime-power field builds and inverts") {
    auto F = FieldSpec::make(2, 8);  // GF(256)
    CHECK(F.q() == 256);
    for (Elem a = 1; a < 256; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}
