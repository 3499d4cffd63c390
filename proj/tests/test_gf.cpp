#include "doctest.h"

#include "support.hpp"

using namespace epls;

TEST_SUITE_BEGIN("gf");

TEST_CASE("primality: known values and a Carmichael number") {
    CHECK(nt::is_prime(2));
    CHECK(nt::is_prime(3));
    CHECK(nt::is_prime(17));
    CHECK(nt::is_prime(2801));
    CHECK(nt::is_prime(65537));
    CHECK(nt::is_prime(9223372036854775783ull)); // largest prime < 2^63
    CHECK_FALSE(nt::is_prime(1));
    CHECK_FALSE(nt::is_prime(561)); // Carmichael
    CHECK_FALSE(nt::is_prime(65535));
}

TEST_CASE("factorize: small values") {
    CHECK(nt::factorize(1).empty());
    CHECK(nt::factorize(24) == std::vector<std::uint64_t>{2, 2, 2, 3});
    CHECK(nt::factorize(2801) == std::vector<std::uint64_t>{2801});
    CHECK(nt::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("factorize: recomposes random 63-bit integers") {
    auto rng = test::test_rng(7);
    for (int i = 0; i < 100000; ++i) {
        std::uint64_t n = (rng() >> 1) | 1; // odd, < 2^63
        auto f = nt::factorize(n);
        __uint128_t prod = 1;
        for (std::uint64_t q : f) {
            CHECK(nt::is_prime(q));
            prod *= q;
        }
        CHECK(static_cast<std::uint64_t>(prod) == n);
    }
}

TEST_CASE("primitive prime divisors") {
    CHECK(nt::is_primitive_prime_divisor(3, 2, 2));
    CHECK_FALSE(nt::is_primitive_prime_divisor(3, 2, 4)); // 3 | 2^2 - 1
    // ord_17(2) = 8, computed directly.
    std::uint64_t ord = 1, pw = 2;
    while (pw != 1) {
        pw = pw * 2 % 17;
        ++ord;
    }
    CHECK(ord == 8);
    CHECK(nt::is_primitive_prime_divisor(17, 2, 8));
    CHECK_FALSE(nt::is_primitive_prime_divisor(17, 2, 4));
    // Example parameters: 2801 | 7^5 - 1 and no earlier 7^i - 1.
    CHECK((nt::checked_pow(7, 5) - 1) % 2801 == 0);
    for (std::uint32_t i = 1; i < 5; ++i) CHECK((nt::checked_pow(7, i) - 1) % 2801 != 0);
    CHECK(nt::is_primitive_prime_divisor(2801, 7, 5));
    CHECK_FALSE(nt::is_primitive_prime_divisor(1, 2, 1));
    CHECK_FALSE(nt::is_primitive_prime_divisor(1057, 2, 15)); // 1057 = 7 * 151
}

TEST_CASE("field of order 2") {
    FieldCtx f = field_make(2, 1);
    CHECK(f.order() == 2);
    CHECK(f.primitive_label() == 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.mul(1, 1) == 1);
}

TEST_CASE("GF(16): modulus, primitive element of order 15") {
    FieldCtx f = field_make(2, 4);
    CHECK(f.order() == 16);
    // Least irreducible quartic over GF(2) is x^4 + x + 1.
    CHECK(f.modulus() == std::vector<std::uint64_t>{1, 1, 0, 0});
    std::uint64_t a = f.primitive_label();
    // Exhaustive order check.
    std::uint64_t x = a, steps = 1;
    while (x != 1) {
        x = f.mul(x, a);
        ++steps;
    }
    CHECK(steps == 15);
}

TEST_CASE("GF(7^5) has 16807 elements") {
    FieldCtx f = field_make(7, 5);
    CHECK(f.order() == 16807);
    std::uint64_t x = f.primitive_label(), steps = 1;
    while (x != 1) {
        x = f.mul(x, f.primitive_label());
        ++steps;
    }
    CHECK(steps == 16806);
}

TEST_CASE("field_make rejects bad parameters") {
    CHECK_THROWS_AS(field_make(4, 2), error);
    CHECK_THROWS_AS(field_make(2, 0), error);
    CHECK_THROWS_AS(field_make(2, 64), error); // 2^64 > 2^63
}

TEST_CASE("frobenius on GF(4) swaps the primitive cube roots") {
    FieldCtx f = field_make(2, 2);
    // Elements: 0, 1, x (label 2), x+1 (label 3); x^2 = x + 1.
    CHECK(f.frobenius(0, 1) == 0);
    CHECK(f.frobenius(1, 1) == 1);
    CHECK(f.frobenius(2, 1) == 3);
    CHECK(f.frobenius(3, 1) == 2);
}

TEST_CASE("frobenius(x, d) is the identity") {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {7, 1}}) {
        FieldCtx f = field_make(p, d);
        auto rng = test::test_rng(p * 100 + d);
        for (int i = 0; i < 50; ++i) {
            std::uint64_t x = rng() % f.order();
            CHECK(f.frobenius(x, d) == x);
        }
    }
}

TEST_CASE("frobenius(. , 1) is a field automorphism") {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {2, 8}, {3, 4}, {5, 2}, {7, 2}}) {
        FieldCtx f = field_make(p, d);
        for (std::uint64_t x = 0; x < f.order(); ++x)
            for (std::uint64_t y = 0; y < f.order(); ++y) {
                CHECK(f.frobenius(f.add(x, y), 1) == f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
                CHECK(f.frobenius(f.mul(x, y), 1) == f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
            }
    }
    // Large field: exhaustive x^(p^d) = x, random pairs for the homomorphism laws.
    FieldCtx big = field_make(2, 16);
    for (std::uint64_t x = 0; x < big.order(); ++x) CHECK(big.frobenius(x, 16) == x);
    auto rng = test::test_rng(16);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t x = rng() % big.order(), y = rng() % big.order();
        CHECK(big.frobenius(big.add(x, y), 1) == big.add(big.frobenius(x, 1), big.frobenius(y, 1)));
        CHECK(big.frobenius(big.mul(x, y), 1) == big.mul(big.frobenius(x, 1), big.frobenius(y, 1)));
    }
}

TEST_CASE("alpha^15 = 1 in GF(16), exhaustively consistent powers") {
    FieldCtx f = field_make(2, 4);
    CHECK(f.pow(f.primitive_label(), 15) == 1);
    CHECK(f.pow(f.primitive_label(), 5) != 1);
    CHECK(f.element_order(f.primitive_label()) == 15);
}

TEST_CASE("multiplication by alpha is a fixed-point-free cycle on nonzero elements") {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {2, 8}}) {
        FieldCtx f = field_make(p, d);
        std::uint64_t a = f.primitive_label();
        std::uint64_t x = a, steps = 1;
        for (std::uint64_t lbl = 1; lbl < f.order(); ++lbl) CHECK(f.mul(a, lbl) != lbl);
        while (x != 1) {
            x = f.mul(x, a);
            ++steps;
        }
        CHECK(steps == f.order() - 1);
    }
}

TEST_CASE("field axioms on random triples") {
    FieldCtx f = field_make(3, 4);
    auto rng = test::test_rng(81);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t x = rng() % 81, y = rng() % 81, z = rng() % 81;
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.add(x, f.neg(x)) == 0);
        if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
    }
}

TEST_CASE("element/label round trip") {
    FieldCtx f = field_make(5, 3);
    for (std::uint64_t lbl = 0; lbl < f.order(); ++lbl) {
        FieldElement e = f.element(lbl);
        CHECK(e.coeffs.size() == 3);
        for (std::uint64_t c : e.coeffs) CHECK(c < 5);
        CHECK(f.label(e) == lbl);
    }
}

TEST_SUITE_END();
