#include <doctest.h>

#include "pprimary/padic.hpp"
#include "pprimary/rng.hpp"
#include "pprimary/sampling.hpp"

using namespace pprimary;

TEST_SUITE_BEGIN("padic");

TEST_CASE("canonical ring arithmetic") {
    CHECK((PadicInt(3, 3, 13) + PadicInt(3, 3, 14)).residue() == 0);
    CHECK((PadicInt(2, 4, 7) * PadicInt(2, 4, 7)).residue() == 1);
    CHECK((-PadicInt::one(5, 2)).residue() == 24);
    CHECK(PadicInt(3, 3, 27 + 5).residue() == 5); // constructor canonicalizes
    CHECK(PadicInt::from_integer(3, 3, -1).residue() == 26);
}

TEST_CASE("mismatched operands are structural errors") {
    CHECK_THROWS_AS(PadicInt(3, 3, 1) + PadicInt(5, 3, 1), MismatchError);
    CHECK_THROWS_AS(PadicInt(3, 3, 1) * PadicInt(3, 4, 1), MismatchError);
    CHECK_THROWS_AS(PadicInt(4, 3, 1), ConfigError);  // composite
    CHECK_THROWS_AS(PadicInt(2, 80, 1), ConfigError); // p^N too large
}

TEST_CASE("canonical form is preserved by arithmetic") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        PadicInt a(5, 6, rng.next());
        PadicInt b(5, 6, rng.next());
        for (PadicInt v : {a + b, a - b, a * b, -a, a.pow(11)}) {
            CHECK(v.residue() < v.modulus());
        }
    }
}

TEST_CASE("invert") {
    CHECK(invert(PadicInt(3, 3, 2)).residue() == 14);
    CHECK(invert(PadicInt(2, 3, 3)).residue() == 3);
    CHECK_THROWS_AS(invert(PadicInt(5, 1, 5)), NotAUnitError); // 5 = 0 mod 5
    Rng rng(11);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int i = 0; i < 50; ++i) {
            PadicInt u = random_padic_unit(p, 7, rng);
            CHECK(u * invert(u) == PadicInt::one(p, 7));
        }
    }
}

TEST_CASE("vp") {
    CHECK(vp(PadicInt(3, 4, 18)).exactly(2));
    CHECK(!vp(PadicInt(2, 4, 0)).is_finite());
    CHECK(vp(PadicInt(5, 3, 7)).exactly(0));
}

TEST_CASE("unit_level") {
    CHECK(unit_level(PadicInt::from_integer(2, 6, -3)).exactly(2));
    CHECK(unit_level(PadicInt(3, 6, 10)).exactly(2));
    CHECK(!unit_level(PadicInt::one(3, 6)).is_finite());
    CHECK_THROWS_AS(unit_level(PadicInt(3, 6, 6)), NotAUnitError);
}

TEST_CASE("unit_level of products: ultrametric rule") {
    Rng rng(13);
    for (std::uint64_t p : {2, 3, 5}) {
        for (int i = 0; i < 100; ++i) {
            std::int64_t na = 1 + static_cast<std::int64_t>(rng.below(4));
            std::int64_t nb = 1 + static_cast<std::int64_t>(rng.below(4));
            PadicInt u = padic_unit_at_exact_level(p, 9, na, rng);
            PadicInt v = padic_unit_at_exact_level(p, 9, nb, rng);
            Valuation lvl = unit_level(u * v);
            CHECK(lvl.at_least(std::min(na, nb)));
            if (na != nb)
                CHECK(lvl.exactly(std::min(na, nb)));
        }
    }
}

TEST_CASE("teichmuller") {
    CHECK(teichmuller(PadicInt(3, 3, 2)).residue() == 26); // omega(-1) = -1
    CHECK(teichmuller(PadicInt(2, 8, 77)).residue() == 1);
    // p = 5: omega(7) is already fixed since 7^2 = -1 (mod 25).
    PadicInt w = teichmuller(PadicInt(5, 2, 7));
    CHECK(w.residue() == 7);
    CHECK(w.pow(4) == PadicInt::one(5, 2));
    CHECK(w.residue() % 5 == 2);
    CHECK_THROWS_AS(teichmuller(PadicInt(3, 3, 3)), NotAUnitError);

    Rng rng(17);
    for (std::uint64_t p : {3, 5, 7}) {
        for (int i = 0; i < 70; ++i) {
            PadicInt u = random_padic_unit(p, 6, rng);
            PadicInt w2 = teichmuller(u);
            CHECK(w2.pow(p - 1) == PadicInt::one(p, 6));
            CHECK(w2.residue() % p == u.residue() % p);
        }
    }
}

TEST_CASE("pth_root_in_level: pinned cases") {
    // 64 = 4^3 lies in U_2 of Z_3; the root comes back at one digit less.
    PadicInt r = pth_root_in_level(PadicInt(3, 6, 64), 1);
    CHECK(r.precision() == 5);
    CHECK(r.residue() == 4);

    // 9 lies in U_3 of Z_2; the square root inside U_2 is -3 (= 1 mod 4).
    PadicInt s = pth_root_in_level(PadicInt(2, 6, 9), 2);
    CHECK(s == PadicInt::from_integer(2, 5, -3));
    CHECK(s.residue() % 4 == 1);

    CHECK_THROWS_AS(pth_root_in_level(PadicInt(2, 6, 9), 1), LevelError);
    CHECK_THROWS_AS(pth_root_in_level(PadicInt(3, 6, 4), 1), LevelError); // 4 in U_0 only
    CHECK_THROWS_AS(pth_root_in_level(PadicInt(3, 6, 12), 1), NotAUnitError);
}

TEST_CASE("pth_root_in_level: seeded round trips") {
    Rng rng(19);
    for (std::uint64_t p : {2, 3, 5}) {
        const unsigned N = 9;
        for (int i = 0; i < 70; ++i) {
            const std::int64_t nmin = p == 2 ? 2 : 1;
            std::int64_t n = nmin + static_cast<std::int64_t>(rng.below(3));
            PadicInt x = padic_unit_at_exact_level(p, N, n, rng);
            PadicInt y = x.pow(p);
            PadicInt back = pth_root_in_level(y, static_cast<unsigned>(n));
            CHECK(back.residue() == x.residue() % back.modulus());
        }
    }
}

TEST_CASE("p-th power map shifts levels by exactly one above e-bar") {
    Rng rng(23);
    for (std::uint64_t p : {2, 3, 5}) {
        const unsigned N = 9;
        for (int i = 0; i < 70; ++i) {
            const std::int64_t nmin = p == 2 ? 2 : 1;
            std::int64_t n = nmin + static_cast<std::int64_t>(rng.below(N - 3 - nmin));
            PadicInt x = padic_unit_at_exact_level(p, N, n, rng);
            CHECK(unit_level(x.pow(p)).exactly(n + 1));
        }
    }
    // Below the bound (p = 2, n = 1) squaring overshoots instead.
    Rng rng2(29);
    for (int i = 0; i < 50; ++i) {
        PadicInt x = padic_unit_at_exact_level(2, 9, 1, rng2);
        Valuation lvl = unit_level(x.pow(2));
        CHECK(lvl.at_least(3));
    }
}

TEST_SUITE_END();
