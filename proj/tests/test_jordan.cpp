#include <doctest.h>

#include "ihall/jordan.hpp"

using namespace ihall;

TEST_CASE("iProduct of two simples") {
    // [M(1)] * [M(1)] = q^-1 [M(1,1)] + (1 - q^-1) [M(2)] + (q-1) [K]
    for (long q : {2L, 3L, 4L, 5L}) {
        LocalHallElement p = iProduct(Partition{1}, Partition{1}, q);
        REQUIRE(p.terms().size() == 3);
        CHECK(p.terms().at({Partition{1, 1}, 0}) == Quadratic(Rat(1, q)));
        CHECK(p.terms().at({Partition{2}, 0}) == Quadratic(Rat(q - 1, q)));
        CHECK(p.terms().at({Partition(), 1}) == Quadratic(q - 1));
    }
}

TEST_CASE("iProduct unit") {
    LocalHallElement p = iProduct(Partition(), Partition{2, 1}, 3);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().at({Partition{2, 1}, 0}) == Quadratic(1));
    CHECK(iProduct(Partition{2}, Partition(), 3) ==
          LocalHallElement::single(3, Partition{2}));
}

TEST_CASE("iProduct golden value for (2)*(1)") {
    // q^-1 [M(2,1)] + (1 - q^-1) [M(3)] + (q-1) [M(1)] K
    for (long q : {2L, 3L}) {
        LocalHallElement p = iProduct(Partition{2}, Partition{1}, q);
        REQUIRE(p.terms().size() == 3);
        CHECK(p.terms().at({Partition{2, 1}, 0}) == Quadratic(Rat(1, q)));
        CHECK(p.terms().at({Partition{3}, 0}) == Quadratic(Rat(q - 1, q)));
        CHECK(p.terms().at({Partition{1}, 1}) == Quadratic(q - 1));
    }
}

TEST_CASE("length conservation") {
    for (long q : {2L, 3L})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; a + b <= 5; ++b)
                for (const Partition& lam : Partition::all(a))
                    for (const Partition& mu : Partition::all(b))
                        for (const auto& [key, c] : iProduct(lam, mu, q).terms())
                            CHECK(key.nu.size() + 2 * key.kpow == a + b);
}

TEST_CASE("coefficient positivity after clearing 1/|Hom|") {
    for (long q : {2L, 3L})
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (const Partition& lam : Partition::all(a))
                    for (const Partition& mu : Partition::all(b)) {
                        Quadratic hom = Quadratic(homCountTorsion(lam, mu, q));
                        for (const auto& [key, c] : iProduct(lam, mu, q).terms()) {
                            Quadratic cleared = c * hom;
                            REQUIRE(cleared.isRational());
                            Rat r = cleared.asRational();
                            CHECK(r.get_den() == 1);
                            CHECK(r >= 0);
                        }
                    }
}

TEST_CASE("commutativity within the cap") {
    CHECK(checkCommutativity(2, 5).allPass());
    CHECK(checkCommutativity(3, 4).allPass());
    CHECK(checkCommutativity(4, 4).allPass());
}

TEST_CASE("associativity on small triples") {
    CHECK(checkAssociativity(2, 4).allPass());
    CHECK(checkAssociativity(3, 4).allPass());
}

TEST_CASE("local root vectors") {
    for (long q : {2L, 3L}) {
        // P_1 = [M(1)]/(q-1)
        LocalHallElement p1 = localP(1, q);
        REQUIRE(p1.terms().size() == 1);
        CHECK(p1.terms().at({Partition{1}, 0}) == Quadratic(Rat(1, q - 1)));
        // H_1 = Theta_1
        CHECK(localH(1, q) == localTheta(1, q));
        // the even K-correction of H_2 is -v_x/2
        LocalHallElement h2 = localH(2, q);
        CHECK(h2.terms().at({Partition(), 1}) ==
              -(Quadratic::sqrtOf(q) * Quadratic(Rat(1, 2))));
    }
}

TEST_CASE("local exp identity") {
    CHECK(verifyLocalExp(2, 3).allPass());
    CHECK(verifyLocalExp(3, 3).allPass());
    CHECK(verifyLocalExp(4, 3).allPass());
    CHECK(verifyLocalExp(2, 4).allPass());
}
