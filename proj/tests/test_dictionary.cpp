#include <doctest.h>

#include "ihall/dictionary.hpp"

using namespace ihall;

TEST_CASE("psi images") {
    DictionaryElement b1 = psiImage(SerreGenerator::B1);
    CHECK(b1.gen == KronGenerator::s1());
    CHECK(b1.scalar == RatFunc(Rat(-1)) / RatFunc(Laurent::v(2) - Laurent::one()));
    CHECK(b1.shift == KronLattice{0, 0});
    CHECK(psiImage(SerreGenerator::K0).shift == KronLattice{1, 0});
    CHECK(psiImage(SerreGenerator::K1).shift == KronLattice{0, 1});
}

TEST_CASE("reflections on the torus lattice") {
    // S^+ [K_{a1}] = [K_{-a0}], S^+ [K_{a0}] = [K_{a1 + 2 a0}]
    CHECK(reflectPlusLattice({0, 1}) == KronLattice{-1, 0});
    CHECK(reflectPlusLattice({1, 0}) == KronLattice{2, 1});
    CHECK(reflectMinusLattice({1, 0}) == KronLattice{0, -1});
    CHECK(reflectMinusLattice({0, 1}) == KronLattice{1, 2});
    // inverse pair
    for (long a0 : {-2L, 0L, 3L})
        for (long a1 : {-1L, 1L, 2L}) {
            KronLattice b{a0, a1};
            CHECK(reflectMinusLattice(reflectPlusLattice(b)) == b);
            CHECK(reflectPlusLattice(reflectMinusLattice(b)) == b);
        }
}

TEST_CASE("reflections on generators") {
    // S^-([S0]) = [K_{S1}]^(-1) * [S1]
    DictionaryElement s0{RatFunc::one(), KronGenerator::s0(), {}};
    DictionaryElement r = reflectMinus(s0);
    CHECK(r.gen == KronGenerator::s1());
    CHECK(r.shift == KronLattice{0, -1});
    // S^+([S1]) = [K_{S0}]^(-1) * [S0]
    DictionaryElement s1{RatFunc::one(), KronGenerator::s1(), {}};
    DictionaryElement rp = reflectPlus(s1);
    CHECK(rp.gen == KronGenerator::s0());
    CHECK(rp.shift == KronLattice{-1, 0});
    // dimension walk: (S^-)^2 (S1) has dimension 2 delta + alpha1
    DictionaryElement e = reflectMinus(reflectMinus(s1));
    CHECK(dimVector(e.gen) == KronLattice{2, 3});
    CHECK(e.gen == KronGenerator::p(2));
}

TEST_CASE("preprojective and preinjective images") {
    for (int n = 0; n <= 4; ++n) {
        DictionaryElement p = bImage(n, +1);
        CHECK(dimVector(p.gen) == KronLattice{n, n + 1});
        CHECK(p.shift == KronLattice{0, 0});
        DictionaryElement i = bImage(n, -1);
        CHECK(dimVector(i.gen) == KronLattice{n + 1, n});
        CHECK(i.shift == KronLattice{-n - 1, -n});  // -n delta - alpha0
    }
    CHECK(bImage(0, +1).gen == KronGenerator::s1());
    CHECK(bImage(0, -1).gen == KronGenerator::s0());
}

TEST_CASE("gamma images") {
    CHECK(gammaImage({RatFunc::one(), KronGenerator::s1(), {}}) ==
          SymElem::single(BasisKey::resolved(SheafClass::line(0)), RatFunc::one()));
    CHECK(gammaImage({RatFunc::one(), KronGenerator::p(1), {}}) ==
          SymElem::single(BasisKey::resolved(SheafClass::line(1)), RatFunc::one()));
    CHECK(gammaImage({RatFunc::one(), KronGenerator::s0(), {}}) ==
          SymElem::single(BasisKey::resolved(SheafClass::line(-1), {-1, 1}), RatFunc::one()));
    // [K_{S0}] -> K_(-1,1), [K_{S1}] -> K_(1,0)
    CHECK(gammaImage({RatFunc::one(), KronGenerator::one(), {1, 0}}) == symUnit({-1, 1}));
    CHECK(gammaImage({RatFunc::one(), KronGenerator::one(), {0, 1}}) == symUnit({1, 0}));
    CHECK_THROWS_AS(gammaImage({RatFunc::one(), KronGenerator::i(2), {}}), UnsupportedGenerator);
}

TEST_CASE("commutative diagram on the Serre generators") {
    Report rep = verifyDiagram();
    CHECK(rep.cases().size() == 4);
    CHECK(rep.allPass());
}
