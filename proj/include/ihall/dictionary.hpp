#pragma once

#include "ihall/ihall.hpp"

namespace ihall {

// Element a0*alpha0 + a1*alpha1 of the Kronecker root lattice.
struct KronLattice {
    long a0 = 0;
    long a1 = 0;
    KronLattice operator+(const KronLattice& o) const { return {a0 + o.a0, a1 + o.a1}; }
    KronLattice operator-(const KronLattice& o) const { return {a0 - o.a0, a1 - o.a1}; }
    KronLattice operator*(long n) const { return {a0 * n, a1 * n}; }
    bool operator==(const KronLattice& o) const = default;
    std::string toString() const;
};

// Generators of the Kronecker-side dictionary: the two simples, the
// indecomposable preprojectives/preinjectives, and the unit. P(0) and I(0)
// canonicalize to S1 and S0.
struct KronGenerator {
    enum class Kind { S0, S1, P, I, One } kind = Kind::One;
    int n = 0;
    static KronGenerator s0() { return {Kind::S0, 0}; }
    static KronGenerator s1() { return {Kind::S1, 0}; }
    static KronGenerator p(int n);
    static KronGenerator i(int n);
    static KronGenerator one() { return {Kind::One, 0}; }
    bool operator==(const KronGenerator& o) const = default;
    std::string toString() const;
};

KronLattice dimVector(const KronGenerator& g);

// scalar * [gen] * K_shift, torus shifts collected on the right
struct DictionaryElement {
    RatFunc scalar;
    KronGenerator gen;
    KronLattice shift;
    bool operator==(const DictionaryElement& o) const {
        return scalar == o.scalar && gen == o.gen && shift == o.shift;
    }
    std::string toString() const;
};

enum class SerreGenerator { B0, B1, K0, K1 };

// images of the Serre generators in the Kronecker iHall algebra
DictionaryElement psiImage(SerreGenerator g);

// reflection operators on generators and on the torus lattice
KronLattice reflectPlusLattice(const KronLattice& b);
KronLattice reflectMinusLattice(const KronLattice& b);
DictionaryElement reflectPlus(const DictionaryElement& e);
DictionaryElement reflectMinus(const DictionaryElement& e);

// psi-image of the real root vector B_{n delta + alpha1} (sign +) or
// B_{-(n+1) delta + alpha1} (sign -), built by iterating the reflections
DictionaryElement bImage(int n, int sign);

// derived-equivalence dictionary into the projective-line side
SymElem gammaImage(const DictionaryElement& e);

// K0(Kronecker) -> K0(P^1): alpha1 -> (1,0), alpha0 -> (-1,1)
K0Class latticeToK0(const KronLattice& b);

Report verifyDiagram();

}  // namespace ihall
