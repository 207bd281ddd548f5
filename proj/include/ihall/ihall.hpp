#pragma once

#include <map>
#include <string>

#include "ihall/jordan.hpp"
#include "ihall/qsym.hpp"
#include "ihall/ratfunc.hpp"
#include "ihall/report.hpp"
#include "ihall/sheaves.hpp"

namespace ihall {

// Canonical basis key [M]*[K_alpha]. Resolved keys carry a full sheaf class;
// the two aggregate kinds house the sums the symbolic identities close over:
//   AggA(s,k) = sum_{||n||=k} [O(s) + S_n]   (k >= 1)
//   AggT(k)   = sum_{||n||=k} [S_n]          (k >= 1)
// AggA(s,0) and AggT(0) canonicalize to resolved keys. Torsion-bearing
// resolved keys never mix with aggregate keys inside one element.
struct BasisKey {
    enum class Kind { Resolved, AggA, AggT };
    Kind kind = Kind::Resolved;
    SheafClass sheaf;  // Resolved only
    int s = 0, k = 0;  // aggregate parameters
    K0Class torus;

    static BasisKey resolved(SheafClass m, K0Class t = {});
    static BasisKey unit(K0Class t = {});
    static BasisKey aggA(int s, int k, K0Class t = {});
    static BasisKey aggT(int k, K0Class t = {});

    bool isAggregate() const { return kind != Kind::Resolved; }
    // class of the underlying module plus twice the torus class; conserved
    // by every product of stalk classes
    K0Class conservedClass() const;
    std::strong_ordering operator<=>(const BasisKey&) const = default;
    std::string toString() const;
};

// Finite linear combination of basis keys. S = RatFunc gives the symbolic
// Q(v) tier, S = Quadratic the point-resolved numeric tier.
template <class S>
class HallElement {
public:
    HallElement() = default;
    static HallElement single(const BasisKey& k, const S& c);

    bool isZero() const { return t_.empty(); }
    const std::map<BasisKey, S>& terms() const { return t_; }
    void add(const BasisKey& k, const S& c);

    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement scaled(const S& c) const;
    HallElement shiftTorus(const K0Class& a) const;

    bool operator==(const HallElement& o) const { return t_ == o.t_; }
    std::string toString() const;
    nlohmann::json toJson() const;

private:
    std::map<BasisKey, S> t_;
};

template <class S>
HallElement<S> HallElement<S>::single(const BasisKey& k, const S& c) {
    HallElement e;
    e.add(k, c);
    return e;
}

template <class S>
void HallElement<S>::add(const BasisKey& k, const S& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (!c.isZero()) t_[k] = c;
        return;
    }
    it->second += c;
    if (it->second.isZero()) t_.erase(it);
}

template <class S>
HallElement<S> HallElement<S>::operator+(const HallElement& o) const {
    HallElement r = *this;
    for (auto& [k, c] : o.t_) r.add(k, c);
    return r;
}

template <class S>
HallElement<S> HallElement<S>::operator-(const HallElement& o) const {
    HallElement r = *this;
    for (auto& [k, c] : o.t_) r.add(k, S() - c);
    return r;
}

template <class S>
HallElement<S> HallElement<S>::scaled(const S& c) const {
    HallElement r;
    if (c.isZero()) return r;
    for (auto& [k, v] : t_) r.t_[k] = v * c;
    return r;
}

template <class S>
HallElement<S> HallElement<S>::shiftTorus(const K0Class& a) const {
    HallElement r;
    for (auto& [k, v] : t_) {
        BasisKey nk = k;
        nk.torus = k.torus + a;
        r.t_[nk] = v;
    }
    return r;
}

template <class S>
std::string HallElement<S>::toString() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.toString() + ")*" + k.toString();
    }
    return s;
}

template <class S>
nlohmann::json HallElement<S>::toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, c] : t_) arr.push_back({{"key", k.toString()}, {"coeff", c.toString()}});
    return arr;
}

using SymElem = HallElement<RatFunc>;
using NumElem = HallElement<Quadratic>;

template <class S>
HallElement<S> rscale(const HallElement<S>& x, const Rat& r) {
    return x.scaled(S(r));
}

SymElem symUnit(K0Class torus = {});
NumElem numUnit(K0Class torus = {});

// ---- symbolic aggregate tier ----

// [O(r)]*[O(s)] expanded per the three line-by-line product identities
SymElem lineTimesLine(int r, int s);
// Theta_m * [O(r)] and [O(r)] * Theta_m in the aggregate basis (m >= 1)
SymElem thetaTimesLine(int m, int r);
SymElem lineTimesTheta(int r, int m);
// Theta_m as an element (scalar for m = 0, AggT for m >= 1, zero for m < 0)
SymElem thetaSymbol(int m);

Report verifyPropOO(int rLo, int rHi, int mMax);
Report verifyTOTO(int rLo, int rHi, int mMax);

// ---- numeric point-resolved tier ----

NumElem thetaHat(int m, long q);
NumElem thetaHatViaCokernels(int m, int s, long p);
NumElem hHat(int m, long q);

NumElem lineTimesTorsion(int r, const TorsionType& t, long q);
NumElem torsionTimesLine(const TorsionType& t, int r, long q);
NumElem torsionTimesTorsion(const TorsionType& a, const TorsionType& b, long q);

// product dispatch over the supported generator families; unsupported key
// pairs (e.g. two line bundles at numeric q) throw UnsupportedPair
NumElem mulNum(const NumElem& a, const NumElem& b, long q);

// aggregate -> resolved expansion at numeric q (specializes scalars)
NumElem expandAggregate(const SymElem& e, long q);

Report verifyThetaCommutativity(long q, int bound);
Report verifyExpIdentity(long q, int order);
Report verifyHCommutator(long q, int mMax, int rLo, int rHi);

// generator images of the current-presentation homomorphism
struct DrGenerator {
    enum class Kind { K1, C, B1r, Theta, H } kind;
    int param = 0;  // r for B1r, m for Theta/H
};
SymElem omegaImageSym(const DrGenerator& g);          // K1, C, B1r
NumElem omegaImageNum(const DrGenerator& g, long q);  // all generators

}  // namespace ihall
