#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ihall/curve.hpp"
#include "ihall/partition.hpp"
#include "ihall/rational.hpp"

namespace ihall {

struct K0Class {
    long rank = 0;
    long deg = 0;
    K0Class operator+(const K0Class& o) const { return {rank + o.rank, deg + o.deg}; }
    K0Class operator-(const K0Class& o) const { return {rank - o.rank, deg - o.deg}; }
    K0Class operator*(long n) const { return {rank * n, deg * n}; }
    std::strong_ordering operator<=>(const K0Class&) const = default;
    bool isZero() const { return rank == 0 && deg == 0; }
    std::string toString() const;
};

// torsion sheaf class: one partition per supporting closed point
class TorsionType {
public:
    TorsionType() = default;
    explicit TorsionType(std::map<PointIndex, Partition> m) : m_(std::move(m)) { prune(); }

    static TorsionType cyclic(const Profile& n);
    static TorsionType atPoint(const PointIndex& x, const Partition& lam);

    bool empty() const { return m_.empty(); }
    int degree() const;  // sum d_x |lambda_x|
    const std::map<PointIndex, Partition>& parts() const { return m_; }
    void set(const PointIndex& x, const Partition& lam);

    std::strong_ordering operator<=>(const TorsionType& o) const { return m_ <=> o.m_; }
    bool operator==(const TorsionType& o) const { return m_ == o.m_; }
    std::string toString() const;

private:
    std::map<PointIndex, Partition> m_;
    void prune();
};

// isoclass of a coherent sheaf: line-bundle degrees plus a torsion type
class SheafClass {
public:
    SheafClass() = default;
    SheafClass(std::vector<int> bundleDegrees, TorsionType tor);
    static SheafClass line(int d);
    static SheafClass linePair(int a, int b);
    static SheafClass torsion(TorsionType t);
    static SheafClass lineWithTorsion(int d, TorsionType t);

    bool isZero() const { return bundle_.empty() && tor_.empty(); }
    long rank() const { return static_cast<long>(bundle_.size()); }
    const std::vector<int>& bundle() const { return bundle_; }
    const TorsionType& torsion() const { return tor_; }
    K0Class k0() const;

    std::strong_ordering operator<=>(const SheafClass&) const = default;
    std::string toString() const;

private:
    std::vector<int> bundle_;  // ascending
    TorsionType tor_;
};

inline K0Class k0Class(const SheafClass& m) { return m.k0(); }

// <a,b> = rk a * rk b + rk a * deg b - rk b * deg a, fixed so that
// <O(r),O(s)> = s - r + 1 and <O,S> = deg S.
long eulerForm(const K0Class& a, const K0Class& b);

// dim over F_q of Hom / Ext^1 between sheaf classes (additive over direct
// summands; torsion dims need only the point degrees)
long homDim(const SheafClass& m, const SheafClass& n);
long extDim(const SheafClass& m, const SheafClass& n);

// |Aut| of a torsion module of type lambda over a residue field of size qx
Int autOrderPartition(const Partition& lam, long qx);
// product over the support, with qx = q^{d_x}
Int autOrder(const TorsionType& t, long q);

// |Hom| between torsion modules at one point: qx^{sum min(lambda_i, mu_j)}
Int homCountTorsion(const Partition& lam, const Partition& mu, long qx);
long homExponentTorsion(const Partition& lam, const Partition& mu);

// classical Hall numbers g^lambda_{mu,nu}(q): submodules of type nu with
// quotient of type mu inside the module of type lambda, by exhaustive
// invariant-subspace enumeration over GF(q), memoized per (lambda, q)
const std::map<std::pair<Partition, Partition>, Int>& hallTable(const Partition& lam, long q);
Int hallNumber(const Partition& lam, const Partition& mu, const Partition& nu, long q);

// number of injections M_iota -> M_lambda, and of surjections from a line
// bundle onto the cyclic module of length c
Int monoCount(const Partition& iota, const Partition& lam, long qx);
Int epiFromLineCount(int c, long qx);

// optional consistency mode: g^lambda_{mu,nu} is a polynomial in q of degree
// at most n(lambda) - n(mu) - n(nu); interpolate it from prime-field
// evaluations and evaluate at q. Disagreement with the direct enumeration
// would flag a field-arithmetic defect.
Int hallNumberInterpolated(const Partition& lam, const Partition& mu, const Partition& nu,
                           long q);

// Jordan type of a strictly nilpotent matrix
class GfMat;
Partition nilpotentType(const GfMat& t);
GfMat nilpotentJordan(const Partition& lam, const GF& f);

// caps, overridable via IHALL_CAP_OVERRIDE ("hall=7,torsion=8,brute_log2=26")
struct Caps {
    int hallSize = 6;       // max |lambda| for hall tables per residue field
    int torsionDegree = 6;  // max total torsion degree in numeric products
    int symbolicM = 8;
    long bruteLog2 = 26;  // oracle enumeration budget: p^dim <= 2^bruteLog2
    static const Caps& get();
};

}  // namespace ihall
