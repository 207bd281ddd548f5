#pragma once

#include <map>

#include "ihall/partition.hpp"
#include "ihall/quadratic.hpp"
#include "ihall/report.hpp"
#include "ihall/sheaves.hpp"

namespace ihall {

// Basis key [M_nu] * [K]^a of the local iHall algebra at a point; a counts
// acyclic-complex classes in residue-field units.
struct LocalKey {
    Partition nu;
    int kpow = 0;
    std::strong_ordering operator<=>(const LocalKey&) const = default;
};

// Finite linear combination of local basis keys with exact Q(sqrt(qx))
// coefficients. All terms of a product of homogeneous inputs satisfy
// |nu| + 2a = const (length conservation).
class LocalHallElement {
public:
    explicit LocalHallElement(long qx) : qx_(qx) {}
    static LocalHallElement unit(long qx);
    static LocalHallElement single(long qx, const Partition& nu, int kpow = 0,
                                   const Quadratic& c = Quadratic(1));

    long qx() const { return qx_; }
    bool isZero() const { return t_.empty(); }
    const std::map<LocalKey, Quadratic>& terms() const { return t_; }
    void add(const LocalKey& k, const Quadratic& c);

    LocalHallElement operator+(const LocalHallElement& o) const;
    LocalHallElement operator-(const LocalHallElement& o) const;
    LocalHallElement operator*(const LocalHallElement& o) const;  // linearized iProduct
    LocalHallElement scaled(const Quadratic& c) const;
    LocalHallElement shiftK(int a) const;

    bool operator==(const LocalHallElement& o) const { return qx_ == o.qx_ && t_ == o.t_; }
    std::string toString() const;

private:
    long qx_;
    std::map<LocalKey, Quadratic> t_;
};

inline LocalHallElement rscale(const LocalHallElement& x, const Rat& s) {
    return x.scaled(Quadratic(s));
}

// [M_lambda] * [M_mu] in the reduced basis {[M_nu]*[K]^a}; memoized.
// Extensions of the stalk complex of M_lambda by that of M_mu are graded by
// the hom component f; a stratum with (ker, im, coker) = (kappa, iota,
// gamma) contributes middles [M_nu]*[K]^{|iota|} with multiplicity
//   g^lam_{iota,kappa} g^mu_{gamma,iota} |Aut iota| g^nu_{kappa,gamma}
//   |Aut kappa| |Aut gamma| / |Aut nu|,
// the pushed extension classes being counted through the Riedtman-Peng
// formula; the overall 1/|Hom(lambda,mu)| and the constant push fibers
// cancel against the Ext counts since the torsion Euler form vanishes.
const LocalHallElement& iProduct(const Partition& lam, const Partition& mu, long qx);

// v_x/(qx-1) [M_(m)]
LocalHallElement localTheta(int m, long qx);
// sum_{lam |- m} n_x(len(lam)-1) [M_lam]/|Aut|
LocalHallElement localP(int m, long qx);
// v_x^m [m]/m P_m - delta_{m even} v_x^{m/2} [m/2]/m [K^{m/2}]
LocalHallElement localH(int m, long qx);

// n_x(l) = prod_{i=1..l} (1 - qx^i)
Rat nFactor(int l, long qx);

Report checkCommutativity(long qx, int sizeBound);
Report checkAssociativity(long qx, int sizeBound);
// 1 + sum [M_(m)] z^m = exp((v_x - v_x^-1) sum H_{m,x} z^m) up to z^order
Report verifyLocalExp(long qx, int order);

}  // namespace ihall
