#include "ihall/jordan.hpp"

#include <mutex>
#include <sstream>

#include "ihall/qsym.hpp"
#include "ihall/series.hpp"

namespace ihall {

LocalHallElement LocalHallElement::unit(long qx) {
    return single(qx, Partition(), 0, Quadratic(1));
}

LocalHallElement LocalHallElement::single(long qx, const Partition& nu, int kpow,
                                          const Quadratic& c) {
    LocalHallElement e(qx);
    e.add({nu, kpow}, c);
    return e;
}

void LocalHallElement::add(const LocalKey& k, const Quadratic& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (!c.isZero()) t_[k] = c;
        return;
    }
    it->second += c;
    if (it->second.isZero()) t_.erase(it);
}

LocalHallElement LocalHallElement::operator+(const LocalHallElement& o) const {
    LocalHallElement r = *this;
    for (auto& [k, c] : o.t_) r.add(k, c);
    return r;
}

LocalHallElement LocalHallElement::operator-(const LocalHallElement& o) const {
    LocalHallElement r = *this;
    for (auto& [k, c] : o.t_) r.add(k, -c);
    return r;
}

LocalHallElement LocalHallElement::scaled(const Quadratic& c) const {
    LocalHallElement r(qx_);
    if (c.isZero()) return r;
    for (auto& [k, v] : t_) r.t_[k] = v * c;
    return r;
}

LocalHallElement LocalHallElement::shiftK(int a) const {
    LocalHallElement r(qx_);
    for (auto& [k, v] : t_) r.t_[{k.nu, k.kpow + a}] = v;
    return r;
}

LocalHallElement LocalHallElement::operator*(const LocalHallElement& o) const {
    LocalHallElement r(qx_);
    for (auto& [k1, c1] : t_)
        for (auto& [k2, c2] : o.t_) {
            const LocalHallElement& p = iProduct(k1.nu, k2.nu, qx_);
            for (auto& [pk, pc] : p.terms())
                r.add({pk.nu, pk.kpow + k1.kpow + k2.kpow}, pc * c1 * c2);
        }
    return r;
}

std::string LocalHallElement::toString() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first) os << " + ";
        os << "(" << c.toString() << ")*[M" << k.nu.toString() << "]";
        if (k.kpow) os << "*K^" << k.kpow;
        first = false;
    }
    return os.str();
}

namespace {

LocalHallElement computeIProduct(const Partition& lam, const Partition& mu, long qx) {
    LocalHallElement out(qx);
    const int L = lam.size(), M = mu.size();
    const auto& lamTab = hallTable(lam, qx);
    const auto& muTab = hallTable(mu, qx);

    // strata over the image type iota of the hom component
    for (int a = 0; a <= std::min(L, M); ++a) {
        for (const Partition& iota : Partition::all(a)) {
            Int autIota = autOrderPartition(iota, qx);
            for (const Partition& kappa : Partition::all(L - a)) {
                auto itl = lamTab.find({iota, kappa});
                if (itl == lamTab.end()) continue;  // g^lam_{iota,kappa}
                for (const Partition& gamma : Partition::all(M - a)) {
                    auto itm = muTab.find({gamma, iota});
                    if (itm == muTab.end()) continue;  // g^mu_{gamma,iota}
                    Int fCount = itl->second * itm->second * autIota;
                    Int autKG = autOrderPartition(kappa, qx) * autOrderPartition(gamma, qx);
                    // extension classes of kappa by gamma with middle nu
                    for (const Partition& nu : Partition::all(L + M - 2 * a)) {
                        Int g = hallNumber(nu, kappa, gamma, qx);
                        if (g == 0) continue;
                        Rat coeff = Rat(fCount * g * autKG) / Rat(autOrderPartition(nu, qx));
                        out.add({nu, a}, Quadratic(coeff));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

const LocalHallElement& iProduct(const Partition& lam, const Partition& mu, long qx) {
    if (lam.size() + mu.size() > Caps::get().hallSize)
        throw SizeCapExceeded("iProduct: size beyond cap");
    static std::mutex mtx;
    static std::map<std::tuple<Partition, Partition, long>, LocalHallElement> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(lam, mu, qx);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, computeIProduct(lam, mu, qx)).first;
    return it->second;
}

Rat nFactor(int l, long qx) {
    Rat r(1);
    for (int i = 1; i <= l; ++i) r *= Rat(1) - Rat(ipow(qx, i));
    return r;
}

LocalHallElement localTheta(int m, long qx) {
    Quadratic vx = Quadratic::sqrtOf(qx);
    return LocalHallElement::single(qx, Partition{m}, 0, vx / Quadratic(qx - 1));
}

LocalHallElement localP(int m, long qx) {
    LocalHallElement e(qx);
    for (const Partition& lam : Partition::all(m)) {
        Rat c = nFactor(lam.length() - 1, qx) / Rat(autOrderPartition(lam, qx));
        e.add({lam, 0}, Quadratic(c));
    }
    return e;
}

LocalHallElement localH(int m, long qx) {
    Quadratic vm = Quadratic::sqrtPow(qx, m);
    Quadratic qm = quantumIntegerAt(m, qx) * rscale(vm, Rat(1, m));
    LocalHallElement e = localP(m, qx).scaled(qm);
    if (m % 2 == 0) {
        Quadratic c = Quadratic::sqrtPow(qx, m / 2) * quantumIntegerAt(m / 2, qx);
        e.add({Partition(), m / 2}, -rscale(c, Rat(1, m)));
    }
    return e;
}

Report checkCommutativity(long qx, int sizeBound) {
    Report rep;
    for (int s1 = 1; s1 < sizeBound; ++s1)
        for (int s2 = 1; s1 + s2 <= sizeBound; ++s2)
            for (const Partition& lam : Partition::all(s1))
                for (const Partition& mu : Partition::all(s2)) {
                    CaseTimer timer;
                    CaseRecord rec;
                    rec.suite = "jordan-comm";
                    rec.id = lam.toString() + "*" + mu.toString() + ",q=" + std::to_string(qx);
                    rec.params = {{"q", qx}};
                    LocalHallElement d = iProduct(lam, mu, qx) - iProduct(mu, lam, qx);
                    rec.pass = d.isZero();
                    if (!rec.pass) rec.witness = {d.toString()};
                    rec.ms = timer.ms();
                    rep.add(rec);
                }
    return rep;
}

Report checkAssociativity(long qx, int sizeBound) {
    Report rep;
    for (int s1 = 1; s1 + 2 <= sizeBound; ++s1)
        for (int s2 = 1; s1 + s2 + 1 <= sizeBound; ++s2)
            for (int s3 = 1; s1 + s2 + s3 <= sizeBound; ++s3)
                for (const Partition& a : Partition::all(s1))
                    for (const Partition& b : Partition::all(s2))
                        for (const Partition& c : Partition::all(s3)) {
                            CaseTimer timer;
                            CaseRecord rec;
                            rec.suite = "jordan-assoc";
                            rec.id = a.toString() + "*" + b.toString() + "*" + c.toString() +
                                     ",q=" + std::to_string(qx);
                            rec.params = {{"q", qx}};
                            LocalHallElement ea = LocalHallElement::single(qx, a);
                            LocalHallElement eb = LocalHallElement::single(qx, b);
                            LocalHallElement ec = LocalHallElement::single(qx, c);
                            LocalHallElement d = (ea * eb) * ec - ea * (eb * ec);
                            rec.pass = d.isZero();
                            if (!rec.pass) rec.witness = {d.toString()};
                            rec.ms = timer.ms();
                            rep.add(rec);
                        }
    return rep;
}

Report verifyLocalExp(long qx, int order) {
    Report rep;
    Quadratic vx = Quadratic::sqrtOf(qx);
    Quadratic coef = vx - vx.inverse();
    LocalHallElement zero(qx);
    Series<LocalHallElement> hs(order, zero);
    for (int m = 1; m <= order; ++m) hs.at(m) = localH(m, qx).scaled(coef);
    // coefficients pairwise commute: the H_m live in one commutative algebra;
    // assert on the smallest instance as a guard
    if (order >= 2) {
        LocalHallElement h1 = hs.at(1), h2 = hs.at(2);
        if (!((h1 * h2) - (h2 * h1)).isZero())
            throw std::logic_error("verifyLocalExp: coefficients do not commute");
    }
    Series<LocalHallElement> lhs(order, zero);
    lhs.at(0) = LocalHallElement::unit(qx);
    for (int m = 1; m <= order; ++m)
        lhs.at(m) = LocalHallElement::single(qx, Partition{m});
    Series<LocalHallElement> rhs = Series<LocalHallElement>::exp(hs, LocalHallElement::unit(qx));
    for (int m = 0; m <= order; ++m) {
        CaseTimer timer;
        CaseRecord rec;
        rec.suite = "local-exp";
        rec.id = "q_x=" + std::to_string(qx) + ",z^" + std::to_string(m);
        rec.params = {{"q_x", qx}, {"order", order}};
        LocalHallElement d = lhs.at(m) - rhs.at(m);
        rec.pass = d.isZero();
        if (!rec.pass) rec.witness = {d.toString()};
        rec.ms = timer.ms();
        rep.add(rec);
    }
    return rep;
}

}  // namespace ihall
