#include "ihall/curve.hpp"

#include <mutex>
#include <sstream>

namespace ihall {

GroundField::GroundField(long q_) : q(q_) {
    if (!isPrimePower(q, p, e)) throw UnsupportedField("GroundField: q must be a prime power >= 2");
}

std::string PointIndex::toString() const {
    std::ostringstream os;
    os << "x[" << degree << "," << index << "]";
    return os.str();
}

namespace {

int moebius(int n) {
    int m = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

Int countPoints(long q, int d) {
    GroundField f(q);
    if (d < 1) throw DomainViolation("countPoints: degree must be positive");
    if (d == 1) return Int(q) + 1;
    // necklace count of monic irreducibles: (1/d) sum_{e|d} mu(e) q^{d/e}
    Int s = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        s += moebius(e) * ipow(q, d / e);
    }
    return s / d;
}

PointCensus::PointCensus(long q, int dMax) : q_(q) {
    n_.resize(static_cast<size_t>(dMax) + 1);
    for (int d = 1; d <= dMax; ++d) n_[static_cast<size_t>(d)] = countPoints(q, d);
}

const Int& PointCensus::count(int d) const {
    if (d < 1 || d > bound()) throw DomainViolation("PointCensus: degree out of range");
    return n_[static_cast<size_t>(d)];
}

const PointCensus& PointCensus::get(long q, int dMax) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::unique_ptr<PointCensus>> cache;
    std::lock_guard<std::mutex> lock(mu);
    // cache the largest bound seen per q
    for (auto& [k, v] : cache)
        if (k.first == q && k.second >= dMax) return *v;
    auto key = std::make_pair(q, dMax);
    auto it = cache.emplace(key, std::unique_ptr<PointCensus>(new PointCensus(q, dMax))).first;
    return *it->second;
}

Report verifyZetaIdentity(long q, int nMax) {
    Report rep;
    const PointCensus& c = PointCensus::get(q, nMax);
    for (int n = 1; n <= nMax; ++n) {
        CaseTimer timer;
        Int lhs = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) lhs += Int(d) * c.count(d);
        Int rhs = ipow(q, n) + 1;
        CaseRecord rec;
        rec.ms = timer.ms();
        rec.suite = "zeta";
        rec.id = "q=" + std::to_string(q) + ",n=" + std::to_string(n);
        rec.params = {{"q", q}, {"n", n}};
        rec.pass = (lhs == rhs);
        if (!rec.pass)
            rec.witness = {"sum d*N_d = " + lhs.get_str() + " expected " + rhs.get_str()};
        rep.add(rec);
    }
    return rep;
}

std::vector<ClosedPoint> enumerateClosedPoints(long p, int dMax) {
    long pp;
    int pe;
    if (!isPrimePower(p, pp, pe) || pe != 1)
        throw UnsupportedField("enumerateClosedPoints: prime fields only");
    std::vector<ClosedPoint> out;
    auto irr = modp::monicIrreducibles(p, dMax);
    for (int d = 1; d <= dMax; ++d) {
        long idx = 1;
        if (d == 1) {
            // affine points T - a in order a = 0..p-1, then infinity (X0)
            for (long a = 0; a < p; ++a) {
                ClosedPoint cp;
                cp.idx = {1, idx++};
                cp.poly = {static_cast<int>((p - a) % p), 1};
                out.push_back(cp);
            }
            ClosedPoint inf;
            inf.idx = {1, idx++};
            inf.infinity = true;
            out.push_back(inf);
        } else {
            for (const auto& f : irr[static_cast<size_t>(d)]) {
                ClosedPoint cp;
                cp.idx = {d, idx++};
                cp.poly = f;
                out.push_back(cp);
            }
        }
    }
    return out;
}

int profileDegree(const Profile& n) {
    int m = 0;
    for (auto& [x, nx] : n) m += x.degree * nx;
    return m;
}

namespace {

// shared skeleton for profile/type enumeration: walk points in canonical
// order, assigning either nothing or a value consuming part of the budget
template <class Value, class Gen>
void enumerateSupports(long q, int m, const Gen& valuesOfWeight,
                       std::vector<std::map<PointIndex, Value>>& out) {
    const PointCensus& census = PointCensus::get(q, std::max(m, 1));
    std::vector<PointIndex> pts;
    for (int d = 1; d <= m; ++d) {
        long nd = census.count(d).get_si();
        for (long i = 1; i <= nd; ++i) pts.push_back({d, i});
    }
    std::map<PointIndex, Value> cur;
    auto rec = [&](auto&& self, size_t at, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (at >= pts.size()) return;
        const PointIndex& x = pts[at];
        // skip this point
        self(self, at + 1, rem);
        // or assign any value of weight d_x * w <= rem
        for (int w = 1; w * x.degree <= rem; ++w)
            for (const Value& v : valuesOfWeight(w)) {
                cur[x] = v;
                self(self, at + 1, rem - w * x.degree);
                cur.erase(x);
            }
    };
    if (m >= 0) rec(rec, 0, m);
}

}  // namespace

std::vector<Profile> enumerateCyclicProfiles(long q, int m) {
    GroundField check(q);
    std::vector<Profile> out;
    auto values = [](int w) { return std::vector<int>{w}; };
    enumerateSupports<int>(q, m, values, out);
    return out;
}

std::vector<TorsionSupport> enumerateTorsionTypes(long q, int m) {
    GroundField check(q);
    std::vector<TorsionSupport> out;
    auto values = [](int w) { return Partition::all(w); };
    enumerateSupports<Partition>(q, m, values, out);
    return out;
}

Profile factorBinaryForm(const std::vector<int>& coeffs, long p,
                         const std::vector<ClosedPoint>& pts) {
    int m = static_cast<int>(coeffs.size()) - 1;
    int degT = -1;
    for (int i = 0; i <= m; ++i)
        if (coeffs[static_cast<size_t>(i)] % p != 0) degT = i;
    if (degT < 0) throw DomainViolation("factorBinaryForm: zero form");

    Profile prof;
    auto lookup = [&](const modp::Poly& f, bool infinity) -> PointIndex {
        for (const auto& cp : pts)
            if (cp.infinity == infinity && (infinity || cp.poly == f)) return cp.idx;
        throw DomainViolation("factorBinaryForm: point table too small");
    };

    if (degT < m) prof[lookup({}, true)] = m - degT;  // X0 multiplicity

    modp::Poly f(coeffs.begin(), coeffs.begin() + degT + 1);
    modp::trim(f);
    // peel monic irreducible factors by trial division
    for (const auto& cp : pts) {
        if (cp.infinity) continue;
        int mult = 0;
        while (modp::degree(f) >= modp::degree(cp.poly) && modp::divides(cp.poly, f, p)) {
            // exact division f / cp.poly
            modp::Poly quo;
            modp::Poly rem = f;
            int dq = modp::degree(f) - modp::degree(cp.poly);
            quo.assign(static_cast<size_t>(dq) + 1, 0);
            for (int k = dq; k >= 0; --k) {
                int lead = (modp::degree(rem) == k + modp::degree(cp.poly)) ? rem.back() : 0;
                // cp.poly monic
                quo[static_cast<size_t>(k)] = lead;
                if (lead) {
                    modp::Poly shifted(static_cast<size_t>(k), 0);
                    shifted.insert(shifted.end(), cp.poly.begin(), cp.poly.end());
                    for (auto& c : shifted) c = static_cast<int>((static_cast<long>(c) * lead) % p);
                    rem = modp::sub(rem, shifted, p);
                }
            }
            f = quo;
            ++mult;
            if (modp::degree(f) == 0) break;
        }
        if (mult) prof[cp.idx] = mult;
        if (modp::degree(f) <= 0) break;
    }
    if (modp::degree(f) > 0) throw DomainViolation("factorBinaryForm: incomplete factorization");
    return prof;
}

std::string profileToString(const Profile& n) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [x, nx] : n) {
        if (!first) os << ", ";
        os << x.toString() << ":" << nx;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace ihall
