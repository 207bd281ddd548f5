#include "ihall/sheaves.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ihall/gf.hpp"

namespace ihall {

std::string K0Class::toString() const {
    std::ostringstream os;
    os << "(" << rank << "," << deg << ")";
    return os.str();
}

TorsionType TorsionType::cyclic(const Profile& n) {
    std::map<PointIndex, Partition> m;
    for (auto& [x, nx] : n)
        if (nx > 0) m[x] = Partition{nx};
    return TorsionType(std::move(m));
}

TorsionType TorsionType::atPoint(const PointIndex& x, const Partition& lam) {
    std::map<PointIndex, Partition> m;
    if (!lam.empty()) m[x] = lam;
    return TorsionType(std::move(m));
}

void TorsionType::prune() {
    for (auto it = m_.begin(); it != m_.end();)
        it = it->second.empty() ? m_.erase(it) : std::next(it);
}

int TorsionType::degree() const {
    int d = 0;
    for (auto& [x, lam] : m_) d += x.degree * lam.size();
    return d;
}

void TorsionType::set(const PointIndex& x, const Partition& lam) {
    if (lam.empty())
        m_.erase(x);
    else
        m_[x] = lam;
}

std::string TorsionType::toString() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [x, lam] : m_) {
        if (!first) os << "+";
        os << "S_" << x.toString() << "^" << lam.toString();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

SheafClass::SheafClass(std::vector<int> bundleDegrees, TorsionType tor)
    : bundle_(std::move(bundleDegrees)), tor_(std::move(tor)) {
    std::sort(bundle_.begin(), bundle_.end());
}

SheafClass SheafClass::line(int d) { return SheafClass({d}, TorsionType()); }
SheafClass SheafClass::linePair(int a, int b) { return SheafClass({a, b}, TorsionType()); }
SheafClass SheafClass::torsion(TorsionType t) { return SheafClass({}, std::move(t)); }
SheafClass SheafClass::lineWithTorsion(int d, TorsionType t) {
    return SheafClass({d}, std::move(t));
}

K0Class SheafClass::k0() const {
    K0Class c{rank(), 0};
    for (int d : bundle_) c.deg += d;
    c.deg += tor_.degree();
    return c;
}

std::string SheafClass::toString() const {
    std::ostringstream os;
    bool first = true;
    for (int d : bundle_) {
        if (!first) os << "+";
        os << "O(" << d << ")";
        first = false;
    }
    if (!tor_.empty()) {
        if (!first) os << "+";
        os << tor_.toString();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

long eulerForm(const K0Class& a, const K0Class& b) {
    return a.rank * b.rank + a.rank * b.deg - b.rank * a.deg;
}

namespace {

long homDimTorsionPair(const TorsionType& s, const TorsionType& t) {
    long dim = 0;
    for (auto& [x, lam] : s.parts()) {
        auto it = t.parts().find(x);
        if (it == t.parts().end()) continue;
        dim += x.degree * homExponentTorsion(lam, it->second);
    }
    return dim;
}

}  // namespace

long homDim(const SheafClass& m, const SheafClass& n) {
    long dim = 0;
    // line -> line
    for (int a : m.bundle())
        for (int b : n.bundle()) dim += std::max(0L, static_cast<long>(b) - a + 1);
    // line -> torsion: dim_Fq Hom(O(a), S_x^lam) = d_x |lam|
    dim += m.rank() * n.torsion().degree();
    // torsion -> line: 0; torsion -> torsion
    dim += homDimTorsionPair(m.torsion(), n.torsion());
    return dim;
}

long extDim(const SheafClass& m, const SheafClass& n) {
    // Serre duality: Ext^1(M,N) = D Hom(N, M(-2)); twisting fixes torsion
    long dim = 0;
    for (int a : m.bundle())
        for (int b : n.bundle()) dim += std::max(0L, static_cast<long>(a) - 2 - b + 1);
    // Ext^1(line, torsion) = 0; Ext^1(torsion, line) = D Hom(line, torsion)
    dim += n.rank() * m.torsion().degree();
    dim += homDimTorsionPair(n.torsion(), m.torsion());
    return dim;
}

Int autOrderPartition(const Partition& lam, long qx) {
    // a_lambda(q) = q^{|lam| + 2 n(lam)} prod_k phi_{m_k}(q^{-1})
    Rat r = Rat(ipow(qx, lam.size() + 2 * lam.nStat()));
    int maxPart = lam.empty() ? 0 : lam.part(0);
    for (int k = 1; k <= maxPart; ++k) {
        int mk = lam.multiplicity(k);
        for (int j = 1; j <= mk; ++j) r *= Rat(1) - Rat(1, ipow(qx, j));
    }
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("autOrderPartition: non-integer");
    return r.get_num();
}

Int autOrder(const TorsionType& t, long q) {
    Int a = 1;
    for (auto& [x, lam] : t.parts()) a *= autOrderPartition(lam, ipow(q, x.degree).get_si());
    return a;
}

long homExponentTorsion(const Partition& lam, const Partition& mu) {
    long e = 0;
    for (int a : lam.parts())
        for (int b : mu.parts()) e += std::min(a, b);
    return e;
}

Int homCountTorsion(const Partition& lam, const Partition& mu, long qx) {
    return ipow(qx, homExponentTorsion(lam, mu));
}

GfMat nilpotentJordan(const Partition& lam, const GF& f) {
    int n = lam.size();
    GfMat t(f, n, n);
    int off = 0;
    for (int s : lam.parts()) {
        // chain e_off -> e_off+1 -> ... -> e_off+s-1 -> 0, acting v -> v*T
        for (int i = 0; i + 1 < s; ++i) t.at(off + i, off + i + 1) = 1;
        off += s;
    }
    return t;
}

Partition nilpotentType(const GfMat& t) {
    int n = t.rows();
    std::vector<int> colCounts;
    GfMat pw = t;
    int prev = n;
    while (prev > 0) {
        int rk = pw.isZero() ? 0 : pw.rank();
        colCounts.push_back(prev - rk);
        if (rk == 0) break;
        prev = rk;
        pw = pw * t;
    }
    // colCounts is the conjugate partition
    return Partition(colCounts).conjugate();
}

namespace {

// apply the row-vector action v -> v * T
std::vector<int> applyRow(const std::vector<int>& v, const GfMat& t) {
    const GF& f = t.field();
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        int c = v[i];
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            r[j] = f.add(r[j], f.mul(c, t.at(static_cast<int>(i), static_cast<int>(j))));
    }
    return r;
}

// reduce w against RREF rows; returns true when w lies in the row space
bool reduceInto(std::vector<int>& w, const std::vector<std::vector<int>>& rows,
                const std::vector<int>& piv, const GF& f) {
    for (size_t i = 0; i < rows.size(); ++i) {
        int c = w[static_cast<size_t>(piv[i])];
        if (c == 0) continue;
        for (size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, rows[i][j]));
    }
    for (int x : w)
        if (x != 0) return false;
    return true;
}

using HallMap = std::map<std::pair<Partition, Partition>, Int>;

HallMap computeHallTable(const Partition& lam, long q) {
    const GF& f = GF::get(q);
    const int n = lam.size();
    GfMat t = nilpotentJordan(lam, f);
    HallMap table;

    std::vector<int> comb;
    for (int k = 0; k <= n; ++k) {
        // iterate pivot-column combinations piv[0] < ... < piv[k-1]
        comb.assign(static_cast<size_t>(k), 0);
        std::iota(comb.begin(), comb.end(), 0);
        bool more = (k <= n);
        while (more) {
            // free positions: (row i, col c) with c > piv[i], c not a pivot
            std::vector<std::pair<int, int>> freePos;
            std::vector<bool> isPivot(static_cast<size_t>(n), false);
            for (int p : comb) isPivot[static_cast<size_t>(p)] = true;
            for (int i = 0; i < k; ++i)
                for (int c = comb[static_cast<size_t>(i)] + 1; c < n; ++c)
                    if (!isPivot[static_cast<size_t>(c)]) freePos.push_back({i, c});

            std::vector<int> assign(freePos.size(), 0);
            bool moreAssign = true;
            while (moreAssign) {
                std::vector<std::vector<int>> rows(static_cast<size_t>(k),
                                                   std::vector<int>(static_cast<size_t>(n), 0));
                for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(comb[static_cast<size_t>(i)])] = 1;
                for (size_t a = 0; a < freePos.size(); ++a)
                    rows[static_cast<size_t>(freePos[a].first)][static_cast<size_t>(freePos[a].second)] = assign[a];

                // invariance of the row space under t
                bool invariant = true;
                for (int i = 0; i < k && invariant; ++i) {
                    std::vector<int> w = applyRow(rows[static_cast<size_t>(i)], t);
                    invariant = reduceInto(w, rows, comb, f);
                }
                if (invariant) {
                    // type of the submodule
                    GfMat tsub(f, k, k);
                    for (int i = 0; i < k; ++i) {
                        std::vector<int> u = applyRow(rows[static_cast<size_t>(i)], t);
                        for (int j = 0; j < k; ++j)
                            tsub.at(i, j) = u[static_cast<size_t>(comb[static_cast<size_t>(j)])];
                    }
                    // type of the quotient, in the non-pivot coordinates
                    std::vector<int> np;
                    for (int c = 0; c < n; ++c)
                        if (!isPivot[static_cast<size_t>(c)]) np.push_back(c);
                    GfMat tq(f, n - k, n - k);
                    for (size_t ci = 0; ci < np.size(); ++ci) {
                        std::vector<int> e(static_cast<size_t>(n), 0);
                        e[static_cast<size_t>(np[ci])] = 1;
                        std::vector<int> u = applyRow(e, t);
                        // reduce modulo the subspace
                        for (size_t i = 0; i < rows.size(); ++i) {
                            int c0 = u[static_cast<size_t>(comb[i])];
                            if (c0 == 0) continue;
                            for (size_t j = 0; j < u.size(); ++j)
                                u[j] = f.sub(u[j], f.mul(c0, rows[i][j]));
                        }
                        for (size_t cj = 0; cj < np.size(); ++cj)
                            tq.at(static_cast<int>(ci), static_cast<int>(cj)) =
                                u[static_cast<size_t>(np[cj])];
                    }
                    Partition sub = nilpotentType(tsub);
                    Partition quot = nilpotentType(tq);
                    table[{quot, sub}] += 1;
                }

                // next free assignment
                moreAssign = false;
                for (size_t a = 0; a < assign.size(); ++a) {
                    if (assign[a] + 1 < q) {
                        ++assign[a];
                        std::fill(assign.begin(), assign.begin() + static_cast<long>(a), 0);
                        moreAssign = true;
                        break;
                    }
                }
            }

            // next pivot combination
            more = false;
            for (int i = k - 1; i >= 0; --i) {
                if (comb[static_cast<size_t>(i)] < n - (k - i)) {
                    ++comb[static_cast<size_t>(i)];
                    for (int j = i + 1; j < k; ++j)
                        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return table;
}

}  // namespace

const HallMap& hallTable(const Partition& lam, long q) {
    if (lam.size() > Caps::get().hallSize)
        throw SizeCapExceeded("hallTable: |lambda| beyond cap");
    static std::mutex mu;
    static std::map<std::pair<Partition, long>, HallMap> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(lam, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, computeHallTable(lam, q)).first;
    return it->second;
}

Int hallNumber(const Partition& lam, const Partition& mu, const Partition& nu, long q) {
    if (mu.size() + nu.size() != lam.size()) return 0;
    const auto& tab = hallTable(lam, q);
    auto it = tab.find({mu, nu});
    return it == tab.end() ? Int(0) : it->second;
}

Int monoCount(const Partition& iota, const Partition& lam, long qx) {
    // injections = (submodules of type iota) * |Aut(iota)|
    Int subs = 0;
    for (const auto& [key, cnt] : hallTable(lam, qx))
        if (key.second == iota) subs += cnt;
    return subs * autOrderPartition(iota, qx);
}

Int epiFromLineCount(int c, long qx) {
    if (c < 0) throw DomainViolation("epiFromLineCount: negative length");
    if (c == 0) return 1;
    return ipow(qx, c) - ipow(qx, c - 1);
}

Int hallNumberInterpolated(const Partition& lam, const Partition& mu, const Partition& nu,
                           long q) {
    if (mu.size() + nu.size() != lam.size()) return 0;
    long degBound = lam.nStat() - mu.nStat() - nu.nStat();
    if (degBound < 0) return 0;
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    size_t samples = static_cast<size_t>(degBound) + 1;
    if (samples > std::size(primes))
        throw SizeCapExceeded("hallNumberInterpolated: degree beyond the sample table");
    // Lagrange interpolation at the prime sample points, evaluated at q
    Rat value(0);
    for (size_t i = 0; i < samples; ++i) {
        Rat term(hallNumber(lam, mu, nu, primes[i]));
        for (size_t j = 0; j < samples; ++j) {
            if (j == i) continue;
            term *= Rat(q - primes[j]);
            term /= Rat(primes[i] - primes[j]);
        }
        value += term;
    }
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("hallNumberInterpolated: non-integer interpolation");
    return value.get_num();
}

const Caps& Caps::get() {
    static Caps caps = [] {
        Caps c;
        if (const char* env = std::getenv("IHALL_CAP_OVERRIDE")) {
            std::string s(env);
            std::istringstream is(s);
            std::string item;
            while (std::getline(is, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos) continue;
                std::string k = item.substr(0, eq);
                long v = std::stol(item.substr(eq + 1));
                if (k == "hall") c.hallSize = static_cast<int>(v);
                else if (k == "torsion") c.torsionDegree = static_cast<int>(v);
                else if (k == "symbolic_m") c.symbolicM = static_cast<int>(v);
                else if (k == "brute_log2") c.bruteLog2 = v;
            }
        }
        return c;
    }();
    return caps;
}

}  // namespace ihall
