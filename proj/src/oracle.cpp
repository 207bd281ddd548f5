#include "ihall/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include "ihall/sheaves.hpp"

namespace ihall {
namespace oracle {

namespace {

// minimal mod-p row vectors / matrices, independent of the GF tables
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // list of rows

long pInv(long a, long p) {
    long r = 1, b = a % p, e = p - 2;  // p prime
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// reduced row echelon form in place; returns pivot columns
std::vector<int> rrefInPlace(Mat& m, long p) {
    std::vector<int> piv;
    if (m.empty()) return piv;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        long iv = pInv(m[row][col], p);
        for (auto& x : m[row]) x = static_cast<int>(x * iv % p);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            long f = m[i][col];
            for (size_t j = 0; j < cols; ++j)
                m[i][j] = static_cast<int>(((m[i][j] - f * m[row][j]) % p + p) % p);
        }
        piv.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return piv;
}

Vec applyT(const Vec& v, const Mat& t, long p) {
    Vec r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            r[j] = static_cast<int>((r[j] + static_cast<long>(v[i]) * t[i][j]) % p);
    }
    return r;
}

Mat jordanMatrix(const Partition& lam) {
    int n = lam.size();
    Mat t(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0));
    int off = 0;
    for (int s : lam.parts()) {
        for (int i = 0; i + 1 < s; ++i) t[static_cast<size_t>(off + i)][static_cast<size_t>(off + i + 1)] = 1;
        off += s;
    }
    return t;
}

int matRank(Mat m, long p) { return static_cast<int>(rrefInPlace(m, p).size()); }

// forward elimination only, destroys m; early exit for the square test
bool isUnitMatrix(Mat m, long p) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return false;
        std::swap(m[sel], m[col]);
        long iv = pInv(m[col][col], p);
        for (size_t j = col; j < n; ++j) m[col][j] = static_cast<int>(m[col][j] * iv % p);
        for (size_t i = col + 1; i < n; ++i) {
            long f = m[i][col];
            if (!f) continue;
            for (size_t j = col; j < n; ++j)
                m[i][j] = static_cast<int>(((m[i][j] - f * m[col][j]) % p + p) % p);
        }
    }
    return true;
}

int fwdRank(Mat m, long p) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        long iv = pInv(m[rank][col], p);
        for (size_t j = col; j < cols; ++j) m[rank][j] = static_cast<int>(m[rank][j] * iv % p);
        for (size_t i = rank + 1; i < rows; ++i) {
            long f = m[i][col];
            if (!f) continue;
            for (size_t j = col; j < cols; ++j)
                m[i][j] = static_cast<int>(((m[i][j] - f * m[rank][j]) % p + p) % p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Jordan type from the kernel filtration of powers of t acting on the span
// of `basis` (t-invariant); the empty basis gives the empty partition
Partition typeOfInvariantSpan(const Mat& basis, const Mat& t, long p) {
    // matrix of t in the span's own coordinates: solve via rref bookkeeping
    Mat b = basis;
    std::vector<int> piv = rrefInPlace(b, p);
    int k = static_cast<int>(piv.size());
    if (k == 0) return Partition();
    Mat ts(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
        Vec u = applyT(b[static_cast<size_t>(i)], t, p);
        for (int j = 0; j < k; ++j) ts[static_cast<size_t>(i)][static_cast<size_t>(j)] = u[static_cast<size_t>(piv[static_cast<size_t>(j)])];
    }
    // kernel filtration
    std::vector<int> colCounts;
    Mat pw = ts;
    int prev = k;
    while (prev > 0) {
        int rk = matRank(pw, p);
        colCounts.push_back(prev - rk);
        if (rk == 0) break;
        prev = rk;
        // pw = pw * ts
        Mat next(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0));
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                if (pw[static_cast<size_t>(i)][static_cast<size_t>(l)] == 0) continue;
                for (int j = 0; j < k; ++j)
                    next[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(
                        (next[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                         static_cast<long>(pw[static_cast<size_t>(i)][static_cast<size_t>(l)]) *
                             ts[static_cast<size_t>(l)][static_cast<size_t>(j)]) %
                        p);
            }
        pw = next;
    }
    return Partition(colCounts).conjugate();
}

Partition typeOfQuotient(const Mat& subBasis, const Mat& t, long p, int n) {
    Mat b = subBasis;
    std::vector<int> piv = rrefInPlace(b, p);
    int k = static_cast<int>(piv.size());
    if (k == n) return Partition();
    std::vector<bool> isPivot(static_cast<size_t>(n), false);
    for (int c : piv) isPivot[static_cast<size_t>(c)] = true;
    std::vector<int> np;
    for (int c = 0; c < n; ++c)
        if (!isPivot[static_cast<size_t>(c)]) np.push_back(c);
    int m = n - k;
    Mat tq(static_cast<size_t>(m), Vec(static_cast<size_t>(m), 0));
    for (int ci = 0; ci < m; ++ci) {
        Vec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(np[static_cast<size_t>(ci)])] = 1;
        Vec u = applyT(e, t, p);
        // reduce modulo the subspace
        for (size_t i = 0; i < b.size(); ++i) {
            long f = u[static_cast<size_t>(piv[i])];
            if (f == 0) continue;
            for (size_t j = 0; j < u.size(); ++j)
                u[j] = static_cast<int>(((u[j] - f * b[i][j]) % p + p) % p);
        }
        for (int cj = 0; cj < m; ++cj)
            tq[static_cast<size_t>(ci)][static_cast<size_t>(cj)] = u[static_cast<size_t>(np[static_cast<size_t>(cj)])];
    }
    // reuse the invariant-span typing with the identity coordinates
    Mat idBasis(static_cast<size_t>(m), Vec(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i) idBasis[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return typeOfInvariantSpan(idBasis, tq, p);
}

// canonical key of a span: its RREF matrix flattened
Vec canonicalSpan(Mat basis, long p) {
    rrefInPlace(basis, p);
    Vec key;
    key.push_back(static_cast<int>(basis.size()));
    for (auto& row : basis) key.insert(key.end(), row.begin(), row.end());
    return key;
}

using HallMap = std::map<std::pair<Partition, Partition>, Int>;

HallMap computeBruteTable(const Partition& lam, long p) {
    const int n = lam.size();
    Mat t = jordanMatrix(lam);

    // cyclic submodules: closure of each vector under t
    std::vector<Mat> cyclic;
    {
        std::set<Vec> seen;
        long total = 1;
        for (int i = 0; i < n; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            Vec v(static_cast<size_t>(n));
            long c = code;
            for (int i = 0; i < n; ++i) {
                v[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            Mat gen;
            Vec w = v;
            while (true) {
                bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
                if (zero) break;
                gen.push_back(w);
                w = applyT(w, t, p);
            }
            Vec key = canonicalSpan(gen, p);
            if (seen.insert(key).second) cyclic.push_back(gen);
        }
    }

    // close the set of invariant subspaces under sums with cyclic ones
    std::set<Vec> known;
    std::vector<Mat> frontier;
    Mat zero;
    known.insert(canonicalSpan(zero, p));
    frontier.push_back(zero);
    std::vector<Mat> all = {zero};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& u : frontier)
            for (const Mat& c : cyclic) {
                Mat s = u;
                s.insert(s.end(), c.begin(), c.end());
                rrefInPlace(s, p);
                Vec key = canonicalSpan(s, p);
                if (known.insert(key).second) {
                    next.push_back(s);
                    all.push_back(s);
                }
            }
        frontier = std::move(next);
    }

    HallMap table;
    for (const Mat& u : all) {
        Partition sub = typeOfInvariantSpan(u, t, p);
        Partition quot = typeOfQuotient(u, t, p, n);
        table[{quot, sub}] += 1;
    }
    return table;
}

// solution space of t_mu X = X t_lam as matrices in Hom_k(M_lam, M_mu);
// returns a basis of (n_mu x n_lam) matrices
std::vector<Mat> commutingBasis(const Partition& lam, const Partition& mu, long p) {
    const int nl = lam.size(), nm = mu.size();
    Mat tl = jordanMatrix(lam), tm = jordanMatrix(mu);
    // unknowns X[i][j], i < nm rows, j < nl cols; maps act on row vectors:
    // v in M_lam maps by X^T ... we take X: M_lam -> M_mu as v -> v * X
    // with X an nl x nm matrix, and the module condition t_lam X = X t_mu.
    const int nun = nl * nm;
    Mat sys;
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nm; ++j) {
            // (t_lam X - X t_mu)[i][j] = sum_k t_lam[i][k] X[k][j] - sum_k X[i][k] t_mu[k][j]
            Vec row(static_cast<size_t>(nun), 0);
            for (int k = 0; k < nl; ++k)
                row[static_cast<size_t>(k * nm + j)] = static_cast<int>(
                    (row[static_cast<size_t>(k * nm + j)] + tl[static_cast<size_t>(i)][static_cast<size_t>(k)]) % p);
            for (int k = 0; k < nm; ++k)
                row[static_cast<size_t>(i * nm + k)] = static_cast<int>(
                    ((row[static_cast<size_t>(i * nm + k)] - tm[static_cast<size_t>(k)][static_cast<size_t>(j)]) % p + p) % p);
            sys.push_back(row);
        }
    // nullspace
    std::vector<int> piv = rrefInPlace(sys, p);
    std::vector<bool> isPivot(static_cast<size_t>(nun), false);
    for (int c : piv) isPivot[static_cast<size_t>(c)] = true;
    std::vector<Mat> basis;
    for (int c = 0; c < nun; ++c) {
        if (isPivot[static_cast<size_t>(c)]) continue;
        Vec x(static_cast<size_t>(nun), 0);
        x[static_cast<size_t>(c)] = 1;
        for (size_t pi = 0; pi < piv.size(); ++pi)
            x[static_cast<size_t>(piv[pi])] =
                static_cast<int>((p - sys[pi][static_cast<size_t>(c)]) % p);
        Mat X(static_cast<size_t>(nl), Vec(static_cast<size_t>(nm), 0));
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nm; ++j) X[static_cast<size_t>(i)][static_cast<size_t>(j)] = x[static_cast<size_t>(i * nm + j)];
        basis.push_back(X);
    }
    return basis;
}

void checkEnumBudget(size_t dim, long p) {
    double bits = static_cast<double>(dim) * std::log2(static_cast<double>(p));
    if (bits > static_cast<double>(Caps::get().bruteLog2))
        throw SizeCapExceeded("oracle: enumeration budget exceeded");
}

// iterate all F_p-combinations of a basis of matrices, updating the
// candidate in place: an odometer reset from p-1 to 0 is the same as adding
// the basis matrix once more, since -(p-1) = 1 mod p
template <class Fn>
void forEachCombination(const std::vector<Mat>& basis, long p, const Fn& fn) {
    if (basis.empty()) {
        fn(Mat{});
        return;
    }
    const size_t nl = basis[0].size(), nm = basis[0][0].size();
    std::vector<int> coef(basis.size(), 0);
    Mat X(nl, Vec(nm, 0));
    auto addBasis = [&](size_t b) {
        for (size_t i = 0; i < nl; ++i)
            for (size_t j = 0; j < nm; ++j) {
                int v = X[i][j] + basis[b][i][j];
                X[i][j] = v >= static_cast<int>(p) ? v - static_cast<int>(p) : v;
            }
    };
    while (true) {
        fn(X);
        size_t a = 0;
        while (a < coef.size() && coef[a] == static_cast<int>(p) - 1) {
            coef[a] = 0;
            addBasis(a);
            ++a;
        }
        if (a == coef.size()) break;
        ++coef[a];
        addBasis(a);
    }
}

}  // namespace

const HallMap& bruteHallTable(const Partition& lam, long p) {
    long pp;
    int pe;
    if (!isPrimePower(p, pp, pe) || pe != 1) throw UnsupportedField("oracle: prime fields only");
    if ((p == 2 && lam.size() > 6) || (p >= 3 && lam.size() > 5))
        throw SizeCapExceeded("bruteHallTable: size cap");
    static std::mutex mu;
    static std::map<std::pair<Partition, long>, HallMap> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(lam, p);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, computeBruteTable(lam, p)).first;
    return it->second;
}

Int bruteHallNumber(const Partition& lam, const Partition& mu, const Partition& nu, long p) {
    if (mu.size() + nu.size() != lam.size()) return 0;
    const auto& tab = bruteHallTable(lam, p);
    auto it = tab.find({mu, nu});
    return it == tab.end() ? Int(0) : it->second;
}

Int bruteAut(const Partition& lam, long p) {
    auto basis = commutingBasis(lam, lam, p);
    checkEnumBudget(basis.size(), p);
    const int n = lam.size();
    Int count = 0;
    forEachCombination(basis, p, [&](const Mat& X) {
        if (n == 0 || isUnitMatrix(X, p)) ++count;
    });
    return count;
}

Int bruteHom(const Partition& lam, const Partition& mu, long p) {
    auto basis = commutingBasis(lam, mu, p);
    return ipow(p, static_cast<long>(basis.size()));
}

Int bruteMono(const Partition& iota, const Partition& lam, long p) {
    auto basis = commutingBasis(iota, lam, p);
    checkEnumBudget(basis.size(), p);
    const int ni = iota.size();
    Int count = 0;
    forEachCombination(basis, p, [&](const Mat& X) {
        if (ni == 0 || fwdRank(X, p) == ni) ++count;
    });
    return count;
}

Int bruteEpiFromLine(int c, long p) {
    if (c == 0) return 1;
    // elements of the chain module of length c that generate it under t
    Mat t = jordanMatrix(Partition{c});
    Int count = 0;
    long total = 1;
    for (int i = 0; i < c; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
        Vec v(static_cast<size_t>(c));
        long x = code;
        for (int i = 0; i < c; ++i) {
            v[static_cast<size_t>(i)] = static_cast<int>(x % p);
            x /= p;
        }
        Mat span;
        Vec w = v;
        for (int i = 0; i < c; ++i) {
            span.push_back(w);
            w = applyT(w, t, p);
        }
        if (matRank(span, p) == c) ++count;
    }
    return count;
}

namespace {

// 1-periodic complex made concrete: a module action `a` (nilpotent) and a
// differential `e` with e^2 = 0 and a e = e a, both over F_p
struct PeriodicComplexRep {
    int dim = 0;
    Mat a, e;
    void validate(long p) const {
        auto mul = [&](const Mat& x, const Mat& y) {
            Mat r(static_cast<size_t>(dim), Vec(static_cast<size_t>(dim), 0));
            for (int i = 0; i < dim; ++i)
                for (int k = 0; k < dim; ++k) {
                    if (!x[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
                    for (int j = 0; j < dim; ++j)
                        r[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(
                            (r[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                             static_cast<long>(x[static_cast<size_t>(i)][static_cast<size_t>(k)]) *
                                 y[static_cast<size_t>(k)][static_cast<size_t>(j)]) %
                            p);
                }
            return r;
        };
        auto isZero = [&](const Mat& m) {
            for (auto& row : m)
                for (int v : row)
                    if (v) return false;
            return true;
        };
        Mat ee = mul(e, e);
        Mat ae = mul(a, e), ea = mul(e, a);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                ae[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(
                    ((ae[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                      ea[static_cast<size_t>(i)][static_cast<size_t>(j)]) % p + p) % p);
        Mat an = a;
        for (int i = 1; i < dim; ++i) an = mul(an, a);
        if (!isZero(ee) || !isZero(ae) || (dim > 0 && !isZero(an)))
            throw std::logic_error("PeriodicComplexRep: relations violated");
    }
};

}  // namespace

LocalHallElement bruteC1Product(const Partition& lam, const Partition& mu, long p) {
    long pp;
    int pe;
    if (!isPrimePower(p, pp, pe) || pe != 1) throw UnsupportedField("oracle: prime fields only");
    if ((p == 2 && lam.size() + mu.size() > 3) || (p >= 3 && lam.size() + mu.size() > 2))
        throw SizeCapExceeded("bruteC1Product: size cap");

    const int nl = lam.size(), nm = mu.size(), n = nl + nm;
    Mat tl = jordanMatrix(lam), tm = jordanMatrix(mu);

    // Hom_A(lam, mu) and a transversal of Ext^1_A(lam, mu) =
    // Hom_k / im(h -> t_lam h - h t_mu) in the row-action convention
    auto homBasis = commutingBasis(lam, mu, p);

    // coboundary space: all t_lam h - h t_mu
    std::vector<Mat> cobGens;
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nm; ++j) {
            Mat h(static_cast<size_t>(nl), Vec(static_cast<size_t>(nm), 0));
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
            Mat g(static_cast<size_t>(nl), Vec(static_cast<size_t>(nm), 0));
            for (int a = 0; a < nl; ++a)
                for (int b = 0; b < nm; ++b) {
                    long v = 0;
                    for (int k = 0; k < nl; ++k) v += static_cast<long>(tl[static_cast<size_t>(a)][static_cast<size_t>(k)]) * h[static_cast<size_t>(k)][static_cast<size_t>(b)];
                    for (int k = 0; k < nm; ++k) v -= static_cast<long>(h[static_cast<size_t>(a)][static_cast<size_t>(k)]) * tm[static_cast<size_t>(k)][static_cast<size_t>(b)];
                    g[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(((v % p) + p) % p);
                }
            cobGens.push_back(g);
        }
    // flatten and row-reduce to get the coboundary space; extend to a
    // transversal of the quotient by standard matrix units
    auto flatten = [&](const Mat& m) {
        Vec f;
        for (auto& row : m) f.insert(f.end(), row.begin(), row.end());
        return f;
    };
    Mat cob;
    for (auto& g : cobGens) cob.push_back(flatten(g));
    rrefInPlace(cob, p);
    std::vector<Mat> extBasis;
    {
        Mat cur = cob;
        size_t rank = cur.size();
        for (int i = 0; i < nl && extBasis.size() + 0 < static_cast<size_t>(nl * nm); ++i)
            for (int j = 0; j < nm; ++j) {
                Mat unit(static_cast<size_t>(nl), Vec(static_cast<size_t>(nm), 0));
                unit[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
                Mat test = cur;
                test.push_back(flatten(unit));
                Mat probe = test;
                if (rrefInPlace(probe, p).size() > rank) {
                    extBasis.push_back(unit);
                    cur = probe;
                    rank = cur.size();
                }
            }
    }

    // middle complexes: V = M_mu + M_lam with module extension phi and
    // differential from f; orientation matches extensions of C_lam by C_mu
    LocalHallElement sum(p);
    long homCount = 1;
    for (size_t i = 0; i < homBasis.size(); ++i) homCount *= p;

    forEachCombination(extBasis, p, [&](const Mat& phi) {
        forEachCombination(homBasis, p, [&](const Mat& f) {
            // basis order: first M_mu coordinates, then M_lam
            // A = [[t_mu, 0], [phi, t_lam]] acting on row vectors v -> v A,
            // i.e. rows of M_lam may flow into M_mu via phi (phi: nl x nm)
            Mat A(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0));
            for (int i = 0; i < nm; ++i)
                for (int j = 0; j < nm; ++j) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = tm[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nl; ++j) A[static_cast<size_t>(nm + i)][static_cast<size_t>(nm + j)] = tl[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nm; ++j) A[static_cast<size_t>(nm + i)][static_cast<size_t>(j)] = phi.empty() ? 0 : phi[static_cast<size_t>(i)][static_cast<size_t>(j)];
            Mat E(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0));
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nm; ++j) E[static_cast<size_t>(nm + i)][static_cast<size_t>(j)] = f.empty() ? 0 : f[static_cast<size_t>(i)][static_cast<size_t>(j)];

            PeriodicComplexRep middle{n, A, E};
            middle.validate(p);
            int a = fwdRank(E, p);

            // H = ker E / im E with the induced t-action
            Mat kerBasis;
            {
                // nullspace of row action: v E = 0  <=>  E^T v^T = 0
                Mat Et(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) Et[static_cast<size_t>(j)][static_cast<size_t>(i)] = E[static_cast<size_t>(i)][static_cast<size_t>(j)];
                Mat sys = Et;
                std::vector<int> piv = rrefInPlace(sys, p);
                std::vector<bool> isPivot(static_cast<size_t>(n), false);
                for (int c : piv) isPivot[static_cast<size_t>(c)] = true;
                for (int c = 0; c < n; ++c) {
                    if (isPivot[static_cast<size_t>(c)]) continue;
                    Vec x(static_cast<size_t>(n), 0);
                    x[static_cast<size_t>(c)] = 1;
                    for (size_t pi = 0; pi < piv.size(); ++pi)
                        x[static_cast<size_t>(piv[pi])] = static_cast<int>((p - sys[pi][static_cast<size_t>(c)]) % p);
                    kerBasis.push_back(x);
                }
            }
            // im E rows
            Mat imRows;
            for (int i = 0; i < n; ++i) {
                Vec e(static_cast<size_t>(n), 0);
                e[static_cast<size_t>(i)] = 1;
                Vec w = applyT(e, E, p);
                if (!std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) imRows.push_back(w);
            }

            // type of H: work inside ker E coordinates; express im E there
            Mat kb = kerBasis;
            std::vector<int> kpiv = rrefInPlace(kb, p);
            int kd = static_cast<int>(kb.size());
            auto coords = [&](const Vec& v) {
                Vec c(static_cast<size_t>(kd), 0);
                Vec w = v;
                for (int i = 0; i < kd; ++i) {
                    c[static_cast<size_t>(i)] = w[static_cast<size_t>(kpiv[static_cast<size_t>(i)])];
                    long fkt = c[static_cast<size_t>(i)];
                    if (fkt)
                        for (size_t j = 0; j < w.size(); ++j)
                            w[j] = static_cast<int>(((w[j] - fkt * kb[static_cast<size_t>(i)][j]) % p + p) % p);
                }
                return c;
            };
            // induced t on ker coordinates
            Mat tk(static_cast<size_t>(kd), Vec(static_cast<size_t>(kd), 0));
            for (int i = 0; i < kd; ++i) {
                Vec u = applyT(kb[static_cast<size_t>(i)], A, p);
                Vec c = coords(u);
                for (int j = 0; j < kd; ++j) tk[static_cast<size_t>(i)][static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
            }
            Mat imInKer;
            for (auto& w : imRows) imInKer.push_back(coords(w));
            Partition h = typeOfQuotient(imInKer, tk, p, kd);

            sum.add({h, a}, Quadratic(1));
        });
    });

    return sum.scaled(Quadratic(Rat(1, homCount)));
}

std::vector<ExtMiddleRow> bruteExtMiddleBundle(long p, int mMax) {
    long pp;
    int pe;
    if (!isPrimePower(p, pp, pe) || pe != 1) throw UnsupportedField("oracle: prime fields only");
    std::vector<ExtMiddleRow> rows;
    for (int m = 1; m <= mMax; ++m) {
        auto profiles = enumerateCyclicProfiles(p, m);
        for (const Profile& target : profiles) {
            // n <= m pointwise
            std::vector<std::pair<PointIndex, int>> support(target.begin(), target.end());
            std::vector<int> pick(support.size(), 0);
            while (true) {
                Profile rest;
                int a = 0;
                for (size_t i = 0; i < support.size(); ++i) {
                    if (pick[i] > 0) rest[support[i].first] = pick[i];
                    a += (support[i].second - pick[i]) * support[i].first.degree;
                }
                if (a > 0) {
                    // |Ext^1(S_target, O(r))_{O(r+a) + S_rest}| by the
                    // surjection count: q^{a-m} prod_{l_x != 0}
                    // (#onto maps O -> S^(m_x)) prod_{l_x = 0} q_x^{n_x}
                    Rat cnt(1);
                    for (size_t i = 0; i < support.size(); ++i) {
                        const PointIndex& x = support[i].first;
                        int mx = support[i].second, nx = pick[i];
                        long qx = ipow(p, x.degree).get_si();
                        if (nx == mx) {
                            cnt *= Rat(ipow(qx, nx));
                        } else if (x.degree == 1) {
                            cnt *= Rat(bruteEpiFromLine(mx, p));  // prime stratum: brute count
                        } else {
                            cnt *= Rat(epiFromLineCount(mx, qx));  // census-level closed form
                        }
                    }
                    cnt /= Rat(ipow(p, m - a));
                    cnt.canonicalize();
                    if (cnt.get_den() != 1)
                        throw std::logic_error("bruteExtMiddleBundle: non-integer count");
                    ExtMiddleRow row;
                    row.m = m;
                    row.target = target;
                    row.a = a;
                    row.rest = rest;
                    row.count = cnt.get_num();
                    rows.push_back(row);
                }
                // next pointwise choice 0 <= pick_i <= m_i
                size_t i = 0;
                while (i < pick.size() && pick[i] == support[i].second) pick[i++] = 0;
                if (i == pick.size()) break;
                ++pick[i];
            }
        }
    }
    return rows;
}

FormCensus binaryFormCensus(long p, int m) {
    long pp;
    int pe;
    if (!isPrimePower(p, pp, pe) || pe != 1) throw UnsupportedField("oracle: prime fields only");
    if (m > 6) throw SizeCapExceeded("binaryFormCensus: m <= 6");
    auto pts = enumerateClosedPoints(p, m);
    FormCensus census;
    std::vector<int> coeffs(static_cast<size_t>(m) + 1, 0);
    while (true) {
        size_t i = 0;
        while (i <= static_cast<size_t>(m) && coeffs[i] == static_cast<int>(p) - 1) coeffs[i++] = 0;
        if (i > static_cast<size_t>(m)) break;
        ++coeffs[i];
        census.histogram[factorBinaryForm(coeffs, p, pts)] += 1;
        census.total += 1;
    }
    return census;
}

}  // namespace oracle
}  // namespace ihall
