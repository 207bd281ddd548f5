#include "ihall/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ihall {

bool isPrimePower(long q, long& p, int& e) {
    if (q < 2) return false;
    long n = q;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            e = 0;
            while (n > 1) {
                if (n % d != 0) return false;
                n /= d;
                ++e;
            }
            return true;
        }
    }
    p = q;
    e = 1;
    return true;
}

namespace modp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int v = 0;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v += b[i];
        r[i] = v % static_cast<int>(p);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, long p) {
    Poly nb = b;
    for (auto& c : nb) c = static_cast<int>((p - c) % p);
    return add(a, nb, p);
}

Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& b, long p) {
    trim(a);
    while (degree(a) >= degree(b) && !a.empty()) {
        int f = a.back();  // b monic
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = static_cast<int>(((a[off + i] - static_cast<long>(f) * b[i]) % p + p) % p);
        trim(a);
    }
    return a;
}

bool divides(const Poly& d, const Poly& a, long p) { return rem(a, d, p).empty(); }

std::vector<std::vector<Poly>> monicIrreducibles(long p, int dMax) {
    std::vector<std::vector<Poly>> out(static_cast<size_t>(dMax) + 1);
    for (int d = 1; d <= dMax; ++d) {
        // iterate monic polynomials of degree d in lex order of the lower
        // coefficient vector read as a base-p number
        long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            Poly f(static_cast<size_t>(d) + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                f[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            f[static_cast<size_t>(d)] = 1;
            bool irred = true;
            for (int dd = 1; irred && 2 * dd <= d; ++dd)
                for (const Poly& g : out[static_cast<size_t>(dd)]) {
                    if (divides(g, f, p)) {
                        irred = false;
                        break;
                    }
                }
            if (irred) out[static_cast<size_t>(d)].push_back(f);
        }
    }
    return out;
}

}  // namespace modp

GF::GF(long q) : q_(q) {
    if (!isPrimePower(q, p_, e_)) throw UnsupportedField("GF: not a prime power");
    if (q > 256) throw SizeCapExceeded("GF: field size beyond table cap 256");

    // field as F_p[t]/(f) for a monic irreducible f of degree e
    modp::Poly f;
    if (e_ == 1) {
        f = {0, 1};
    } else {
        auto irr = modp::monicIrreducibles(p_, e_);
        f = irr[static_cast<size_t>(e_)].front();
    }

    auto decode = [&](int a) {
        modp::Poly r;
        while (a) {
            r.push_back(static_cast<int>(a % p_));
            a = static_cast<int>(a / p_);
        }
        return r;
    };
    auto encode = [&](const modp::Poly& u) {
        long v = 0;
        for (size_t i = u.size(); i-- > 0;) v = v * p_ + u[i];
        return static_cast<int>(v);
    };

    addT_.resize(static_cast<size_t>(q_) * q_);
    mulT_.resize(static_cast<size_t>(q_) * q_);
    negT_.resize(static_cast<size_t>(q_));
    invT_.assign(static_cast<size_t>(q_), -1);
    for (int a = 0; a < q_; ++a) {
        negT_[static_cast<size_t>(a)] = encode(modp::sub({}, decode(a), p_));
        for (int b = 0; b < q_; ++b) {
            addT_[static_cast<size_t>(a) * q_ + b] = encode(modp::add(decode(a), decode(b), p_));
            int m = encode(modp::rem(modp::mul(decode(a), decode(b), p_), f, p_));
            mulT_[static_cast<size_t>(a) * q_ + b] = m;
            if (m == 1) invT_[static_cast<size_t>(a)] = b;
        }
    }
}

int GF::inv(int a) const {
    int r = invT_[static_cast<size_t>(a)];
    if (r < 0) throw DomainViolation("GF::inv: zero element");
    return r;
}

const GF& GF::get(long q) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<GF>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<GF>(new GF(q))).first;
    return *it->second;
}

GfMat GfMat::identity(const GF& f, int n) {
    GfMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

GfMat GfMat::operator*(const GfMat& o) const {
    GfMat r(*f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                r.at(i, j) = f_->add(r.at(i, j), f_->mul(v, o.at(k, j)));
        }
    return r;
}

GfMat GfMat::rref(std::vector<int>* pivots) const {
    GfMat m = *this;
    if (pivots) pivots->clear();
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int sel = -1;
        for (int i = row; i < r_; ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < c_; ++j) std::swap(m.at(sel, j), m.at(row, j));
        int iv = f_->inv(m.at(row, col));
        for (int j = 0; j < c_; ++j) m.at(row, j) = f_->mul(m.at(row, j), iv);
        for (int i = 0; i < r_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            int fct = m.at(i, col);
            for (int j = 0; j < c_; ++j)
                m.at(i, j) = f_->sub(m.at(i, j), f_->mul(fct, m.at(row, j)));
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

int GfMat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

GfMat GfMat::nullspaceBasis() const {
    std::vector<int> piv;
    GfMat m = rref(&piv);
    std::vector<bool> isPivot(static_cast<size_t>(c_), false);
    for (int p : piv) isPivot[static_cast<size_t>(p)] = true;
    int free = c_ - static_cast<int>(piv.size());
    GfMat ns(*f_, free, c_);
    int idx = 0;
    for (int col = 0; col < c_; ++col) {
        if (isPivot[static_cast<size_t>(col)]) continue;
        ns.at(idx, col) = 1;
        for (size_t pi = 0; pi < piv.size(); ++pi)
            ns.at(idx, piv[pi]) = f_->neg(m.at(static_cast<int>(pi), col));
        ++idx;
    }
    return ns;
}

bool GfMat::isZero() const {
    for (int v : a_)
        if (v != 0) return false;
    return true;
}

}  // namespace ihall
