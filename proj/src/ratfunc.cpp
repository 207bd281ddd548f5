#include "ihall/ratfunc.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ihall {

namespace {

// ordinary polynomial helpers, coefficients ascending, no trailing zeros
using Poly = std::vector<Rat>;

Poly toPoly(const Laurent& l, int shift) {
    // l * v^{-shift}; shift must not exceed l.lowExp()
    Poly p;
    if (l.isZero()) return p;
    p.assign(static_cast<size_t>(l.highExp() - shift) + 1, Rat(0));
    for (auto& [k, c] : l.coeffs()) p[static_cast<size_t>(k - shift)] = c;
    return p;
}

Laurent toLaurent(const Poly& p, int shift = 0) {
    Laurent l;
    for (size_t i = 0; i < p.size(); ++i) l += Laurent::mono(static_cast<int>(i) + shift, p[i]);
    return l;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly polyRem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

void makeMonic(Poly& p) {
    if (p.empty()) return;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
}

Poly polyGcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty()) {
        makeMonic(b);
        return b.empty() ? Poly{Rat(1)} : b;
    }
    while (!b.empty()) {
        Poly r = polyRem(a, b);
        a = std::move(b);
        b = std::move(r);
        makeMonic(b);
    }
    makeMonic(a);
    return a;
}

Poly polyDivExact(const Poly& a, const Poly& b) {
    return toPoly(toLaurent(a).divExact(toLaurent(b)), 0);
}

}  // namespace

void RatFunc::normalize() {
    if (num_.isZero()) {
        den_ = Laurent::one();
        return;
    }
    if (den_.isZero()) throw std::domain_error("RatFunc: zero denominator");

    const int ns = num_.lowExp();
    const int ds = den_.lowExp();
    Poly n = toPoly(num_, ns);
    Poly d = toPoly(den_, ds);
    Poly g = polyGcd(n, d);
    if (g.size() > 1) {
        n = polyDivExact(n, g);
        d = polyDivExact(d, g);
    }
    const Rat lead = d.back();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = toLaurent(n, ns - ds);
    den_ = toLaurent(d, 0);
}

Laurent RatFunc::asLaurent() const {
    if (!isLaurent()) throw std::domain_error("RatFunc::asLaurent: nontrivial denominator");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.isZero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (isZero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = one();
    RatFunc b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string RatFunc::toString() const {
    if (isLaurent()) return num_.toString();
    std::ostringstream os;
    os << "(" << num_.toString() << ") / (" << den_.toString() << ")";
    return os.str();
}

}  // namespace ihall
