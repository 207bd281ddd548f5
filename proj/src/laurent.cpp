#include "ihall/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ihall {

Laurent Laurent::mono(int k, const Rat& c) {
    Laurent l;
    l.set(k, c);
    return l;
}

bool Laurent::isRational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rat Laurent::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rat(0) : it->second;
}

int Laurent::lowExp() const {
    if (c_.empty()) throw std::domain_error("lowExp of zero");
    return c_.begin()->first;
}

int Laurent::highExp() const {
    if (c_.empty()) throw std::domain_error("highExp of zero");
    return c_.rbegin()->first;
}

void Laurent::set(int k, const Rat& c) {
    // mpq_class does not canonicalize two-argument constructions on its own
    Rat cc = c;
    cc.canonicalize();
    if (cc == 0)
        c_.erase(k);
    else
        c_[k] = cc;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [k, c] : c_) r.c_[k] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [k, c] : o.c_) set(k, coeff(k) + c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [k, c] : o.c_) set(k, coeff(k) - c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [k1, c1] : c_)
        for (auto& [k2, c2] : o.c_) r.set(k1 + k2, r.coeff(k1 + k2) + c1 * c2);
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent Laurent::operator*(const Rat& s) const {
    Laurent r;
    Rat ss = s;
    ss.canonicalize();
    if (ss == 0) return r;
    for (auto& [k, c] : c_) r.c_[k] = c * ss;
    return r;
}

Laurent Laurent::pow(int e) const {
    if (e < 0) throw std::domain_error("Laurent::pow: negative exponent");
    Laurent r = one();
    Laurent b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Laurent Laurent::divExact(const Laurent& d) const {
    if (d.isZero()) throw std::domain_error("Laurent::divExact: zero divisor");
    if (isZero()) return zero();
    // shift both to ordinary polynomials and long-divide
    Laurent rem = *this;
    Laurent quo;
    const int dh = d.highExp();
    const Rat dc = d.coeff(dh);
    while (!rem.isZero()) {
        const int rh = rem.highExp();
        Laurent t = mono(rh - dh, rem.coeff(rh) / dc);
        quo += t;
        rem -= t * d;
        if (!rem.isZero() && rem.highExp() >= rh)
            throw std::domain_error("Laurent::divExact: no progress");
    }
    return quo;
}

std::string Laurent::toString() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const int k = it->first;
        if (k == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "v";
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ihall
