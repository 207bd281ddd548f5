#include "ihall/quadratic.hpp"

#include <sstream>
#include <stdexcept>

namespace ihall {

namespace {

// q = s^2 * r with r square-free
void splitSquare(long q, long& s, long& r) {
    if (q <= 0) throw std::domain_error("Quadratic: radicand must be positive");
    s = 1;
    r = q;
    for (long d = 2; d * d <= r; ++d)
        while (r % (d * d) == 0) {
            r /= d * d;
            s *= d;
        }
}

}  // namespace

Quadratic::Quadratic(const Rat& a, const Rat& b, long radicand) : a_(a), b_(b) {
    a_.canonicalize();
    b_.canonicalize();
    long s, r;
    splitSquare(radicand, s, r);
    b_ *= s;  // b*sqrt(s^2 r) = (b s)*sqrt(r)
    if (r == 1) {
        a_ += b_;
        b_ = 0;
    }
    r_ = (b_ == 0) ? 1 : r;
}

Quadratic Quadratic::sqrtOf(long q) { return Quadratic(Rat(0), Rat(1), q); }

Quadratic Quadratic::sqrtPow(long q, long k) {
    if (k >= 0) {
        // (sqrt q)^k = q^{k/2} or q^{(k-1)/2} sqrt q
        Rat even = Rat(ipow(q, k / 2));
        if (k % 2 == 0) return Quadratic(even);
        return Quadratic(Rat(0), even, q);
    }
    return Quadratic(1) / sqrtPow(q, -k);
}

Rat Quadratic::asRational() const {
    if (!isRational()) throw std::domain_error("Quadratic::asRational: surd part nonzero");
    return a_;
}

long Quadratic::reconcile(const Quadratic& x, const Quadratic& y) {
    if (x.b_ == 0) return y.r_;
    if (y.b_ == 0) return x.r_;
    if (x.r_ != y.r_) throw std::logic_error("Quadratic: mixed radicands");
    return x.r_;
}

Quadratic Quadratic::operator-() const {
    Quadratic r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.r_ = r_;
    return r;
}

Quadratic Quadratic::operator+(const Quadratic& o) const {
    Quadratic r;
    r.r_ = reconcile(*this, o);
    r.a_ = a_ + o.a_;
    r.b_ = b_ + o.b_;
    if (r.b_ == 0) r.r_ = 1;
    return r;
}

Quadratic Quadratic::operator-(const Quadratic& o) const { return *this + (-o); }

Quadratic Quadratic::operator*(const Quadratic& o) const {
    Quadratic r;
    r.r_ = reconcile(*this, o);
    r.a_ = a_ * o.a_ + b_ * o.b_ * Rat(r.r_);
    r.b_ = a_ * o.b_ + b_ * o.a_;
    if (r.b_ == 0) r.r_ = 1;
    return r;
}

Quadratic Quadratic::inverse() const {
    if (isZero()) throw std::domain_error("Quadratic: inverse of zero");
    // 1/(a + b sqrt r) = (a - b sqrt r)/(a^2 - b^2 r)
    Rat d = a_ * a_ - b_ * b_ * Rat(r_);
    Quadratic r;
    r.a_ = a_ / d;
    r.b_ = -b_ / d;
    r.r_ = r_;
    if (r.b_ == 0) r.r_ = 1;
    return r;
}

Quadratic Quadratic::operator/(const Quadratic& o) const { return *this * o.inverse(); }

bool Quadratic::operator==(const Quadratic& o) const {
    return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || r_ == o.r_);
}

std::string Quadratic::toString() const {
    if (b_ == 0) return a_.get_str();
    std::ostringstream os;
    if (a_ != 0) os << a_.get_str() << (b_ < 0 ? " - " : " + ");
    Rat b = (a_ != 0 && b_ < 0) ? -b_ : b_;
    if (b != 1) os << b.get_str() << "*";
    os << "sqrt(" << r_ << ")";
    return os.str();
}

Quadratic evalAtSqrtQ(const Laurent& l, long q) {
    Quadratic r;
    for (auto& [k, c] : l.coeffs()) r += Quadratic(c) * Quadratic::sqrtPow(q, k);
    return r;
}

}  // namespace ihall
