#pragma once

#include <string>

#include "ihall/laurent.hpp"
#include "ihall/rational.hpp"

namespace ihall {

// Exact element a + b*sqrt(r) of Q(sqrt(q)). The stored radicand r is the
// square-free part of q, so perfect-square radicands fold into the rational
// part and e.g. sqrt(8) and 2*sqrt(2) compare equal.
class Quadratic {
public:
    Quadratic() = default;  // zero
    Quadratic(const Rat& a) : a_(a) { a_.canonicalize(); }
    Quadratic(long a) : a_(a) {}
    Quadratic(const Int& a) : a_(a) {}
    Quadratic(const Rat& a, const Rat& b, long radicand);

    // sqrt(q) for a positive integer q
    static Quadratic sqrtOf(long q);
    // (sqrt(q))^k for k of either sign
    static Quadratic sqrtPow(long q, long k);

    bool isZero() const { return a_ == 0 && b_ == 0; }
    bool isRational() const { return b_ == 0; }
    const Rat& rationalPart() const { return a_; }
    const Rat& surdPart() const { return b_; }
    long radicand() const { return r_; }
    Rat asRational() const;  // throws when surd part nonzero

    Quadratic operator-() const;
    Quadratic operator+(const Quadratic& o) const;
    Quadratic operator-(const Quadratic& o) const;
    Quadratic operator*(const Quadratic& o) const;
    Quadratic operator/(const Quadratic& o) const;
    Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
    Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
    Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
    Quadratic inverse() const;

    bool operator==(const Quadratic& o) const;
    bool operator!=(const Quadratic& o) const { return !(*this == o); }

    std::string toString() const;

private:
    Rat a_ = 0;
    Rat b_ = 0;
    long r_ = 1;  // square-free; r_ == 1 forces b_ == 0
    static long reconcile(const Quadratic& x, const Quadratic& y);
};

inline Quadratic rscale(const Quadratic& x, const Rat& s) { return x * Quadratic(s); }

// evaluate a Laurent polynomial / rational function at v = sqrt(q)
Quadratic evalAtSqrtQ(const Laurent& l, long q);

}  // namespace ihall
