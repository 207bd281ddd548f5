#pragma once

#include <string>

#include "ihall/laurent.hpp"

namespace ihall {

// Rational function in v over Q, normalized so equality is structural:
// gcd(num, den) = 1, den is an ordinary polynomial with nonzero constant
// term and leading coefficient 1. The numerator absorbs all v-shifts and
// content.
class RatFunc {
public:
    RatFunc() = default;  // zero
    RatFunc(const Laurent& n) : num_(n) { normalize(); }
    RatFunc(const Laurent& n, const Laurent& d) : num_(n), den_(d) { normalize(); }
    RatFunc(const Rat& c) : num_(Laurent(c)) {}
    RatFunc(long n) : num_(Laurent(n)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc v(int k = 1) { return RatFunc(Laurent::v(k)); }

    bool isZero() const { return num_.isZero(); }
    bool isLaurent() const { return den_ == Laurent::one(); }
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    Laurent asLaurent() const;  // throws when den != 1

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    RatFunc pow(int e) const;  // e of either sign

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string toString() const;

private:
    Laurent num_;               // Laurent numerator
    Laurent den_ = Laurent::one();  // monic ordinary polynomial, den(0) != 0
    void normalize();
};

inline RatFunc rscale(const RatFunc& f, const Rat& s) { return f * RatFunc(s); }

}  // namespace ihall
