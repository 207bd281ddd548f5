#pragma once

#include <map>
#include <string>

#include "ihall/rational.hpp"

namespace ihall {

// Laurent polynomial in the quantum parameter v with exact rational
// coefficients. Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& c) { set(0, c); }
    Laurent(long n) : Laurent(Rat(n)) {}

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(Rat(1)); }
    // c * v^k
    static Laurent mono(int k, const Rat& c = Rat(1));
    static Laurent v(int k = 1) { return mono(k); }

    bool isZero() const { return c_.empty(); }
    bool isRational() const;
    Rat coeff(int k) const;
    int lowExp() const;   // requires nonzero
    int highExp() const;  // requires nonzero
    const std::map<int, Rat>& coeffs() const { return c_; }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o);
    Laurent operator*(const Rat& s) const;
    Laurent pow(int e) const;  // e >= 0

    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    // Exact division; throws std::domain_error when the division leaves a
    // remainder or the divisor is zero.
    Laurent divExact(const Laurent& d) const;

    std::string toString() const;

private:
    std::map<int, Rat> c_;
    void set(int k, const Rat& c);
};

inline Laurent operator*(const Rat& s, const Laurent& l) { return l * s; }

}  // namespace ihall
