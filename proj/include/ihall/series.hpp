#pragma once

#include <vector>

#include "ihall/errors.hpp"
#include "ihall/rational.hpp"

namespace ihall {

// Formal power series truncated at a fixed order, generic over any
// commutative coefficient ring R. R must provide +, -, *, == and an
// rscale(R, Rat) overload (exact division by integers goes through it).
// When the coefficients are Hall elements, their commutativity is the
// caller's obligation; see the assert helpers at the use sites.
template <class R>
class Series {
public:
    Series(int order, const R& zero) : order_(order), c_(static_cast<size_t>(order) + 1, zero) {}

    int order() const { return order_; }
    R& at(int k) { return c_[static_cast<size_t>(k)]; }
    const R& at(int k) const { return c_[static_cast<size_t>(k)]; }

    Series operator+(const Series& o) const {
        Series r = *this;
        for (int k = 0; k <= order_; ++k) r.at(k) = r.at(k) + o.at(k);
        return r;
    }

    Series operator-(const Series& o) const {
        Series r = *this;
        for (int k = 0; k <= order_; ++k) r.at(k) = r.at(k) - o.at(k);
        return r;
    }

    Series operator*(const Series& o) const {
        Series r(order_, zeroCoeff());
        for (int i = 0; i <= order_; ++i)
            for (int j = 0; i + j <= order_; ++j) r.at(i + j) = r.at(i + j) + at(i) * o.at(j);
        return r;
    }

    bool operator==(const Series& o) const { return c_ == o.c_; }

    // exp(s) for s with zero constant term
    static Series exp(const Series& s, const R& one) {
        if (!(s.at(0) == s.zeroCoeff()))
            throw NonUnitConstantTerm("Series::exp: constant term must be 0");
        Series r(s.order_, s.zeroCoeff());
        Series term(s.order_, s.zeroCoeff());
        r.at(0) = one;
        term.at(0) = one;
        for (int k = 1; k <= s.order_; ++k) {
            term = term * s;
            for (int j = 0; j <= s.order_; ++j) term.at(j) = rscale(term.at(j), Rat(1, k));
            r = r + term;
        }
        return r;
    }

    // log(s) for s with constant term 1
    static Series log(const Series& s, const R& one) {
        if (!(s.at(0) == one)) throw NonUnitConstantTerm("Series::log: constant term must be 1");
        Series u = s;
        u.at(0) = s.zeroCoeff();  // u = s - 1
        Series r(s.order_, s.zeroCoeff());
        Series term(s.order_, s.zeroCoeff());
        term.at(0) = one;
        for (int k = 1; k <= s.order_; ++k) {
            term = term * u;
            Rat c(k % 2 == 1 ? 1 : -1, k);
            for (int j = 0; j <= s.order_; ++j) r.at(j) = r.at(j) + rscale(term.at(j), c);
        }
        return r;
    }

    R zeroCoeff() const { return c_[0] - c_[0]; }

private:
    int order_;
    std::vector<R> c_;
};

}  // namespace ihall
