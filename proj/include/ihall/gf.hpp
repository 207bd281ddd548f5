#pragma once

#include <vector>

#include "ihall/errors.hpp"

namespace ihall {

bool isPrimePower(long q, long& p, int& e);
inline bool isPrimePower(long q) {
    long p;
    int e;
    return isPrimePower(q, p, e);
}

// univariate polynomials over a prime field, coefficients ascending in 0..p-1
namespace modp {

using Poly = std::vector<int>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, long p);
Poly sub(const Poly& a, const Poly& b, long p);
Poly mul(const Poly& a, const Poly& b, long p);
Poly rem(Poly a, const Poly& b, long p);  // b monic
bool divides(const Poly& d, const Poly& a, long p);
// all monic irreducibles of each degree 1..dMax, lex order on the
// coefficient vector read as a base-p number
std::vector<std::vector<Poly>> monicIrreducibles(long p, int dMax);

}  // namespace modp

// Small finite field GF(p^e) with full multiplication/inverse tables.
// Elements are encoded as integers 0..q-1, the base-p digit expansion giving
// the coefficients over the prime field.
class GF {
public:
    static const GF& get(long q);  // cached; throws UnsupportedField

    long q() const { return q_; }
    long p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const { return addT_[static_cast<size_t>(a) * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return negT_[static_cast<size_t>(a)]; }
    int mul(int a, int b) const { return mulT_[static_cast<size_t>(a) * q_ + b]; }
    int inv(int a) const;

private:
    explicit GF(long q);
    long q_, p_;
    int e_;
    std::vector<int> addT_, mulT_, negT_, invT_;
};

// dense matrix over a GF; rows*cols entries, row major
class GfMat {
public:
    GfMat() = default;
    GfMat(const GF& f, int rows, int cols) : f_(&f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    static GfMat identity(const GF& f, int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const GF& field() const { return *f_; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }

    GfMat operator*(const GfMat& o) const;
    int rank() const;
    GfMat rref(std::vector<int>* pivots = nullptr) const;
    GfMat nullspaceBasis() const;  // rows span the right nullspace {x : A x^T = 0}
    bool isZero() const;

private:
    const GF* f_ = nullptr;
    int r_ = 0, c_ = 0;
    std::vector<int> a_;
};

}  // namespace ihall
