#include "ihall/qsym.hpp"

#include "ihall/errors.hpp"

namespace ihall {

Laurent quantumInteger(long n) {
    if (n == 0) return Laurent::zero();
    if (n < 0) return -quantumInteger(-n);
    Laurent r;
    for (long j = 0; j < n; ++j) r += Laurent::v(static_cast<int>(n - 1 - 2 * j));
    return r;
}

Laurent quantumFactorial(long r) {
    Laurent f = Laurent::one();
    for (long j = 1; j <= r; ++j) f *= quantumInteger(j);
    return f;
}

RatFunc quantumBinomial(long n, long r) {
    if (r < 0) throw DomainViolation("quantumBinomial: r must be nonnegative");
    Laurent num = Laurent::one();
    for (long j = 0; j < r; ++j) num *= quantumInteger(n - j);
    return RatFunc(num, quantumFactorial(r));
}

Quadratic specializeV(const RatFunc& f, long q) {
    Quadratic d = evalAtSqrtQ(f.den(), q);
    if (d.isZero()) throw PoleAtSqrtQ("specializeV: denominator vanishes at v = sqrt(q)");
    return evalAtSqrtQ(f.num(), q) / d;
}

Quadratic quantumIntegerAt(long n, long q, int d) {
    if (n == 0) return Quadratic(0);
    if (n < 0) return -quantumIntegerAt(-n, q, d);
    Quadratic r;
    for (long j = 0; j < n; ++j) r += Quadratic::sqrtPow(q, d * (n - 1 - 2 * j));
    return r;
}

}  // namespace ihall
