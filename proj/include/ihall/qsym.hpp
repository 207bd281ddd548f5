#pragma once

#include "ihall/quadratic.hpp"
#include "ihall/ratfunc.hpp"

namespace ihall {

// symmetric quantum integer [n] = (v^n - v^-n)/(v - v^-1)
Laurent quantumInteger(long n);

// [r]! = [r][r-1]...[1]
Laurent quantumFactorial(long r);

// [n][n-1]...[n-r+1] / [r]!; the value is always a Laurent polynomial
RatFunc quantumBinomial(long n, long r);

// exact evaluation at v = sqrt(q); throws PoleAtSqrtQ when the denominator
// vanishes there
Quadratic specializeV(const RatFunc& f, long q);

// [n] evaluated at v = sqrt(q)^d (the local parameter v_x at a point of
// degree d)
Quadratic quantumIntegerAt(long n, long q, int d = 1);

}  // namespace ihall
