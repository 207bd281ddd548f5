#pragma once

#include <map>

#include "ihall/curve.hpp"
#include "ihall/jordan.hpp"
#include "ihall/partition.hpp"
#include "ihall/rational.hpp"
#include "ihall/report.hpp"

namespace ihall {

// First-principles enumeration over prime fields. Deliberately independent
// of the GF-table machinery: arithmetic is plain integers mod p, submodules
// are found by closing spans of cyclic vectors, so agreement with the
// closed-form layer is a genuine cross-check, not shared code.
namespace oracle {

// all t-invariant subspaces of the type-lam module, classified as
// (quotient type, sub type) -> count; cached per (lam, p)
const std::map<std::pair<Partition, Partition>, Int>& bruteHallTable(const Partition& lam, long p);
Int bruteHallNumber(const Partition& lam, const Partition& mu, const Partition& nu, long p);

// counts by explicit enumeration of t-commuting matrices; throws
// SizeCapExceeded when p^dim(solution space) exceeds the enumeration budget
Int bruteAut(const Partition& lam, long p);
Int bruteHom(const Partition& lam, const Partition& mu, long p);
Int bruteMono(const Partition& iota, const Partition& lam, long p);
// generators of the cyclic module of length c over F_p (= onto maps from a
// line bundle)
Int bruteEpiFromLine(int c, long p);

// full 1-periodic extension enumeration: realize every extension class of
// the stalk complex of M_lam by that of M_mu, reduce each middle to
// [H] * [K^(rank of the differential)], divide by |Hom|
LocalHallElement bruteC1Product(const Partition& lam, const Partition& mu, long p);

// per-(a, n) extension-middle counts |Ext^1(S_m, O(r))_{O(r+a) + S_n}|
// over explicit points, surjection-counted with brute generator counts on
// the prime-field strata
struct ExtMiddleRow {
    int m = 0;
    Profile target;  // the profile m
    int a = 0;
    Profile rest;  // the profile n
    Int count;
};
std::vector<ExtMiddleRow> bruteExtMiddleBundle(long p, int mMax);

struct FormCensus {
    Int total = 0;
    std::map<Profile, Int> histogram;
};
FormCensus binaryFormCensus(long p, int m);

}  // namespace oracle

}  // namespace ihall
