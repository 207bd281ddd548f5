#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ihall/gf.hpp"
#include "ihall/partition.hpp"
#include "ihall/rational.hpp"
#include "ihall/report.hpp"

namespace ihall {

struct GroundField {
    long q, p;
    int e;
    explicit GroundField(long q_);
};

// Closed point of the projective line over F_q, identified only by its
// degree and a 1-based index within that degree. The census bound is the
// ambient field's point count; everything upstream of the enumeration
// oracle depends on points only through the degree.
struct PointIndex {
    int degree = 1;
    long index = 1;
    std::strong_ordering operator<=>(const PointIndex&) const = default;
    std::string toString() const;
};

// N_d(q) for d = 1..bound; N_1 counts the affine line plus the point at
// infinity, so sum_{d|n} d N_d = q^n + 1.
class PointCensus {
public:
    static const PointCensus& get(long q, int dMax);
    long q() const { return q_; }
    int bound() const { return static_cast<int>(n_.size()) - 1; }
    const Int& count(int d) const;

private:
    PointCensus(long q, int dMax);
    long q_;
    std::vector<Int> n_;
};

Int countPoints(long q, int d);

Report verifyZetaIdentity(long q, int nMax);

// A closed point of P^1 over a prime field made explicit: the point at
// infinity (X0) or a monic irreducible univariate polynomial (degree-1
// points are X1 - a*X0, i.e. T - a).
struct ClosedPoint {
    PointIndex idx;
    modp::Poly poly;  // empty for the point at infinity
    bool infinity = false;
};

std::vector<ClosedPoint> enumerateClosedPoints(long p, int dMax);

// cyclic profile: one chain length per point, finite support
using Profile = std::map<PointIndex, int>;
// ||n|| = sum d_x n_x
int profileDegree(const Profile& n);
std::vector<Profile> enumerateCyclicProfiles(long q, int m);

// all maps point -> partition with sum d_x |lambda_x| = m
using TorsionSupport = std::map<PointIndex, Partition>;
std::vector<TorsionSupport> enumerateTorsionTypes(long q, int m);

// Factor a nonzero binary form sum_i c[i] X1^i X0^(m-i) over F_p into closed
// points with multiplicities; pts must come from enumerateClosedPoints with
// dMax >= m.
Profile factorBinaryForm(const std::vector<int>& coeffs, long p,
                         const std::vector<ClosedPoint>& pts);

std::string profileToString(const Profile& n);

}  // namespace ihall
