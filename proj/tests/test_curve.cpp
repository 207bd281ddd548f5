#include <doctest.h>

#include <set>

#include "ihall/curve.hpp"

using namespace ihall;

TEST_CASE("point counts") {
    CHECK(countPoints(2, 1) == 3);
    CHECK(countPoints(2, 2) == 1);
    CHECK(countPoints(3, 1) == 4);
    CHECK(countPoints(2, 3) == 2);
    CHECK(countPoints(2, 4) == 3);
    CHECK(countPoints(4, 1) == 5);
    CHECK_THROWS_AS(countPoints(6, 1), UnsupportedField);
}

TEST_CASE("zeta identity") {
    CHECK(verifyZetaIdentity(2, 4).allPass());
    CHECK(verifyZetaIdentity(3, 3).allPass());
    CHECK(verifyZetaIdentity(5, 1).allPass());
    const PointCensus& c = PointCensus::get(2, 4);
    CHECK(c.count(1) == 3);
    CHECK(c.count(2) == 1);
    CHECK(c.count(3) == 2);
    CHECK(c.count(4) == 3);
    CHECK(PointCensus::get(5, 1).count(1) == 6);
}

TEST_CASE("closed point enumeration over prime fields") {
    auto pts2 = enumerateClosedPoints(2, 2);
    // degree 1: T, T+1, infinity
    REQUIRE(pts2.size() == 4);
    CHECK(pts2[0].poly == modp::Poly{0, 1});
    CHECK(pts2[1].poly == modp::Poly{1, 1});
    CHECK(pts2[2].infinity);
    // unique irreducible quadratic over F_2: T^2 + T + 1
    CHECK(pts2[3].poly == modp::Poly{1, 1, 1});
    CHECK(pts2[3].idx.degree == 2);

    // counts match the census for every degree
    for (long p : {2L, 3L, 5L}) {
        auto pts = enumerateClosedPoints(p, 4);
        for (int d = 1; d <= 4; ++d) {
            long n = 0;
            for (auto& cp : pts)
                if (cp.idx.degree == d) ++n;
            CHECK(Int(n) == countPoints(p, d));
        }
    }
    // (3,2): three degree-2 points
    auto pts3 = enumerateClosedPoints(3, 2);
    long deg2 = 0;
    for (auto& cp : pts3)
        if (cp.idx.degree == 2) ++deg2;
    CHECK(deg2 == 3);
    CHECK_THROWS_AS(enumerateClosedPoints(4, 2), UnsupportedField);
}

TEST_CASE("cyclic profile enumeration") {
    CHECK(enumerateCyclicProfiles(2, 0).size() == 1);
    CHECK(enumerateCyclicProfiles(2, 1).size() == 3);
    CHECK(enumerateCyclicProfiles(2, 2).size() == 7);
    auto profs = enumerateCyclicProfiles(2, 3);
    // duplicate-free
    std::set<Profile> uniq(profs.begin(), profs.end());
    CHECK(uniq.size() == profs.size());
    for (const Profile& n : profs) CHECK(profileDegree(n) == 3);
}

TEST_CASE("torsion type enumeration") {
    CHECK(enumerateTorsionTypes(2, 0).size() == 1);
    CHECK(enumerateTorsionTypes(2, 1).size() == 3);
    CHECK(enumerateTorsionTypes(2, 2).size() == 10);
    auto types = enumerateTorsionTypes(3, 2);
    std::set<TorsionSupport> uniq(types.begin(), types.end());
    CHECK(uniq.size() == types.size());
}

TEST_CASE("binary form factorization") {
    auto pts = enumerateClosedPoints(2, 3);
    // X1^2 + X1 X0 + X0^2 is the degree-2 point
    Profile p = factorBinaryForm({1, 1, 1}, 2, pts);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->first.degree == 2);
    CHECK(p.begin()->second == 1);
    // X0 * X1 splits into one affine point and the point at infinity
    Profile p2 = factorBinaryForm({0, 1, 0}, 2, pts);
    CHECK(p2.size() == 2);
    CHECK(profileDegree(p2) == 2);
    // (X1 + X0)^3
    Profile p3 = factorBinaryForm({1, 1, 1, 1}, 2, pts);
    bool found = false;
    for (auto& [x, m] : p3)
        if (m == 3) found = true;
    CHECK(found);
}
