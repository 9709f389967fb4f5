#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stablepot/geometry.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace stablepot;

TEST_CASE("ball distance to complement") {
    Domain d(Ball({0.0, 0.0}, 1.0));
    CHECK(d.delta({0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(d.delta({2.0, 0.0}) == 0.0);
    CHECK(d.delta({0.3, 0.4}) == doctest::Approx(0.5));
    CHECK(d.dist_to_closure({2.0, 0.0}) == doctest::Approx(1.0));
    CHECK(d.dist_to_closure({0.3, 0.0}) == 0.0);
}

TEST_CASE("annulus distance to complement") {
    Domain d(Annulus({0.0, 0.0}, 0.5, 1.0));
    CHECK(d.delta({0.75, 0.0}) == doctest::Approx(0.25));
    CHECK(d.delta({0.55, 0.0}) == doctest::Approx(0.05));
    CHECK(d.delta({0.2, 0.0}) == 0.0);
    CHECK(d.delta({1.2, 0.0}) == 0.0);
    CHECK(d.dist_to_closure({0.2, 0.0}) == doctest::Approx(0.3));
}

TEST_CASE("ball union distance and validation") {
    Domain::BallUnion balls{Ball({0.0, 0.0}, 0.5), Ball({2.0, 0.0}, 0.6)};
    Domain d(balls);
    CHECK(d.delta({0.0, 0.0}) == doctest::Approx(0.5));
    CHECK(d.delta({2.0, 0.1}) == doctest::Approx(0.5));
    CHECK(d.delta({1.0, 0.0}) == 0.0);
    // r0 limited by half the gap: gap = 2 - 1.1 = 0.9, half = 0.45
    CHECK(d.r0() == doctest::Approx(0.45));
    CHECK(d.diameter() == doctest::Approx(2.0 + 0.5 + 0.6));

    Domain::BallUnion overlapping{Ball({0.0, 0.0}, 1.0), Ball({1.5, 0.0}, 1.0)};
    CHECK_THROWS_AS((void)Domain(overlapping), ParameterError);
}

TEST_CASE("distortion") {
    CHECK(Domain(Ball({0.0, 0.0}, 1.0)).distortion() == doctest::Approx(2.0));
    CHECK(Domain(Ball({0.3, -2.0}, 0.017)).distortion() == doctest::Approx(2.0));
    CHECK(Domain(Annulus({0.0, 0.0}, 0.5, 1.0)).distortion() == doctest::Approx(8.0));
    // every constructible domain has distortion >= 2
    oracles::TestRng rng(7);
    for (int i = 0; i < 50; ++i) {
        const double ri = rng.uniform(0.05, 1.0);
        const double ro = ri + rng.uniform(0.05, 2.0);
        CHECK(Domain(Annulus({0.0, 0.0}, ri, ro)).distortion() >= 2.0);
        CHECK(Domain(Ball({rng.uniform(-1, 1), 0.0}, rng.uniform(0.01, 5.0))).distortion() >=
              2.0);
    }
}

TEST_CASE("delta is 1-Lipschitz") {
    oracles::TestRng rng(11);
    std::vector<Domain> domains;
    domains.emplace_back(Ball({0.2, -0.1}, 0.8));
    domains.emplace_back(Annulus({0.0, 0.0}, 0.4, 1.1));
    domains.emplace_back(Domain::BallUnion{Ball({0.0, 0.0}, 0.5), Ball({1.6, 0.3}, 0.4)});
    for (const auto& d : domains) {
        for (int i = 0; i < 500; ++i) {
            Point x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
            Point y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
            CHECK(std::fabs(d.delta(x) - d.delta(y)) <= dist(x, y) + 1e-12);
        }
    }
}

TEST_CASE("boundary samples sit on the boundary with outward normals") {
    for (const Domain& d : {Domain(Ball({0.5, 0.0}, 0.7)), Domain(Annulus({0.0, 0.0}, 0.5, 1.0))}) {
        for (const auto& s : d.boundary_samples(32)) {
            CHECK(d.delta(s.q) == doctest::Approx(0.0).epsilon(1e-12));
            const double eps = 1e-6;
            CHECK(d.delta(s.q - eps * s.outward_normal) == doctest::Approx(eps).epsilon(1e-4));
            CHECK(d.delta(s.q + eps * s.outward_normal) == 0.0);
        }
    }
}

TEST_CASE("c11 check on balls") {
    Domain d(Ball({0.0, 0.0}, 1.0));
    CHECK(c11_check(d, 0.9, 64).ok);
    CHECK(c11_check(d, 1.0, 64).ok);
    const auto bad = c11_check(d, 1.1, 64);
    CHECK_FALSE(bad.ok);
    CHECK(bad.worst_margin < -1e-12);
    CHECK(std::fabs(bad.worst_point.norm() - 1.0) < 1e-12);
}

TEST_CASE("c11 check on the annulus") {
    Domain d(Annulus({0.0, 0.0}, 0.5, 1.0));
    // r0 = min(r_in, (r_out - r_in)/2) = 0.25
    CHECK(c11_check(d, 0.2, 64).ok);
    CHECK(c11_check(d, 0.25, 64).ok);
    CHECK_FALSE(c11_check(d, 0.3, 64).ok);
    CHECK_FALSE(c11_check(d, 0.6, 64).ok);
}

TEST_CASE("c11 check is monotone in r") {
    Domain d(Annulus({0.0, 0.0}, 0.3, 1.4));
    bool prev_ok = true;
    bool seen_fail = false;
    for (double r = 0.05; r < 1.0; r += 0.05) {
        const bool ok = c11_check(d, r, 48).ok;
        if (!prev_ok) CHECK_FALSE(ok);  // once false, false for all larger r
        if (!ok) seen_fail = true;
        prev_ok = ok;
    }
    CHECK(seen_fail);
}

TEST_CASE("c11 check in three dimensions") {
    Domain d(Ball({0.0, 0.0, 0.0}, 0.8));
    CHECK(c11_check(d, 0.75, 128).ok);
    CHECK_FALSE(c11_check(d, 0.9, 128).ok);
}
