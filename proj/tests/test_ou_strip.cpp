#include <doctest.h>

#include <cmath>

#include "attlab/strip.hpp"

using namespace attlab;

TEST_CASE("stationary OU sampling") {
    OuPath ou(1.0, 12345);

    SUBCASE("marginal variance 1/2") {
        double sum = 0, sum2 = 0;
        int n = 100000;
        for (int k = 0; k < n; ++k) {
            double z = ou.value(k);
            sum += z;
            sum2 += z * z;
        }
        double mean = sum / n;
        double var = sum2 / n - mean * mean;
        CHECK(std::abs(var - 0.5) < 0.01);
        CHECK(std::abs(mean) < 0.01);
    }

    SUBCASE("lag-1 covariance e^{-1}/2") {
        double sum = 0;
        int n = 100000;
        for (int k = 0; k < n; ++k) sum += ou.value(k) * ou.value(k + 1);
        CHECK(std::abs(sum / n - 0.5 * std::exp(-1.0)) < 0.01);
    }

    SUBCASE("seed reproducibility and extension immutability") {
        OuPath a(0.1, 777), b(0.1, 777);
        for (long long k : {-5LL, 0LL, 3LL, 100LL}) CHECK(a.value(k) == b.value(k));

        double before = a.value(-3);
        a.value(-5000);  // long backward extension
        a.value(4000);
        CHECK(a.value(-3) == before);

        OuPath c(0.1, 778);
        CHECK(c.value(0) != a.value(0));
    }

    SUBCASE("backward marginals match forward ones") {
        OuPath ou2(0.5, 999);
        double sum2 = 0;
        int n = 50000;
        for (int k = 1; k <= n; ++k) {
            double z = ou2.value(-k);
            sum2 += z * z;
        }
        CHECK(std::abs(sum2 / n - 0.5) < 0.015);
    }

    SUBCASE("grid guard") {
        CHECK_THROWS_AS(ou.at_time(0.5), std::invalid_argument);
        CHECK(ou.at_time(3.0) == ou.value(3));
    }
}

TEST_CASE("descent time and height flow") {
    CHECK(descent_time(0.0).value() == 0.0);
    CHECK(descent_time(0.5).value() == 0.5);
    CHECK(descent_time(0.25).value() == 0.25);
    CHECK(descent_time(1.0).is_infinite());
    CHECK(descent_time(0.9).value() ==
          doctest::Approx(0.5 + 0.5 * std::log(1.0 / (2 * 0.1))).epsilon(1e-15));
    CHECK_THROWS_AS(descent_time(-0.1), std::domain_error);
    CHECK_THROWS_AS(descent_time(1.1), std::domain_error);

    // h(t, 1) = 1 for all t: the top edge is a fixed point of the height flow
    for (double t : {0.0, 0.5, 3.0, 50.0}) CHECK(height_flow(t, 1.0) == 1.0);

    // non-increasing in t, zero from the descent time onwards
    for (double y : {0.2, 0.5, 0.8, 0.97}) {
        double tau = descent_time(y).value();
        double prev = y;
        for (double t = 0.0; t <= tau + 1.0; t += 0.01) {
            double h = height_flow(t, y);
            CHECK(h <= prev + 1e-12);
            prev = h;
        }
        CHECK(height_flow(tau, y) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(height_flow(tau + 0.3, y) == 0.0);
        CHECK(height_flow(tau + 2.0, y) == 0.0);
    }

    // descent_time_inverse is the inverse on [0, 1)
    for (double y : {0.0, 0.2, 0.5, 0.7, 0.95})
        CHECK(descent_time_inverse(descent_time(y).value()) == doctest::Approx(y).epsilon(1e-12));
}

TEST_CASE("strip flow evaluator") {
    OuPath ou(0.05, 31);

    SUBCASE("time zero is the identity") {
        StripPoint p{1.7, 0.6};
        StripPoint q = strip_flow(ou, 0, 0.0, p);
        CHECK(q.x == p.x);
        CHECK(q.y == p.y);
    }

    SUBCASE("touchdown line: exponential pull onto the OU trajectory") {
        for (double t : {0.5, 1.0, 5.0, 20.0}) {
            for (double x : {-2.0, 0.0, 1.3}) {
                StripPoint q = strip_flow(ou, 0, t, {x, 0.0});
                double expect = std::exp(-t) * (x - ou.value(0)) + ou.at_time(t);
                CHECK(q.x == doctest::Approx(expect).epsilon(1e-12));
                CHECK(q.y == 0.0);
            }
        }
    }

    SUBCASE("branch continuity at the descent time") {
        // tau(0.25) = 0.25 lands exactly on a 1/1024 grid: both branch
        // formulas, fed the same OU values, must agree there
        double y = 0.25;
        double tau = descent_time(y).value();
        OuPath fine(1.0 / 1024, 77);
        long long ktau = llround(tau * 1024);
        REQUIRE(double(ktau) / 1024 == tau);
        StripPoint exact = strip_flow(fine, 0, tau, {0.8, y});
        double first_branch = 0.8 + fine.value(ktau) - fine.value(0);
        double second_branch = std::exp(0.0) * (0.8 - fine.value(0)) + fine.value(ktau);
        CHECK(std::abs(first_branch - second_branch) < 1e-12);
        CHECK(exact.x == doctest::Approx(first_branch).epsilon(1e-12));
        CHECK(exact.y == 0.0);
    }

    SUBCASE("cocycle identity on a grid of (s, t)") {
        double max_residual = 0;
        for (double s : {0.25, 1.0, 2.5}) {
            for (double t : {0.5, 1.5, 3.0}) {
                for (double y : {0.0, 0.3, 0.75, 1.0}) {
                    for (double x : {-1.5, 0.2, 2.0}) {
                        StripPoint direct = strip_flow(ou, 0, s + t, {x, y});
                        StripPoint mid = strip_flow(ou, 0, s, {x, y});
                        StripPoint composed =
                            strip_flow(ou, llround(s / ou.dt()), t, mid);
                        max_residual = std::max(max_residual,
                                                std::hypot(direct.x - composed.x,
                                                           direct.y - composed.y));
                    }
                }
            }
        }
        CHECK(max_residual < 1e-9);
    }
}

TEST_CASE("frame sets") {
    FrameSet f = frame_set(1.0, 2.0);

    SUBCASE("the OU point sits inside") {
        CHECK(f.distance({2.0, 0.0}) == 0.0);
    }
    SUBCASE("distance evaluator geometry") {
        CHECK(f.distance({2.0, 0.5}) == doctest::Approx(0.5));   // floor below is nearest
        CHECK(f.distance({4.0, 0.0}) == doctest::Approx(1.0));   // right of the frame
        CHECK(f.distance({3.0, 0.7}) == doctest::Approx(0.0));   // on the right wall
        CHECK(f.distance({2.5, 0.2}) == doctest::Approx(0.2));   // floor again
        CHECK(f.distance({2.9, 0.8}) == doctest::Approx(0.1));   // wall beats the floor
    }
    SUBCASE("boundary parameterization stays on the set") {
        for (int i = 0; i < 200; ++i) {
            StripPoint p = f.boundary_point(double(i) / 200);
            CHECK(f.distance(p) < 1e-12);
        }
    }
    SUBCASE("frames of different widths intersect only on the floor") {
        FrameSet f1 = frame_set(1.0, 0.0), f2 = frame_set(2.0, 0.0);
        // any point of f1 with positive height is on a wall at |x| = 1,
        // strictly inside f2's walls and above its floor
        for (double y : {0.1, 0.5, 1.0}) {
            CHECK(f1.distance({1.0, y}) == 0.0);
            CHECK(f2.distance({1.0, y}) == doctest::Approx(std::min(y, 1.0)));
        }
    }
    CHECK_THROWS_AS(frame_set(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(frame_set(-2.0, 1.0), std::domain_error);
}

TEST_CASE("frame strict invariance under the flow") {
    OuPath ou(0.05, 4242);
    for (double t : {1.0, 2.5, 5.0}) {
        FrameInvarianceReport rep = frame_invariance_check(ou, 1.0, t, 1000);
        CHECK(rep.forward_sup < 1e-6);
        CHECK(rep.reverse_sup < 1e-6);
    }
}

TEST_CASE("forward experiment, quick scale") {
    OuForwardConfig cfg;
    cfg.T = 20;
    cfg.paths = 25;
    cfg.seed = 5;
    OuForwardReport rep = ou_forward_experiment(cfg);

    CHECK(rep.max_euclid_residual < 1e-9);
    CHECK(rep.euclid_pass);
    REQUIRE(!rep.sample_series.empty());
    // the Euclidean series decays monotonically
    for (size_t i = 1; i < rep.sample_series.size(); ++i)
        CHECK(rep.sample_series[i].second <= rep.sample_series[i - 1].second + 1e-12);

    // identity warp: no exceedance at these horizons
    OuForwardConfig id_cfg = cfg;
    id_cfg.warp = Warp::Identity;
    OuForwardReport id_rep = ou_forward_experiment(id_cfg);
    CHECK(id_rep.exceedance_fraction == 0.0);
}
