#include <doctest.h>

#include <random>

#include "attlab/spaces.hpp"

using namespace attlab;

TEST_CASE("ExtDist total order and saturating addition") {
    ExtDist zero = ExtDist::zero();
    ExtDist one(1.0);
    ExtDist inf = ExtDist::infinity();

    CHECK(zero < one);
    CHECK(one < inf);
    CHECK(zero < inf);
    CHECK(inf == inf);
    CHECK(!(inf < inf));

    CHECK(one + inf == inf);
    CHECK(inf + inf == inf);
    CHECK((one + one).value() == 2.0);
    // monotone: a <= b implies a + c <= b + c
    CHECK(zero + one <= one + one);
    CHECK(one + inf <= inf + inf);

    CHECK_THROWS_AS(ExtDist(-1.0), std::invalid_argument);
}

TEST_CASE("dist_point_to_set conventions") {
    LineSpace line;
    std::vector<double> empty;
    CHECK(dist_point_to_set<LineSpace>(0.3, empty, line).is_infinite());

    std::vector<double> self{0.3};
    CHECK(dist_point_to_set<LineSpace>(0.3, self, line).value() == 0.0);

    CircleSpace circle;
    std::vector<double> a{6.18};
    // min over the two arc directions: |0.1-6.18| vs 2pi - |0.1-6.18|
    double direct = std::abs(0.1 - 6.18);
    double brute = std::min(direct, kTwoPi - direct);
    CHECK(dist_point_to_set<CircleSpace>(0.1, a, circle).value() ==
          doctest::Approx(brute).epsilon(1e-12));
    CHECK(dist_point_to_set<CircleSpace>(0.1, a, circle).value() ==
          doctest::Approx(0.2031853071795859).epsilon(1e-9));
}

TEST_CASE("hausdorff semi-metric conventions") {
    LineSpace line;
    std::vector<double> empty;
    std::vector<double> a12{1.0, 2.0};
    CHECK(hausdorff_semi(std::span<const double>(empty), std::span<const double>(a12), line)
              .is_zero());
    CHECK(hausdorff_semi(std::span<const double>(a12), std::span<const double>(empty), line)
              .is_infinite());

    std::vector<double> s01{0.0, 1.0};
    CHECK(hausdorff_semi(std::span<const double>(s01), std::span<const double>(s01), line)
              .is_zero());

    // brute force over the 2x1 pairs: sup(|0-1|, |3-1|) = 2
    std::vector<double> b{0.0, 3.0}, a{1.0};
    CHECK(hausdorff_semi(std::span<const double>(b), std::span<const double>(a), line).value() ==
          2.0);
}

TEST_CASE("hausdorff fast path agrees with brute force") {
    LineSpace line;
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> u(-10, 10);
    std::vector<double> big(12000);
    for (auto& x : big) x = u(gen);
    std::vector<double> probe(50);
    for (auto& x : probe) x = u(gen);

    ExtDist fast = hausdorff_semi(std::span<const double>(probe), std::span<const double>(big), line);
    ExtDist slow = ExtDist::zero();
    for (double b : probe) slow = max(slow, dist_point_to_set<LineSpace>(b, big, line));
    CHECK(fast.value() == doctest::Approx(slow.value()).epsilon(1e-15));

    CircleSpace circle;
    for (auto& x : big) x = CircleSpace::wrap(u(gen));
    for (auto& x : probe) x = CircleSpace::wrap(u(gen));
    ExtDist cfast =
        hausdorff_semi(std::span<const double>(probe), std::span<const double>(big), circle);
    ExtDist cslow = ExtDist::zero();
    for (double b : probe) cslow = max(cslow, dist_point_to_set<CircleSpace>(b, big, circle));
    CHECK(cfast.value() == doctest::Approx(cslow.value()).epsilon(1e-12));
}

TEST_CASE("semi-metric triangle property on random finite triples") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-5, 5);
    LineSpace line;
    for (int trial = 0; trial < 200; ++trial) {
        auto make = [&] {
            std::vector<double> s(1 + gen() % 6);
            for (auto& x : s) x = u(gen);
            return s;
        };
        auto A = make(), B = make(), C = make();
        double ac =
            hausdorff_semi(std::span<const double>(A), std::span<const double>(C), line).value();
        double ab =
            hausdorff_semi(std::span<const double>(A), std::span<const double>(B), line).value();
        double bc =
            hausdorff_semi(std::span<const double>(B), std::span<const double>(C), line).value();
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("eps neighborhood on finite carriers") {
    FiniteSpace sp = FiniteSpace::from_line_points({-1.0, 0.0, 0.5, 1.0, 2.0});

    IndexSet a0 = IndexSet::of(5, {1});
    IndexSet zero_r = eps_closed_neighborhood(a0, 0.0, sp);
    CHECK(zero_r == a0);

    IndexSet empty(5);
    CHECK(eps_closed_neighborhood(empty, 1.0, sp).empty());

    IndexSet within1 = eps_closed_neighborhood(a0, 1.0, sp);
    CHECK(within1 == IndexSet::of(5, {0, 1, 2, 3}));

    CHECK_THROWS_AS(eps_closed_neighborhood(a0, -0.5, sp), std::domain_error);
}

TEST_CASE("eps neighborhood on the circle: predicate against a dense grid") {
    CircleSpace circle;
    auto nb = eps_closed_neighborhood<CircleSpace>({0.0}, 1.0, circle);
    // expected arc: [2pi - 1, 2pi) U [0, 1]
    int n = 10000;
    for (int i = 0; i < n; ++i) {
        double y = kTwoPi * double(i) / n;
        bool inside = (y <= 1.0 + 1e-12) || (y >= kTwoPi - 1.0 - 1e-12);
        CHECK(nb.contains(y) == inside);
    }
}

TEST_CASE("neighborhood membership matches the hausdorff bound") {
    // h(B, A) <= delta iff B inside the closed delta-neighborhood of A
    FiniteSpace sp = FiniteSpace::from_line_points({0.0, 0.3, 0.7, 1.1, 2.0, 3.5});
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        IndexSet A(6), B(6);
        for (int i = 0; i < 6; ++i) {
            if (gen() & 1) A.set(i);
            if (gen() & 2) B.set(i);
        }
        for (double delta : {0.0, 0.2, 0.4, 0.45, 1.0, 2.0, 10.0}) {
            bool lhs = hausdorff_semi(B, A, sp) <= ExtDist(delta);
            bool rhs = B.subset_of(eps_closed_neighborhood(A, delta, sp));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("finite space validation") {
    CHECK_THROWS_AS(FiniteSpace::from_matrix({{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSpace::from_matrix({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSpace::from_matrix({{0, -1}, {-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSpace::from_matrix({{0, 1, 1}, {1, 0, 5}, {1, 5, 0}}),
                    std::invalid_argument);  // triangle violation
    FiniteSpace ok = FiniteSpace::discrete(4);
    CHECK(ok.size() == 4);
    CHECK(ok.distance(0, 0).is_zero());
    CHECK(ok.distance(0, 3).value() == 1.0);
    CHECK_THROWS_AS(ok.distance(0, 9), std::domain_error);
}

TEST_CASE("strip space domain") {
    StripSpace strip;
    CHECK(strip.distance({0, 0}, {3, 1}).value() == doctest::Approx(std::hypot(3.0, 1.0)));
    CHECK_THROWS_AS(strip.distance({0, -0.1}, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(strip.distance({0, 0}, {0, 1.5}), std::domain_error);
}

TEST_CASE("circle dense sequence is dense and deterministic") {
    CircleSpace circle;
    CHECK(circle.dense_point(0) == 0.0);
    CHECK(circle.dense_point(1) == doctest::Approx(kTwoPi / 2));
    CHECK(circle.dense_point(2) == doctest::Approx(kTwoPi / 4));
    CHECK(circle.dense_point(3) == doctest::Approx(3 * kTwoPi / 4));
    // after 2^g points the spacing is 2pi / 2^g
    std::vector<double> pts;
    for (size_t k = 0; k < 256; ++k) pts.push_back(circle.dense_point(k));
    std::sort(pts.begin(), pts.end());
    double max_gap = pts.front() + kTwoPi - pts.back();
    for (size_t i = 1; i < pts.size(); ++i) max_gap = std::max(max_gap, pts[i] - pts[i - 1]);
    CHECK(max_gap <= kTwoPi / 256 + 1e-12);
}
