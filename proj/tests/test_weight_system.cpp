#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "liminal/weight_system.hpp"

using namespace liminal;

TEST_CASE("weight detection on the named germs") {
    for (int d = 2; d <= 6; ++d) {
        auto ws = detect_weight_system(liminal::fermat_cone(3, d));
        REQUIRE(ws.has_value());
        CHECK(ws->weights == std::vector<std::int64_t>{1, 1, 1, 1});
        CHECK(ws->degree == d);
        CHECK(!ws->ambiguous);
    }

    auto cusp = detect_weight_system(parse_polynomial("x^2+y^3"));
    REQUIRE(cusp.has_value());
    CHECK(cusp->weights == std::vector<std::int64_t>{3, 2});
    CHECK(cusp->degree == 6);

    CHECK(!detect_weight_system(parse_polynomial("x^5+y^5+x^3*y^3")).has_value());
}

TEST_CASE("weight detection normalization and edge cases") {
    // scaled support still yields the primitive system
    auto ws = detect_weight_system(parse_polynomial("x^4+y^6"));
    REQUIRE(ws.has_value());
    CHECK(ws->weights == std::vector<std::int64_t>{3, 2});
    CHECK(ws->degree == 12);

    // linear polynomial: degree would be 1, no system
    CHECK(!detect_weight_system(parse_polynomial("x+y")).has_value());
    // mixed degrees with no solution
    CHECK(!detect_weight_system(parse_polynomial("x^2+x^3")).has_value());
    // absent variable gets weight 1 and the ambiguity is recorded
    auto amb = detect_weight_system(parse_polynomial("x^2+x*y+y^2+0*z"));
    // 0*z drops out entirely, so z never appears; parse keeps the variable
    REQUIRE(amb.has_value());
    CHECK(amb->ambiguous);
    CHECK(amb->weights == std::vector<std::int64_t>{1, 1, 1});

    // single mixed monomial: ray is ambiguous, minimal degree solution
    auto xy = detect_weight_system(parse_polynomial("x*y"));
    REQUIRE(xy.has_value());
    CHECK(xy->degree == 2);
    CHECK(xy->weights == std::vector<std::int64_t>{1, 1});
    CHECK(xy->ambiguous);
}

TEST_CASE("euler field identity") {
    Polynomial f = parse_polynomial("x^2+y^2+z^2+w^2");
    WeightSystem ws{{1, 1, 1, 1}, 2};
    CHECK(euler_field_apply(f, ws) == f * Rational(2));

    Polynomial cusp = parse_polynomial("x^2+y^3");
    WeightSystem cw{{3, 2}, 6};
    CHECK(euler_field_apply(cusp, cw) == cusp * Rational(6));

    WeightSystem bad{{1, 1}, 2};
    Polynomial g = euler_field_apply(cusp, bad);
    CHECK(g == parse_polynomial("2*x^2+3*y^3"));
    CHECK(g != cusp * Rational(2));
}

TEST_CASE("detected system always satisfies the euler identity exactly") {
    std::mt19937_64 gen(404);
    int found = 0;
    for (int i = 0; i < 80; ++i) {
        std::size_t nv = 2 + gen() % 3;
        std::vector<std::int64_t> weights;
        for (std::size_t k = 0; k < nv; ++k) weights.push_back(1 + (std::int64_t)(gen() % 4));
        std::int64_t degree = 6 + (std::int64_t)(gen() % 10);
        Polynomial f =
            liminal_test::random_weighted_homogeneous(gen, nv, weights, degree);
        if (f.is_zero() || f.is_constant()) continue;
        auto ws = detect_weight_system(f);
        if (!ws) continue;  // support may underdetermine the scaled ray
        ++found;
        std::int64_t g = 0;
        for (auto a : ws->weights) g = std::gcd(g, a);
        CHECK(g == 1);
        CHECK(euler_field_apply(f, *ws) == f * Rational(Integer((long)ws->degree)));
    }
    CHECK(found > 20);
}
