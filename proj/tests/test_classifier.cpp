#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "liminal/classifier.hpp"

using namespace liminal;

namespace {
ClassificationReport classify_text(const std::string& text) {
    return classify(analyze_local(parse_polynomial(text)));
}
}  // namespace

TEST_CASE("t1 weights") {
    WeightSystem ws{{1, 1, 1, 1, 1}, 3};
    CHECK(t1_weight(Monomial(5), ws) == -3);  // the class of 1 sits at -d
    Monomial e1(5);
    e1[0] = 1;
    CHECK(t1_weight(e1, ws) == -2);
    CHECK(ws.index_N() == 2);

    // weight is -N exactly when l(alpha) = 2, i.e. sum (alpha_i+1) a_i = 2d
    std::mt19937_64 gen(808);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::int64_t> weights;
        std::size_t nv = 2 + gen() % 4;
        for (std::size_t k = 0; k < nv; ++k) weights.push_back(1 + (std::int64_t)(gen() % 5));
        std::int64_t d = 2 + (std::int64_t)(gen() % 10);
        WeightSystem w{weights, d};
        Monomial alpha(nv);
        for (std::size_t k = 0; k < nv; ++k) alpha[k] = (std::uint32_t)(gen() % 5);
        std::int64_t ell_num = 0;  // d * l(alpha)
        for (std::size_t k = 0; k < nv; ++k) ell_num += (alpha[k] + 1) * weights[k];
        CHECK((t1_weight(alpha, w) == -w.index_N()) == (ell_num == 2 * d));
        // d*(l(alpha) - 2) - N, in integer form
        CHECK(t1_weight(alpha, w) == (ell_num - 2 * d) - w.index_N());
    }
}

TEST_CASE("weight decompositions of the named germs") {
    LocalSingularity odp = analyze_local(parse_polynomial("x^2+y^2+z^2+w^2"));
    WeightDecomposition d1 = t1_weight_decomposition(odp);
    REQUIRE(d1.dimensions.size() == 1);
    CHECK(d1.dimensions.at(-2) == 1);
    CHECK(d1.bases.at(-2).size() == 1);
    CHECK(d1.bases.at(-2)[0].is_one());

    LocalSingularity cubic = analyze_local(parse_polynomial("x1^3+x2^3+x3^3+x4^3+x5^3"));
    WeightDecomposition d2 = t1_weight_decomposition(cubic);
    std::map<std::int64_t, Integer> expect{{-3, 1}, {-2, 5}, {-1, 10}, {0, 10}, {1, 5}, {2, 1}};
    CHECK(d2.dimensions == expect);

    LocalSingularity sus = analyze_local(parse_polynomial("x^2+y^2+z^2+w^4"));
    WeightDecomposition d3 = t1_weight_decomposition(sus);
    std::map<std::int64_t, Integer> expect3{{-4, 1}, {-3, 1}, {-2, 1}};
    CHECK(d3.dimensions == expect3);
}

TEST_CASE("minimal exponents") {
    CHECK(minimal_exponent(WeightSystem{{1, 1, 1, 1}, 2}) == Rational(2));
    for (int n = 3; n <= 6; ++n)
        for (int d = 2; d <= n + 1; ++d) {
            auto ws = detect_weight_system(fermat_cone(n, d));
            REQUIRE(ws.has_value());
            CHECK(minimal_exponent(*ws) == Rational(Integer(n + 1), Integer(d)));
        }
    auto ex = detect_weight_system(example_two_ten(2));
    REQUIRE(ex.has_value());
    CHECK(minimal_exponent(*ex) == Rational(2));
}

TEST_CASE("spectra") {
    LocalSingularity cusp = analyze_local(parse_polynomial("x^2+y^3"));
    auto spec = spectrum(cusp);
    REQUIRE(spec.size() == 2);
    CHECK(spec[0].value == Rational(Integer(-1), Integer(6)));
    CHECK(spec[1].value == Rational(Integer(1), Integer(6)));
    CHECK(spec[0].multiplicity == 1);
    CHECK(spec[1].multiplicity == 1);

    LocalSingularity odp = analyze_local(parse_polynomial("x^2+y^2+z^2+w^2"));
    auto sodp = spectrum(odp);
    REQUIRE(sodp.size() == 1);
    CHECK(sodp[0].value == Rational(1));

    LocalSingularity cubic = analyze_local(parse_polynomial("x1^3+x2^3+x3^3+x4^3+x5^3"));
    auto scub = spectrum(cubic);
    Integer total = 0;
    std::vector<Integer> mult{1, 5, 10, 10, 5, 1};
    REQUIRE(scub.size() == 6);
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(scub[j].value == Rational(Integer(5 + (long)j), Integer(3)) - Rational(1));
        CHECK(scub[j].multiplicity == mult[j]);
        total += scub[j].multiplicity;
    }
    CHECK(total == cubic.milnor);
}

TEST_CASE("spectrum symmetry across the corpus") {
    for (const Polynomial& f : liminal_test::weighted_corpus()) {
        LocalSingularity s = analyze_local(f);
        auto spec = spectrum(s);
        Integer count = 0;
        Rational center(Integer((long)s.n - 1), Integer(2));
        for (std::size_t i = 0; i < spec.size(); ++i) {
            count += spec[i].multiplicity;
            const auto& mirror = spec[spec.size() - 1 - i];
            CHECK(spec[i].value + mirror.value == center * Rational(2));
            CHECK(spec[i].multiplicity == mirror.multiplicity);
            CHECK(spec[i].value > Rational(-1));
            CHECK(spec[i].value < Rational(Integer((long)s.n)));
        }
        CHECK(count == s.milnor);
    }
}

TEST_CASE("classification of the named germs") {
    ClassificationReport odp = classify_text("x^2+y^2+z^2+w^2");
    CHECK(odp.label() == "1-liminal");
    CHECK(odp.dim_K == 1);
    CHECK(odp.dim_K_prime == 0);
    CHECK(odp.link_invariant == 1);
    CHECK(odp.alpha_tilde == Rational(2));
    REQUIRE(odp.flags.has_value());
    CHECK(odp.flags->rational);
    CHECK(odp.flags->one_du_bois);
    CHECK(!odp.flags->one_rational);

    ClassificationReport odp4 = classify_text("x^2+y^2+z^2+w^2+v^2");
    CHECK(odp4.label() == "1-rational");
    CHECK(odp4.dim_K == 0);
    CHECK(odp4.flags->rational);
    CHECK(odp4.flags->one_rational);
    CHECK(odp4.flags->one_du_bois);

    ClassificationReport cubic = classify_text("x1^3+x2^3+x3^3+x4^3+x5^3");
    CHECK(cubic.label() == "strongly-1-irrational");
    CHECK(cubic.flags->rational);
    CHECK(!cubic.flags->one_du_bois);
    CHECK(cubic.dim_K == 6);
    CHECK(cubic.dim_K_prime == 1);
    CHECK(cubic.link_invariant == 5);
    CHECK(cubic.b_n11 == 26);
    CHECK(cubic.b_1n2 == 1);

    ClassificationReport ex = classify_text("x^2+y^2+z^2+w^4+v^4");
    CHECK(ex.label() == "1-liminal");
    CHECK(ex.link_invariant == 1);
    CHECK(ex.alpha_tilde == Rational(2));
}

TEST_CASE("identities and trichotomy across the corpus") {
    for (const Polynomial& f : liminal_test::weighted_corpus()) {
        ClassificationReport rep = classify(analyze_local(f));
        CHECK(rep.b_n11 + rep.b_1n2 + rep.link_invariant == rep.singularity.milnor);
        CHECK(rep.dim_K == rep.dim_K_prime + rep.link_invariant);
        CHECK(rep.a_invariant == 0);
        // the class of 1 sits alone at the bottom weight -d
        auto lowest = rep.decomposition.dimensions.begin();
        CHECK(lowest->first == -rep.singularity.weight_system->degree);
        CHECK(lowest->second == 1);
        REQUIRE(rep.flags.has_value());
        const auto& fl = *rep.flags;
        CHECK(fl.one_liminal == (fl.one_du_bois && !fl.one_rational));
        CHECK(fl.strongly_one_irrational == !fl.one_du_bois);
        int trichotomy = (fl.one_rational ? 1 : 0) + (fl.one_liminal ? 1 : 0) +
                         (fl.strongly_one_irrational ? 1 : 0);
        CHECK(trichotomy == 1);
        if (fl.one_rational) CHECK(fl.one_du_bois);
        if (fl.one_liminal) CHECK(rep.link_invariant == 1);
        // k-level thresholds specialize to the 1-level flags
        CHECK(rep.k_level.at(1).du_bois == fl.one_du_bois);
        CHECK(rep.k_level.at(1).rational == fl.one_rational);
    }
}

TEST_CASE("low-dimensional germs keep invariants but lose flags") {
    ClassificationReport cusp = classify(analyze_local(parse_polynomial("x^2+y^3")));
    CHECK(!cusp.flags.has_value());
    CHECK(cusp.label() == "unclassified");
    CHECK(!cusp.warnings.empty());
    CHECK(cusp.spec.size() == 2);

    CHECK_THROWS_AS(classify(analyze_local(parse_polynomial("x^5+y^5+x^3*y^3"))),
                    NoWeightSystemError);
}

TEST_CASE("dimension-3 rational germs are never 1-rational") {
    // every rational hypersurface threefold germ lies on or below the
    // liminal threshold, with equality exactly at the ordinary double point
    for (const Polynomial& f : liminal_test::weighted_corpus()) {
        LocalSingularity s = analyze_local(f);
        if (s.n != 3) continue;
        ClassificationReport rep = classify(s);
        if (!rep.flags->rational) continue;
        CHECK(!rep.flags->one_rational);
        CHECK(rep.alpha_tilde <= Rational(2));
        if (rep.alpha_tilde == Rational(2)) {
            CHECK(s.milnor == 1);  // 1-liminal in dimension 3 is the ODP
        }
    }
}

TEST_CASE("weighted and graded orders give the same invariants") {
    for (const char* text : {"x^2+y^3+z^2+w^2", "x^3+x*y^3+z^2+w^2", "x^2*y+y^4+z^2+w^2"}) {
        Polynomial f = parse_polynomial(text);
        LocalSingularity s = analyze_local(f);
        std::vector<Polynomial> jac;
        for (std::size_t i = 0; i < f.nvars(); ++i) jac.push_back(f.derivative(i));
        GroebnerBasis plain = buchberger(jac, MonomialOrder::grevlex());
        CHECK(standard_monomials(plain).dimension() == s.milnor);
    }
}
