#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "liminal/quotient.hpp"

using namespace liminal;

namespace {

GroebnerBasis gb_of(const std::vector<std::string>& texts,
                    MonomialOrder ord = MonomialOrder::grevlex()) {
    std::vector<Polynomial> gens;
    // parse in one context so variable ids agree
    std::string joined;
    for (const auto& t : texts) joined += (joined.empty() ? "" : "+") + t;
    Polynomial all = parse_polynomial(joined);
    for (const auto& t : texts) {
        PolynomialParser p(t);
        Polynomial q = p.parse();
        // re-embed into the joint variable set
        std::vector<Term> terms;
        for (const auto& tm : q.terms()) {
            Monomial m(all.nvars());
            for (std::size_t i = 0; i < q.nvars(); ++i) {
                const std::string& name = q.var_names()[i];
                for (std::size_t j = 0; j < all.nvars(); ++j)
                    if (all.var_names()[j] == name) m[j] = tm.mon[i];
            }
            terms.push_back({std::move(m), tm.coeff});
        }
        gens.push_back(Polynomial::from_terms(all.nvars(), std::move(terms), all.var_names()));
    }
    return buchberger(gens, ord);
}

Polynomial embed(const std::string& text, const GroebnerBasis& gb,
                 const std::vector<std::string>& names) {
    Polynomial q = parse_polynomial(text);
    std::vector<Term> terms;
    for (const auto& tm : q.terms()) {
        Monomial m(gb.nvars);
        for (std::size_t i = 0; i < q.nvars(); ++i)
            for (std::size_t j = 0; j < names.size(); ++j)
                if (names[j] == q.var_names()[i]) m[j] = tm.mon[i];
        terms.push_back({std::move(m), tm.coeff});
    }
    return Polynomial::from_terms(gb.nvars, std::move(terms), names);
}

// Every S-polynomial of the returned basis reduces to zero.
bool buchberger_criterion(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
        for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
            Monomial l = lcm(gb.leading[i], gb.leading[j]);
            Polynomial s = gb.generators[i] * Term{l / gb.leading[i], Rational(1)} -
                           gb.generators[j] * Term{l / gb.leading[j], Rational(1)};
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("buchberger on the basic ideals") {
    GroebnerBasis single = buchberger({parse_polynomial("x")}, MonomialOrder::grevlex());
    CHECK(single.generators.size() == 1);
    CHECK(single.generators[0] == parse_polynomial("x"));

    // Jacobian of x^3+y^3 reduces to the monic pure squares
    Polynomial f = parse_polynomial("x^3+y^3");
    GroebnerBasis jac = buchberger({f.derivative(0), f.derivative(1)}, MonomialOrder::grevlex());
    REQUIRE(jac.generators.size() == 2);
    // sorted ascending by leading monomial: y^2 before x^2 under grevlex
    CHECK(jac.generators[0] == parse_polynomial("0*x+y^2"));
    CHECK(jac.generators[1] == parse_polynomial("x^2"));

    GroebnerBasis mixed = gb_of({"x^2-y", "y^2"});
    REQUIRE(mixed.generators.size() == 2);
    CHECK(buchberger_criterion(mixed));
    CHECK(normal_form(embed("x^2-y", mixed, {"x", "y"}), mixed).is_zero());
}

TEST_CASE("normal form is a remainder operator") {
    GroebnerBasis gx = buchberger({parse_polynomial("x")}, MonomialOrder::grevlex());
    CHECK(normal_form(parse_polynomial("x^2"), gx).is_zero());

    GroebnerBasis gx2 = gb_of({"x", "y"});
    Polynomial y = embed("y", gx2, {"x", "y"});
    GroebnerBasis just_x = buchberger({embed("x", gx2, {"x", "y"})}, MonomialOrder::grevlex());
    CHECK(normal_form(y, just_x) == y);

    GroebnerBasis mixed = gb_of({"x^2-y", "y^2"});
    CHECK(normal_form(embed("x^2*y", mixed, {"x", "y"}), mixed).is_zero());
}

TEST_CASE("normal form properties on random inputs") {
    std::mt19937_64 gen(505);
    GroebnerBasis mixed = gb_of({"x^2-y", "y^2"});
    for (int i = 0; i < 150; ++i) {
        Polynomial p = liminal_test::random_polynomial(gen, 2);
        Polynomial q = liminal_test::random_polynomial(gen, 2);
        Polynomial np = normal_form(p, mixed);
        CHECK(normal_form(np, mixed) == np);  // idempotent
        CHECK(normal_form(p * q, mixed) ==
              normal_form(normal_form(p, mixed) * normal_form(q, mixed), mixed));
    }
}

TEST_CASE("standard monomials of the basic quotients") {
    GroebnerBasis box = gb_of({"x^2", "y^2"});
    Staircase st = standard_monomials(box);
    CHECK(st.dimension() == 4);
    REQUIRE(st.size() == 4);
    CHECK(st.monomial(0).is_one());
    CHECK(st.contains(Monomial({1, 1})));
    CHECK(!st.contains(Monomial({2, 0})));

    GroebnerBasis origin = gb_of({"x", "y"});
    Staircase st1 = standard_monomials(origin);
    CHECK(st1.dimension() == 1);
    CHECK(st1.monomial(0).is_one());

    GroebnerBasis line = buchberger({parse_polynomial("x+0*y")}, MonomialOrder::grevlex());
    CHECK_THROWS_AS(standard_monomials(line), InfiniteDimensionalError);
}

TEST_CASE("staircases are divisibility closed") {
    std::mt19937_64 gen(606);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t nv = 2 + gen() % 2;
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < nv; ++i) {
            Monomial m(nv);
            m[i] = 2 + (std::uint32_t)(gen() % 3);
            Polynomial pure = Polynomial::from_terms(nv, {Term{m, Rational(1)}});
            gens.push_back(pure + liminal_test::random_polynomial(gen, nv, 2, 1));
        }
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
        Staircase st = standard_monomials(gb);
        for (std::size_t k = 0; k < st.size(); ++k) {
            Monomial m = st.monomial(k);
            for (std::size_t i = 0; i < nv; ++i) {
                if (m[i] == 0) continue;
                Monomial divisor = m;
                divisor[i] -= 1;
                CHECK(st.contains(divisor));
            }
        }
        CHECK(buchberger_criterion(gb));
    }
}

TEST_CASE("staircase cardinality does not depend on the order") {
    std::mt19937_64 gen(707);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t nv = 2 + gen() % 2;
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < nv; ++i) {
            Monomial m(nv);
            m[i] = 2 + (std::uint32_t)(gen() % 3);
            gens.push_back(Polynomial::from_terms(nv, {Term{m, Rational(1)}}));
        }
        gens.push_back(liminal_test::random_polynomial(gen, nv, 3, 3) +
                       liminal_test::random_polynomial(gen, nv, 2, 2));
        std::vector<Polynomial> clean;
        for (auto& g : gens)
            if (!g.is_zero()) clean.push_back(g);
        std::vector<std::int64_t> weights;
        for (std::size_t i = 0; i < nv; ++i) weights.push_back(1 + (std::int64_t)(gen() % 4));
        Integer d1 = standard_monomials(buchberger(clean, MonomialOrder::grevlex())).dimension();
        Integer d2 =
            standard_monomials(buchberger(clean, MonomialOrder::weighted_grevlex(weights)))
                .dimension();
        CHECK(d1 == d2);
    }
}

TEST_CASE("multiplication matrices") {
    GroebnerBasis box = gb_of({"x^2", "y^2"});
    Staircase st = standard_monomials(box);
    // basis sorted ascending: 1, x, y, xy  (grevlex: x > y at degree 1... order check below)
    QMatrix mx = multiplication_matrix(box, st, 0);
    // x * 1 = x, x * x = 0, x * y = xy, x * xy = 0 : nilpotent
    QMatrix square = mx * mx;
    bool all_zero = true;
    for (std::size_t i = 0; i < square.rows(); ++i)
        for (std::size_t j = 0; j < square.cols(); ++j)
            if (!square.at(i, j).is_zero()) all_zero = false;
    CHECK(all_zero);

    GroebnerBasis at_origin = buchberger({parse_polynomial("x")}, MonomialOrder::grevlex());
    Staircase st0 = standard_monomials(at_origin);
    QMatrix m0 = multiplication_matrix(at_origin, st0, 0);
    CHECK(m0.at(0, 0) == Rational(0));

    GroebnerBasis off_origin = buchberger({parse_polynomial("x-1")}, MonomialOrder::grevlex());
    Staircase st_1 = standard_monomials(off_origin);
    QMatrix m1 = multiplication_matrix(off_origin, st_1, 0);
    CHECK(m1.at(0, 0) == Rational(1));

    CHECK_THROWS_AS(multiplication_matrix(box, st, 5), DomainError);
}

TEST_CASE("origin-only detection") {
    CHECK(is_origin_only(gb_of({"x^2", "y^2"})));
    CHECK(is_origin_only(gb_of({"x", "y"})));
    CHECK(!is_origin_only(buchberger({parse_polynomial("x-1")}, MonomialOrder::grevlex())));

    // the Jacobian of x^5+y^5+x^3y^3 has five critical points off the origin
    Polynomial f = parse_polynomial("x^5+y^5+x^3*y^3");
    GroebnerBasis jac = buchberger({f.derivative(0), f.derivative(1)}, MonomialOrder::grevlex());
    CHECK(!is_origin_only(jac));
}

TEST_CASE("degree guard aborts loudly") {
    EngineLimits limits;
    limits.max_total_degree = 3;
    Polynomial f = parse_polynomial("x^5+y^5+x^3*y^3");
    CHECK_THROWS_AS(
        buchberger({f.derivative(0), f.derivative(1)}, MonomialOrder::grevlex(), limits),
        TooLargeError);
}

TEST_CASE("lazy and materialized censuses agree") {
    // same ideal, both staircase representations
    auto check_both = [](const std::vector<Polynomial>& gens,
                         const std::vector<std::int64_t>& weights) {
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
        Staircase mat = standard_monomials(gb);
        Staircase lazy = standard_monomials(gb, 1);  // force the counting path
        REQUIRE(mat.materialized());
        REQUIRE(!lazy.materialized());
        CHECK(mat.dimension() == lazy.dimension());
        CHECK(mat.census(weights) == lazy.census(weights));
    };
    auto term_gens = [](const std::string& text) {
        Polynomial sum = parse_polynomial(text);
        std::vector<Polynomial> gens;
        for (const auto& t : sum.terms())
            gens.push_back(Polynomial::from_terms(sum.nvars(), {t}, sum.var_names()));
        return gens;
    };
    check_both(term_gens("x^4+y^4+z^4"), {1, 1, 1});
    check_both(term_gens("x^3+x*y+y^4"), {2, 3});
    Polynomial f = parse_polynomial("x^3+x*y^3");
    check_both({f.derivative(0), f.derivative(1)}, {6, 4});
}
