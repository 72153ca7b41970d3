#ifndef LIMINAL_TEST_SUPPORT_HPP
#define LIMINAL_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "liminal/families.hpp"
#include "liminal/linalg.hpp"
#include "liminal/parser.hpp"

namespace liminal_test {

using namespace liminal;

// Weighted homogeneous corpus: Fermat cones, Brieskorn germs, and mixed
// germs with non-monomial Jacobian ideals. 27 members.
inline std::vector<Polynomial> weighted_corpus() {
    std::vector<Polynomial> corpus;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {3, 5},
                                                        {4, 2}, {4, 3}, {4, 4}, {4, 5},
                                                        {5, 2}, {5, 3}, {6, 2}, {6, 3}})
        corpus.push_back(fermat_cone(n, d));
    for (const auto& b : std::vector<std::vector<std::uint32_t>>{
             {2, 2, 2, 3}, {2, 2, 3, 3}, {2, 3, 4, 5}, {3, 3, 4, 4}, {2, 2, 2, 2, 3},
             {2, 2, 3, 4}, {2, 4, 4, 6}, {2, 2, 2, 4, 4}, {3, 3, 3, 3, 6}, {2, 3, 5, 30}})
        corpus.push_back(brieskorn_polynomial(b));
    corpus.push_back(example_two_ten(3));
    for (const char* text : {"x^3+x*y^3+z^2+w^2", "x^2*y+y^4+z^2+w^2",
                             "x^3+y^3+z^3+x*y*z+w^2", "x^4+x^2*y^2+y^4+z^2+w^2"})
        corpus.push_back(parse_polynomial(text));
    return corpus;
}

// Planar Newton-diagram count for a convenient nondegenerate germ in two
// variables: mu = 2S - a - b + 1 with S the area under the diagram and a, b
// the axis intercepts. Independent of every basis computation.
inline long newton_mu_2d(const Polynomial& f) {
    std::vector<std::pair<long, long>> pts;
    for (const auto& t : f.terms()) pts.push_back({(long)t.mon[0], (long)t.mon[1]});
    long a = -1, b = -1;
    for (auto [x, y] : pts) {
        if (y == 0 && (a < 0 || x < a)) a = x;
        if (x == 0 && (b < 0 || y < b)) b = y;
    }
    if (a < 0 || b < 0) throw DomainError("newton_mu_2d: support must meet both axes");
    // lower-left hull from (a,0) to (0,b)
    std::vector<std::pair<long, long>> hull{{a, 0}};
    auto cross = [](std::pair<long, long> o, std::pair<long, long> p,
                    std::pair<long, long> q) {
        return (p.first - o.first) * (q.second - o.second) -
               (p.second - o.second) * (q.first - o.first);
    };
    std::vector<std::pair<long, long>> sorted = pts;
    sorted.push_back({0, b});
    std::sort(sorted.begin(), sorted.end(), [](auto u, auto v) {
        return u.first != v.first ? u.first > v.first : u.second < v.second;
    });
    for (auto p : sorted) {
        if (p.first == a && p.second == 0) continue;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    // twice the area of the polygon (0,0), hull...
    long twice_area = 0;
    std::pair<long, long> prev = {0, 0};
    for (auto p : hull) {
        twice_area += prev.first * p.second - p.first * prev.second;
        prev = p;
    }
    twice_area += prev.first * 0 - 0 * prev.second;
    twice_area = std::abs(twice_area);
    return twice_area - a - b + 1;
}

// Ideal-quotient dimension by truncated linear algebra: the dimension of the
// image of P_{<=window} in P_{<=cutoff} / span{m*g : deg(m*g) <= cutoff}.
// For a zero-dimensional ideal supported at the origin this equals the local
// algebra dimension once window covers the quotient and cutoff is deep
// enough for the relations. No division algorithm anywhere.
inline long truncated_quotient_dim(const std::vector<Polynomial>& gens, int window,
                                   int cutoff) {
    if (gens.empty() || gens[0].nvars() != 2)
        throw DomainError("truncated_quotient_dim: two-variable oracle");
    std::vector<Monomial> mons;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int a = 0; a <= cutoff; ++a)
        for (int b = 0; a + b <= cutoff; ++b) {
            Monomial m(2);
            m[0] = (std::uint32_t)a;
            m[1] = (std::uint32_t)b;
            index[{a, b}] = mons.size();
            mons.push_back(m);
        }
    std::vector<QVector> w_rows;
    for (const auto& g : gens) {
        int dg = (int)g.total_degree();
        for (const auto& m : mons) {
            if ((int)m.total_degree() + dg > cutoff) continue;
            QVector row(mons.size(), Rational(0));
            for (const auto& t : g.terms()) {
                Monomial p = t.mon * m;
                row[index[{(int)p[0], (int)p[1]}]] += t.coeff;
            }
            w_rows.push_back(std::move(row));
        }
    }
    std::size_t rank_w = rank(QMatrix::from_rows(w_rows));
    std::vector<QVector> uw_rows = w_rows;
    for (const auto& m : mons) {
        if ((int)m.total_degree() > window) continue;
        QVector row(mons.size(), Rational(0));
        row[index[{(int)m[0], (int)m[1]}]] = Rational(1);
        uw_rows.push_back(std::move(row));
    }
    std::size_t rank_uw = rank(QMatrix::from_rows(uw_rows));
    return (long)(rank_uw - rank_w);
}

// Deterministic random polynomial for property tests.
inline Polynomial random_polynomial(std::mt19937_64& gen, std::size_t nvars,
                                    std::size_t max_terms = 6, std::uint32_t max_exp = 4) {
    std::vector<Term> terms;
    std::size_t nterms = gen() % (max_terms + 1);
    for (std::size_t t = 0; t < nterms; ++t) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m[i] = (std::uint32_t)(gen() % (max_exp + 1));
        long num = (long)(gen() % 19) - 9;
        long den = (long)(gen() % 4) + 1;
        if (num != 0) terms.push_back({std::move(m), Rational(Integer(num), Integer(den))});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

// Random weighted homogeneous polynomial containing all pure powers the
// weight system allows plus some mixed monomials of the same weighted degree.
inline Polynomial random_weighted_homogeneous(std::mt19937_64& gen, std::size_t nvars,
                                              const std::vector<std::int64_t>& weights,
                                              std::int64_t degree) {
    std::vector<Term> terms;
    // all monomials of weighted degree exactly `degree` with exponents <= 12
    std::vector<Monomial> level;
    std::vector<std::uint32_t> cur(nvars, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
        if (i == nvars) {
            if (rem == 0) level.push_back(Monomial(cur));
            return;
        }
        for (std::uint32_t e = 0; e <= 12 && e * weights[i] <= rem; ++e) {
            cur[i] = e;
            rec(i + 1, rem - e * weights[i]);
        }
        cur[i] = 0;
    };
    rec(0, degree);
    for (const auto& m : level) {
        if (gen() % 3 == 0) continue;
        long c = (long)(gen() % 9) + 1;
        terms.push_back({m, Rational(c)});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace liminal_test

#endif  // LIMINAL_TEST_SUPPORT_HPP
