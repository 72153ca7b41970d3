#ifndef LIMINAL_GROEBNER_HPP
#define LIMINAL_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liminal/monomial.hpp"
#include "liminal/polynomial.hpp"

namespace liminal {

// Resource guards for basis computations. Exceeding either aborts with
// TooLargeError instead of hanging.
struct EngineLimits {
    std::int64_t max_total_degree = 200;
    std::size_t max_basis = 50000;
};

// Reduced Groebner basis: generators are monic in their leading terms, no
// generator contains a monomial divisible by another generator's leading
// term, and the list is sorted by leading monomial.
struct GroebnerBasis {
    MonomialOrder order;
    std::size_t nvars = 0;
    std::vector<Polynomial> generators;
    std::vector<Monomial> leading;  // leading[i] = leading monomial of generators[i]

    bool is_unit_ideal() const {
        return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
    }
};

namespace gb_detail {

// Term list sorted descending under a fixed order; the working representation
// inside the division and Buchberger loops.
using OrdPoly = std::vector<Term>;

inline OrdPoly to_ord(const Polynomial& p, const MonomialOrder& ord) {
    OrdPoly t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mon, b.mon); });
    return t;
}

inline Polynomial from_ord(std::size_t nvars, const OrdPoly& t,
                           const std::vector<std::string>& names) {
    return Polynomial::from_terms(nvars, t, names);
}

// a - c * m * g, all lists sorted under ord.
inline OrdPoly sub_scaled(const OrdPoly& a, const OrdPoly& g, const Rational& c,
                          const Monomial& m, const MonomialOrder& ord) {
    OrdPoly r;
    r.reserve(a.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < g.size()) {
        if (j == g.size()) {
            r.push_back(a[i++]);
            continue;
        }
        Monomial gm = g[j].mon * m;
        int cmp = (i == a.size()) ? -1 : ord.compare(a[i].mon, gm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({std::move(gm), -(c * g[j].coeff)});
            ++j;
        } else {
            Rational d = a[i].coeff - c * g[j].coeff;
            if (!d.is_zero()) r.push_back({a[i].mon, std::move(d)});
            ++i, ++j;
        }
    }
    return r;
}

// Full multivariate division: no monomial of the remainder is divisible by
// any leading monomial of the divisors.
inline OrdPoly reduce_full(OrdPoly h, const std::vector<OrdPoly>& gens,
                           const std::vector<Monomial>& lms, const MonomialOrder& ord) {
    OrdPoly rem;
    while (!h.empty()) {
        bool reduced = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (!lms[k].divides(h.front().mon)) continue;
            Monomial q = h.front().mon / lms[k];
            Rational c = h.front().coeff / gens[k].front().coeff;
            h = sub_scaled(h, gens[k], c, q, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(h.front());
            h.erase(h.begin());
        }
    }
    return rem;
}

inline OrdPoly s_polynomial(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& ord) {
    Monomial l = lcm(f.front().mon, g.front().mon);
    Monomial mf = l / f.front().mon;
    Monomial mg = l / g.front().mon;
    OrdPoly lhs;
    lhs.reserve(f.size());
    Rational inv_f = Rational(1) / f.front().coeff;
    for (const auto& t : f) lhs.push_back({t.mon * mf, t.coeff * inv_f});
    return sub_scaled(lhs, g, Rational(1) / g.front().coeff, mg, ord);
}

}  // namespace gb_detail

// Buchberger's algorithm with normal pair selection (lowest lcm degree
// first), the coprimality and chain criteria, and full inter-reduction of
// the result. Ideal membership of every input generator is verified on the
// returned basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input, MonomialOrder order,
                                EngineLimits limits = {}) {
    using gb_detail::OrdPoly;
    if (input.empty()) throw DomainError("buchberger: no generators");
    const std::size_t nvars = input[0].nvars();
    std::vector<std::string> names = input[0].var_names();
    for (const auto& p : input)
        if (p.nvars() != nvars) throw DomainError("buchberger: inconsistent variable counts");

    std::vector<OrdPoly> basis;
    std::vector<Monomial> lms;
    for (const auto& p : input) {
        if (p.is_zero()) throw DomainError("buchberger: zero generator");
        OrdPoly q = gb_detail::to_ord(p, order);
        basis.push_back(std::move(q));
        lms.push_back(basis.back().front().mon);
    }

    // Pending S-pairs keyed by (graded lcm degree, lcm under the order, i, j).
    struct PairKey {
        std::int64_t deg;
        Monomial lcm_mon;
        std::size_t i, j;
    };
    auto grade = [&](const Monomial& m) {
        return order.kind() == MonomialOrder::Kind::WeightedGrevlex
                   ? m.weighted_degree(order.weights())
                   : m.total_degree();
    };
    auto key_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order.compare(a.lcm_mon, b.lcm_mon);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(key_less)> pending(key_less);
    std::set<std::pair<std::size_t, std::size_t>> pending_ids;

    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = lcm(lms[i], lms[j]);
        pending.insert({grade(l), l, i, j});
        pending_ids.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_ids.erase({pk.i, pk.j});

        // coprimality criterion
        Monomial prod = lms[pk.i] * lms[pk.j];
        if (pk.lcm_mon == prod) continue;

        // chain criterion: some third leading term divides the lcm and both
        // mixed pairs were already handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!lms[k].divides(pk.lcm_mon)) continue;
            auto p1 = std::minmax(pk.i, k);
            auto p2 = std::minmax(pk.j, k);
            if (!pending_ids.count({p1.first, p1.second}) &&
                !pending_ids.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        OrdPoly s = gb_detail::s_polynomial(basis[pk.i], basis[pk.j], order);
        OrdPoly r = gb_detail::reduce_full(std::move(s), basis, lms, order);
        if (r.empty()) continue;
        if (r.front().mon.total_degree() > limits.max_total_degree)
            throw TooLargeError("buchberger: degree guard exceeded (" +
                                std::to_string(limits.max_total_degree) + ")");
        if (basis.size() + 1 > limits.max_basis)
            throw TooLargeError("buchberger: basis size guard exceeded (" +
                                std::to_string(limits.max_basis) + ")");
        basis.push_back(std::move(r));
        lms.push_back(basis.back().front().mon);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another surviving leading monomial
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i)) keep[i] = false;
        }
    std::vector<OrdPoly> minimal;
    std::vector<Monomial> minimal_lms;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            minimal.push_back(std::move(basis[i]));
            minimal_lms.push_back(lms[i]);
        }

    // tail-reduce each generator against the others and make monic
    std::vector<OrdPoly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrdPoly> others;
        std::vector<Monomial> other_lms;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                other_lms.push_back(minimal_lms[j]);
            }
        OrdPoly r = gb_detail::reduce_full(minimal[i], others, other_lms, order);
        Rational inv = Rational(1) / r.front().coeff;
        for (auto& t : r) t.coeff *= inv;
        reduced[i] = std::move(r);
    }

    std::vector<std::size_t> perm(reduced.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return order.less(reduced[a].front().mon, reduced[b].front().mon);
    });

    GroebnerBasis gb;
    gb.order = order;
    gb.nvars = nvars;
    for (auto idx : perm) {
        gb.leading.push_back(reduced[idx].front().mon);
        gb.generators.push_back(gb_detail::from_ord(nvars, reduced[idx], names));
    }

    // membership of the inputs in the computed basis
    {
        std::vector<OrdPoly> gens;
        for (const auto& g : gb.generators) gens.push_back(gb_detail::to_ord(g, order));
        for (const auto& p : input) {
            OrdPoly r = gb_detail::reduce_full(gb_detail::to_ord(p, order), gens, gb.leading, order);
            if (!r.empty())
                throw Error("buchberger: input generator failed membership verification");
        }
    }
    return gb;
}

// Remainder of p on division by the basis: no monomial of the result is
// divisible by any leading term. Zero exactly when p lies in the ideal.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.nvars) throw DomainError("normal_form: variable count mismatch");
    std::vector<gb_detail::OrdPoly> gens;
    gens.reserve(gb.generators.size());
    for (const auto& g : gb.generators) gens.push_back(gb_detail::to_ord(g, gb.order));
    auto r = gb_detail::reduce_full(gb_detail::to_ord(p, gb.order), gens, gb.leading, gb.order);
    return gb_detail::from_ord(gb.nvars, r, p.var_names());
}

}  // namespace liminal

#endif  // LIMINAL_GROEBNER_HPP
