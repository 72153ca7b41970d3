#ifndef LIMINAL_QUOTIENT_HPP
#define LIMINAL_QUOTIENT_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "liminal/linalg.hpp"
#include "liminal/staircase.hpp"

namespace liminal {

// Largest quotient dimension for which dense multiplication matrices are
// built. Larger quotients are handled through the counting paths only.
inline constexpr std::int64_t kMatrixDimensionCap = 800;

// A zero-dimensional quotient ring presented by a reduced basis and its
// (materialized) staircase, with coordinates in the staircase basis.
class QuotientAlgebra {
   public:
    QuotientAlgebra(GroebnerBasis gb, Staircase basis)
        : gb_(std::move(gb)), basis_(std::move(basis)) {
        if (!basis_.materialized())
            throw TooLargeError("quotient algebra requires a materialized staircase");
        if (basis_.dimension() > Integer(static_cast<long>(kMatrixDimensionCap)))
            throw TooLargeError("quotient dimension exceeds the multiplication-matrix cap");
        for (std::size_t i = 0; i < basis_.size(); ++i)
            index_.emplace(basis_.monomial(i).exponents(), i);
    }

    std::size_t dim() const { return basis_.size(); }
    const GroebnerBasis& gb() const { return gb_; }
    const Staircase& basis() const { return basis_; }

    QVector coords(const Polynomial& reduced) const {
        QVector v(dim(), Rational(0));
        for (const auto& t : reduced.terms()) {
            auto it = index_.find(t.mon.exponents());
            if (it == index_.end())
                throw Error("coords: monomial outside the staircase basis");
            v[it->second] = t.coeff;
        }
        return v;
    }

    // Matrix of multiplication by z_i on the quotient, columns indexed by the
    // staircase basis.
    QMatrix multiplication_matrix(std::size_t var) const {
        if (var >= gb_.nvars) throw DomainError("multiplication_matrix: index out of range");
        const std::size_t d = dim();
        QMatrix m(d, d);
        Monomial zi(gb_.nvars);
        zi[var] = 1;
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial p = Polynomial::from_terms(
                gb_.nvars, {Term{basis_.monomial(j) * zi, Rational(1)}});
            QVector col = coords(normal_form(p, gb_));
            for (std::size_t i = 0; i < d; ++i)
                if (!col[i].is_zero()) m.at(i, j) = col[i];
        }
        return m;
    }

   private:
    GroebnerBasis gb_;
    Staircase basis_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

inline QMatrix multiplication_matrix(const GroebnerBasis& gb, const Staircase& staircase,
                                     std::size_t var) {
    return QuotientAlgebra(gb, staircase).multiplication_matrix(var);
}

// True iff multiplication by every variable is nilpotent on the quotient,
// i.e. the variety of the ideal is the origin alone. Decided through normal
// forms of variable powers: z_i is nilpotent exactly when z_i^dim reduces to
// zero.
inline bool is_origin_only(const GroebnerBasis& gb, const Staircase& st) {
    if (st.dimension() == 0) return true;

    bool all_monomial = true;
    for (const auto& g : gb.generators)
        if (g.terms().size() != 1) { all_monomial = false; break; }
    if (all_monomial) return true;  // finite monomial quotient is supported at the origin

    if (st.dimension() > Integer(200000))
        throw TooLargeError("origin test: quotient too large for the power iteration");
    const std::int64_t d = st.dimension_int64();

    for (std::size_t i = 0; i < gb.nvars; ++i) {
        Monomial zi(gb.nvars);
        zi[i] = 1;
        Monomial start(gb.nvars);
        start[i] = st.box_bounds()[i];
        Polynomial p = normal_form(
            Polynomial::from_terms(gb.nvars, {Term{start, Rational(1)}}), gb);
        for (std::int64_t k = st.box_bounds()[i]; !p.is_zero() && k < d; ++k)
            p = normal_form(p * Term{zi, Rational(1)}, gb);
        if (!p.is_zero()) return false;
    }
    return true;
}

inline bool is_origin_only(const GroebnerBasis& gb,
                           std::uint64_t materialize_cap = Staircase::kDefaultMaterializeCap) {
    return is_origin_only(gb, standard_monomials(gb, materialize_cap));
}

struct OriginLocalization {
    std::int64_t dimension = 0;
    Staircase basis;
};

// Splits off the origin-supported factor of a zero-dimensional quotient.
// The complement of the local factor is the span of the stable images of the
// multiplication matrices (the points where some coordinate acts
// invertibly); the local dimension and a genuine monomial staircase for the
// local factor are then recovered by a linear-algebra walk over monomials in
// increasing order, accepting those whose images stay independent modulo the
// complement.
inline OriginLocalization origin_localize(const GroebnerBasis& gb, const Staircase& global) {
    QuotientAlgebra A(gb, global);
    const std::size_t d = A.dim();
    OriginLocalization out;
    if (d == 0) {
        out.basis = Staircase::from_monomials(gb.nvars, {});
        return out;
    }

    std::vector<QMatrix> mats;
    mats.reserve(gb.nvars);
    for (std::size_t i = 0; i < gb.nvars; ++i) mats.push_back(A.multiplication_matrix(i));

    IncrementalSpan complement(d);
    for (const auto& M : mats) {
        QMatrix cur = M;
        std::size_t r = rank(cur);
        while (true) {
            QMatrix next = M * cur;
            std::size_t rn = rank(next);
            if (rn == r) break;
            cur = std::move(next);
            r = rn;
        }
        for (std::size_t j = 0; j < d; ++j) {
            QVector col(d);
            for (std::size_t i = 0; i < d; ++i) col[i] = cur.at(i, j);
            complement.insert(std::move(col));
        }
    }

    const std::size_t mu0 = d - complement.dim();
    out.dimension = static_cast<std::int64_t>(mu0);
    if (mu0 == 0) {
        out.basis = Staircase::from_monomials(gb.nvars, {});
        return out;
    }

    // walk monomials in increasing order, testing independence mod complement
    IncrementalSpan span = complement;
    auto order_cmp = [ord = gb.order](const Monomial& a, const Monomial& b) {
        return ord.less(a, b);
    };

    struct Accepted {
        Monomial mon;
        QVector vec;
    };
    std::vector<Accepted> accepted;
    std::vector<Monomial> rejected;

    QVector e_one(d, Rational(0));
    if (!global.monomial(0).is_one()) throw Error("origin_localize: staircase misses 1");
    e_one[0] = Rational(1);
    if (!span.insert(e_one)) throw Error("origin_localize: unit vanishes in local factor");
    accepted.push_back({Monomial(gb.nvars), std::move(e_one)});

    std::map<Monomial, std::pair<std::size_t, std::size_t>, decltype(order_cmp)> frontier(
        order_cmp);
    auto push_children = [&](std::size_t parent) {
        for (std::size_t i = 0; i < gb.nvars; ++i) {
            Monomial child = accepted[parent].mon;
            child[i] += 1;
            frontier.emplace(child, std::make_pair(parent, i));
        }
    };
    push_children(0);

    while (!frontier.empty()) {
        auto it = frontier.begin();
        Monomial m = it->first;
        auto [parent, var] = it->second;
        frontier.erase(it);
        bool pruned = false;
        for (const auto& r : rejected)
            if (r.divides(m)) { pruned = true; break; }
        if (pruned) continue;
        QVector v = mats[var] * accepted[parent].vec;
        if (span.insert(v)) {
            accepted.push_back({m, std::move(v)});
            push_children(accepted.size() - 1);
        } else {
            rejected.push_back(std::move(m));
        }
    }

    if (accepted.size() != mu0)
        throw Error("origin_localize: staircase walk dimension mismatch");
    std::vector<Monomial> mons;
    mons.reserve(accepted.size());
    for (auto& a : accepted) mons.push_back(std::move(a.mon));
    out.basis = Staircase::from_monomials(gb.nvars, std::move(mons));
    return out;
}

}  // namespace liminal

#endif  // LIMINAL_QUOTIENT_HPP
