#ifndef LIMINAL_WEIGHT_SYSTEM_HPP
#define LIMINAL_WEIGHT_SYSTEM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "liminal/linalg.hpp"
#include "liminal/polynomial.hpp"

namespace liminal {

// Integer weights a_1..a_m of a good C*-action together with the degree d:
// every monomial z^alpha of the associated germ satisfies sum a_i alpha_i = d.
// Normalized so that gcd(a_1,...,a_m) = 1 and d > 1. The fractional weights
// w_i = a_i/d and the index N = sum a_i - d are derived.
struct WeightSystem {
    std::vector<std::int64_t> weights;
    std::int64_t degree = 0;
    // Set when the support did not pin down the weight ray uniquely and the
    // minimal-degree solution was chosen.
    bool ambiguous = false;

    std::int64_t weight_sum() const {
        return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    }
    std::int64_t index_N() const { return weight_sum() - degree; }
    Rational fractional_weight(std::size_t i) const {
        return Rational(Integer(static_cast<long>(weights[i])), Integer(static_cast<long>(degree)));
    }
    // sum_i w_i = N/d + 1; equals the minimal exponent in this setting.
    Rational weight_sum_fraction() const {
        return Rational(Integer(static_cast<long>(weight_sum())),
                        Integer(static_cast<long>(degree)));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(weights[i]);
        }
        s += ";" + std::to_string(degree) + ")";
        return s;
    }

    friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
        return a.weights == b.weights && a.degree == b.degree;
    }
};

// Euler field applied to f: sum_i a_i z_i df/dz_i. Equals d*f exactly when f
// is weighted homogeneous for the given system.
inline Polynomial euler_field_apply(const Polynomial& f, const WeightSystem& ws) {
    if (ws.weights.size() != f.nvars())
        throw DomainError("euler_field_apply: variable count mismatch");
    Polynomial acc = Polynomial::zero(f.nvars());
    acc.set_var_names(f.var_names());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Monomial zi(f.nvars());
        zi[i] = 1;
        acc = acc + f.derivative(i) * Term{zi, Rational(static_cast<long>(ws.weights[i]))};
    }
    return acc;
}

namespace detail {

// Positive integer solutions of the exponent system for a fixed degree d,
// searched by pruned recursion over the present variables. Used only when
// the solution ray is not unique.
inline bool search_weights_for_degree(const std::vector<const Monomial*>& support,
                                      const std::vector<std::size_t>& present,
                                      std::int64_t d, std::vector<std::int64_t>& partial,
                                      std::size_t k, std::vector<std::int64_t>& out) {
    if (k == present.size()) {
        for (const Monomial* m : support) {
            std::int64_t s = 0;
            for (std::size_t t = 0; t < present.size(); ++t)
                s += static_cast<std::int64_t>((*m)[present[t]]) * partial[t];
            if (s != d) return false;
        }
        out = partial;
        return true;
    }
    for (std::int64_t a = 1; a <= d; ++a) {
        partial[k] = a;
        bool feasible = true;
        // prune: partial weighted degrees must not overshoot d
        for (const Monomial* m : support) {
            std::int64_t s = 0;
            bool complete = true;
            for (std::size_t t = 0; t < present.size(); ++t) {
                std::uint32_t e = (*m)[present[t]];
                if (e == 0) continue;
                if (t <= k) s += static_cast<std::int64_t>(e) * partial[t];
                else complete = false;
            }
            if (s > d || (complete && s != d)) { feasible = false; break; }
        }
        if (feasible && search_weights_for_degree(support, present, d, partial, k + 1, out))
            return true;
    }
    return false;
}

}  // namespace detail

// Solves sum_i a_i alpha_i = d over the support of f for a positive primitive
// integer solution. Returns the unique normalized system when the solution
// ray is unique; when the ray is ambiguous, returns the solution minimizing d
// (then sum a_i, then lexicographic) with the ambiguity recorded. Variables
// absent from f get weight 1. Absence of any admissible system is a value,
// not an error.
inline std::optional<WeightSystem> detect_weight_system(const Polynomial& f,
                                                        std::int64_t degree_cap = 512) {
    if (f.is_zero() || f.is_constant()) return std::nullopt;
    const std::size_t m = f.nvars();

    std::vector<const Monomial*> support;
    support.reserve(f.terms().size());
    std::vector<bool> present_mask(m, false);
    for (const auto& t : f.terms()) {
        support.push_back(&t.mon);
        for (std::size_t i = 0; i < m; ++i)
            if (t.mon[i] > 0) present_mask[i] = true;
    }
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < m; ++i)
        if (present_mask[i]) present.push_back(i);
    bool has_absent = present.size() < m;

    // Rows [alpha_{present} | -1] over the present variables; unknowns (a, d).
    QMatrix sys(support.size(), present.size() + 1);
    for (std::size_t r = 0; r < support.size(); ++r) {
        for (std::size_t c = 0; c < present.size(); ++c)
            sys.at(r, c) = Rational(static_cast<long>((*support[r])[present[c]]));
        sys.at(r, present.size()) = Rational(-1);
    }
    auto kernel = kernel_basis(sys);
    if (kernel.empty()) return std::nullopt;

    std::vector<std::int64_t> a_present;
    std::int64_t d = 0;
    bool ambiguous = has_absent || kernel.size() > 1;

    if (kernel.size() == 1) {
        // unique ray: scale to the primitive integer point with d > 0
        const QVector& v = kernel[0];
        Integer den_lcm = 1;
        for (const auto& q : v) den_lcm = lcm(den_lcm, q.denominator());
        std::vector<Integer> w(v.size());
        Integer g = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            w[i] = v[i].numerator() * (den_lcm / v[i].denominator());
            g = gcd(g, w[i]);
        }
        if (g == 0) return std::nullopt;
        for (auto& x : w) x /= g;
        if (w.back() < 0)
            for (auto& x : w) x = -x;
        for (const auto& x : w)
            if (x <= 0) return std::nullopt;
        d = to_int64(w.back());
        for (std::size_t i = 0; i + 1 < w.size(); ++i) a_present.push_back(to_int64(w[i]));
    } else {
        // ambiguous ray: minimal admissible degree, found by direct search
        std::vector<std::int64_t> partial(present.size(), 1), found;
        bool ok = false;
        for (std::int64_t dd = 2; dd <= degree_cap && !ok; ++dd) {
            if (detail::search_weights_for_degree(support, present, dd, partial, 0, found)) {
                d = dd;
                a_present = found;
                ok = true;
            }
        }
        if (!ok) return std::nullopt;
    }

    if (d <= 1) return std::nullopt;

    WeightSystem ws;
    ws.weights.assign(m, 1);
    for (std::size_t t = 0; t < present.size(); ++t) ws.weights[present[t]] = a_present[t];
    ws.degree = d;
    ws.ambiguous = ambiguous;

    std::int64_t g = 0;
    for (auto w : ws.weights) g = std::gcd(g, w);
    if (g != 1) return std::nullopt;

    // the defining identity must hold on the whole support
    for (const auto& t : f.terms())
        if (t.mon.weighted_degree(ws.weights) != ws.degree) return std::nullopt;
    return ws;
}

}  // namespace liminal

#endif  // LIMINAL_WEIGHT_SYSTEM_HPP
