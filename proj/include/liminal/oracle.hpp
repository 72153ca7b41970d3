#ifndef LIMINAL_ORACLE_HPP
#define LIMINAL_ORACLE_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "liminal/classifier.hpp"
#include "liminal/linalg.hpp"

namespace liminal {

// Brute-force oracles. Each one deliberately avoids the code path it is used
// to validate: box enumeration instead of a basis computation, series
// expansion instead of staircase grading, exhaustive scan instead of
// null-space construction.

struct BrieskornAnalysis {
    Integer mu;
    Staircase staircase;
    WeightSystem weight_system;
};

// Closed-form data of sum_i z_i^{b_i}: mu = prod (b_i - 1), staircase is the
// full exponent box {alpha : alpha_i <= b_i - 2}, weights a_i = L/b_i with
// L = lcm(b) scaled primitive.
inline BrieskornAnalysis brieskorn_analyze(const std::vector<std::uint32_t>& b) {
    if (b.empty()) throw DomainError("brieskorn_analyze: empty exponent list");
    for (auto e : b)
        if (e < 2) throw DomainError("brieskorn_analyze: exponents must be >= 2");

    BrieskornAnalysis out;
    out.mu = 1;
    for (auto e : b) out.mu *= (e - 1);

    std::vector<Monomial> mons;
    std::vector<std::uint32_t> cur(b.size(), 0);
    while (true) {
        mons.push_back(Monomial(cur));
        std::size_t k = 0;
        while (k < b.size() && cur[k] + 1 == b[k] - 1) cur[k++] = 0;
        if (k == b.size()) break;
        ++cur[k];
    }
    out.staircase = Staircase::from_monomials(b.size(), std::move(mons));

    std::int64_t L = 1;
    for (auto e : b) L = std::lcm<std::int64_t>(L, e);
    std::vector<std::int64_t> a;
    for (auto e : b) a.push_back(L / e);
    std::int64_t g = L;
    for (auto w : a) g = std::gcd(g, w);
    for (auto& w : a) w /= g;
    out.weight_system.weights = std::move(a);
    out.weight_system.degree = L / g;
    return out;
}

namespace oracle_detail {

// (t^n - 1) as a coefficient vector, and exact division by (t^m - 1).
inline std::vector<Integer> poly_t_pow_minus_one(std::int64_t n) {
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

inline std::vector<Integer> poly_mul(const std::vector<Integer>& a,
                                     const std::vector<Integer>& b) {
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Divides by (t^m - 1); throws when the division leaves a remainder.
inline std::vector<Integer> poly_div_t_pow_minus_one(std::vector<Integer> num, std::int64_t m) {
    if (num.size() <= static_cast<std::size_t>(m))
        throw SeriesNotPolynomialError("series denominator degree exceeds numerator");
    std::vector<Integer> q(num.size() - static_cast<std::size_t>(m), Integer(0));
    for (std::size_t i = num.size(); i-- > static_cast<std::size_t>(m);) {
        Integer c = num[i];
        if (c == 0) continue;
        q[i - m] = c;
        num[i] = 0;
        num[i - m] += c;
    }
    for (const auto& c : num)
        if (c != 0) throw SeriesNotPolynomialError("Poincare series is not a polynomial");
    return q;
}

}  // namespace oracle_detail

// Expands prod_i (t^{d-a_i} - 1)/(t^{a_i} - 1) and compares it coefficient by
// coefficient with the weight decomposition (weight k corresponds to
// weighted degree k + d). Throws SeriesNotPolynomialError when the product
// fails to be a polynomial, which signals that the weight system does not
// belong to an isolated singularity.
inline bool poincare_series_check(const WeightSystem& ws, const WeightDecomposition& dec) {
    using namespace oracle_detail;
    std::vector<Integer> series{Integer(1)};
    for (auto a : ws.weights) {
        if (a >= ws.degree)
            throw SeriesNotPolynomialError("weight >= degree: germ has a smooth factor");
        series = poly_mul(series, poly_t_pow_minus_one(ws.degree - a));
    }
    for (auto a : ws.weights) series = poly_div_t_pow_minus_one(std::move(series), a);

    std::map<std::int64_t, Integer> expect;
    for (std::size_t j = 0; j < series.size(); ++j) {
        if (series[j] < 0) throw SeriesNotPolynomialError("negative Poincare coefficient");
        if (series[j] != 0) expect[static_cast<std::int64_t>(j) - ws.degree] = series[j];
    }
    return expect == dec.dimensions;
}

// Exhaustively scans integer vectors with all coordinates nonzero and
// absolute value at most `bound`, in the order 1, -1, 2, -2, ... per
// coordinate (last coordinate fastest), returning the first kernel vector.
// Rows are scaled to integers first (the kernel is unchanged), so the scan
// runs in machine arithmetic.
inline std::optional<QVector> brute_force_kernel_search(const QMatrix& m, int bound) {
    if (bound < 1) throw DomainError("brute_force_kernel_search: bound must be >= 1");
    const std::size_t cols = m.cols();
    if (cols == 0) return QVector{};
    const std::size_t rows = m.rows();

    std::vector<std::vector<std::int64_t>> zi(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j) l = lcm(l, m.at(i, j).denominator());
        for (std::size_t j = 0; j < cols; ++j)
            zi[i][j] = to_int64(m.at(i, j).numerator() * (l / m.at(i, j).denominator()));
    }

    const std::size_t values = 2 * static_cast<std::size_t>(bound);
    auto value_at = [](std::size_t idx) -> std::int64_t {
        std::int64_t v = static_cast<std::int64_t>(idx / 2) + 1;
        return (idx % 2 == 0) ? v : -v;
    };
    std::vector<std::size_t> state(cols, 0);
    std::vector<std::int64_t> v(cols);
    while (true) {
        for (std::size_t i = 0; i < cols; ++i) v[i] = value_at(state[i]);
        bool in_kernel = true;
        for (std::size_t r = 0; r < rows && in_kernel; ++r) {
            std::int64_t s = 0;
            for (std::size_t c = 0; c < cols; ++c) s += zi[r][c] * v[c];
            if (s != 0) in_kernel = false;
        }
        if (in_kernel) {
            QVector out(cols);
            for (std::size_t i = 0; i < cols; ++i) out[i] = Rational(Integer((long)v[i]));
            return out;
        }
        std::size_t k = cols;
        while (k-- > 0) {
            if (++state[k] < values) break;
            state[k] = 0;
            if (k == 0) return std::nullopt;
        }
    }
}

}  // namespace liminal

#endif  // LIMINAL_ORACLE_HPP
