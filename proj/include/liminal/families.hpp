#ifndef LIMINAL_FAMILIES_HPP
#define LIMINAL_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "liminal/polynomial.hpp"

namespace liminal {

// Built-in germ families used by the table command and the verification
// corpus.

// sum_{i=1}^{n+1} z_i^d : the cone over the Fermat hypersurface of degree d
// in P^n.
inline Polynomial fermat_cone(int n, int d) {
    if (n < 1 || d < 2) throw DomainError("fermat_cone: need n >= 1 and d >= 2");
    std::vector<Term> terms;
    for (int i = 0; i <= n; ++i) {
        Monomial m(static_cast<std::size_t>(n) + 1);
        m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(d);
        terms.push_back({std::move(m), Rational(1)});
    }
    return Polynomial::from_terms(static_cast<std::size_t>(n) + 1, std::move(terms));
}

// sum_i z_i^{b_i}.
inline Polynomial brieskorn_polynomial(const std::vector<std::uint32_t>& b) {
    if (b.empty()) throw DomainError("brieskorn_polynomial: empty exponent list");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 2) throw DomainError("brieskorn_polynomial: exponents must be >= 2");
        Monomial m(b.size());
        m[i] = b[i];
        terms.push_back({std::move(m), Rational(1)});
    }
    return Polynomial::from_terms(b.size(), std::move(terms));
}

// z_1^k + ... + z_{n-1}^k + z_n^{2k} + z_{n+1}^{2k} with n = 2k: the even-
// dimensional family whose members all sit exactly on the liminal threshold.
inline Polynomial example_two_ten(int k) {
    if (k < 2) throw DomainError("example_two_ten: need k >= 2");
    const int n = 2 * k;
    std::vector<std::uint32_t> b(static_cast<std::size_t>(n) + 1,
                                 static_cast<std::uint32_t>(k));
    b[static_cast<std::size_t>(n) - 1] = static_cast<std::uint32_t>(2 * k);
    b[static_cast<std::size_t>(n)] = static_cast<std::uint32_t>(2 * k);
    return brieskorn_polynomial(b);
}

}  // namespace liminal

#endif  // LIMINAL_FAMILIES_HPP
