#ifndef LIMINAL_MONOMIAL_HPP
#define LIMINAL_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "liminal/errors.hpp"

namespace liminal {

// Exponent vector z_1^{e_1} ... z_m^{e_m}. The length is fixed by the
// analysis context (number of variables).
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    std::int64_t weighted_degree(const std::vector<std::int64_t>& w) const {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += w[i] * e_[i];
        return d;
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    // Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

   private:
    std::vector<std::uint32_t> e_;
};

// Total order on monomials, compatible with multiplication and well-founded.
// Two kinds: graded reverse lexicographic, and weighted-degree refined by
// grevlex (used when a weight system is known, so the quotient basis carries
// the grading directly).
class MonomialOrder {
   public:
    enum class Kind { Grevlex, WeightedGrevlex };

    MonomialOrder() : kind_(Kind::Grevlex) {}
    static MonomialOrder grevlex() { return MonomialOrder(); }
    static MonomialOrder weighted_grevlex(std::vector<std::int64_t> weights) {
        for (auto w : weights)
            if (w <= 0) throw DomainError("monomial order weights must be positive");
        MonomialOrder o;
        o.kind_ = Kind::WeightedGrevlex;
        o.weights_ = std::move(weights);
        return o;
    }

    Kind kind() const { return kind_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::WeightedGrevlex) {
            std::int64_t wa = a.weighted_degree(weights_);
            std::int64_t wb = b.weighted_degree(weights_);
            if (wa != wb) return wa < wb ? -1 : 1;
        }
        std::int64_t da = a.total_degree();
        std::int64_t db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        // grevlex tie-break: the last nonzero entry of a-b decides, reversed.
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

   private:
    Kind kind_;
    std::vector<std::int64_t> weights_;
};

}  // namespace liminal

#endif  // LIMINAL_MONOMIAL_HPP
