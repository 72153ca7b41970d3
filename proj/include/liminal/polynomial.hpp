#ifndef LIMINAL_POLYNOMIAL_HPP
#define LIMINAL_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liminal/monomial.hpp"
#include "liminal/rational.hpp"

namespace liminal {

struct Term {
    Monomial mon;
    Rational coeff;
};

inline std::vector<std::string> default_var_names(std::size_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i + 1));
    return names;
}

// Exact multivariate polynomial over Q. Terms are kept sorted in descending
// canonical (grevlex) order with no zero coefficients, so iteration order and
// printing are deterministic. Values are immutable in spirit: every operation
// returns a fresh polynomial.
class Polynomial {
   public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars, std::vector<std::string> names = {})
        : nvars_(nvars), names_(names.empty() ? default_var_names(nvars) : std::move(names)) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
        return p;
    }

    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                                 std::vector<std::string> names = {}) {
        Polynomial p(nvars, std::move(names));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<std::string>& var_names() const { return names_; }
    void set_var_names(std::vector<std::string> names) { names_ = std::move(names); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

    Rational constant_term() const {
        if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
        return Rational(0);
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mon.total_degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(nvars_, names_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    Polynomial operator*(const Term& t) const {
        Polynomial r(nvars_, names_);
        if (t.coeff.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& s : terms_) r.terms_.push_back({s.mon * t.mon, s.coeff * t.coeff});
        return r;  // multiplying by a fixed monomial preserves the term order
    }

    Polynomial operator*(const Polynomial& o) const {
        std::vector<Term> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) acc.push_back({a.mon * b.mon, a.coeff * b.coeff});
        return from_terms(nvars_, std::move(acc), names_);
    }

    // Termwise formal derivative with respect to variable i (0-based).
    Polynomial derivative(std::size_t i) const {
        if (i >= nvars_) throw DomainError("derivative: variable index out of range");
        std::vector<Term> acc;
        for (const auto& t : terms_) {
            if (t.mon[i] == 0) continue;
            Term d{t.mon, t.coeff * Rational(static_cast<long>(t.mon[i]))};
            d.mon[i] -= 1;
            acc.push_back(std::move(d));
        }
        return from_terms(nvars_, std::move(acc), names_);
    }

    // Equality is by named terms: the same variables carry the same
    // exponents with the same coefficients. Variables that appear in no term
    // are irrelevant, so a polynomial equals its image in a larger ring.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.named_terms() == b.named_terms();
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text form: terms in descending grevlex order, coefficients in
    // lowest terms, grammar-compatible (round-trips through the parser).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c.sign() < 0) out += "-", c = -c;
            } else {
                out += c.sign() < 0 ? "-" : "+";
                if (c.sign() < 0) c = -c;
            }
            first = false;
            std::string mon = monomial_str(t.mon);
            if (mon.empty()) {
                out += c.str();
            } else if (c == Rational(1)) {
                out += mon;
            } else {
                out += c.str() + "*" + mon;
            }
        }
        return out;
    }

    std::string monomial_str(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += names_[i];
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
        return out;
    }

    std::map<std::map<std::string, std::uint32_t>, Rational> named_terms() const {
        std::map<std::map<std::string, std::uint32_t>, Rational> out;
        for (const auto& t : terms_) {
            std::map<std::string, std::uint32_t> key;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.mon[i] > 0) key[names_[i]] = t.mon[i];
            out.emplace(std::move(key), t.coeff);
        }
        return out;
    }

   private:
    void normalize() {
        MonomialOrder ord;  // canonical grevlex
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.mon, b.mon);
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mon == t.mon) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    // Signed merge of two canonically sorted term lists.
    Polynomial merged(const Polynomial& o, bool subtract) const {
        MonomialOrder ord;
        Polynomial r(nvars_, names_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int c;
            if (i == terms_.size()) c = -1;
            else if (j == o.terms_.size()) c = 1;
            else c = ord.compare(terms_[i].mon, o.terms_[j].mon);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                Term t = o.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                Rational sum = subtract ? terms_[i].coeff - o.terms_[j].coeff
                                        : terms_[i].coeff + o.terms_[j].coeff;
                if (!sum.is_zero()) r.terms_.push_back({terms_[i].mon, std::move(sum)});
                ++i, ++j;
            }
        }
        return r;
    }

    std::size_t nvars_;
    std::vector<Term> terms_;
    std::vector<std::string> names_;
};

}  // namespace liminal

#endif  // LIMINAL_POLYNOMIAL_HPP
