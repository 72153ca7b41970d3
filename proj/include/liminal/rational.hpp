#ifndef LIMINAL_RATIONAL_HPP
#define LIMINAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <string>

#include "liminal/errors.hpp"

namespace liminal {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with positive denominator.
// Thin value wrapper around GMP's mpq_class; the invariants are maintained by
// canonicalizing on every constructing path (mpq arithmetic preserves them).
class Rational {
   public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}                   // NOLINT(google-explicit-constructor)
    Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(const Integer& n) : q_(n) {}        // NOLINT
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        q_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Accepts "p", "-p", "p/q"; denominators must be nonzero.
    static std::optional<Rational> parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) return std::nullopt;
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return from_mpq(q);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

   private:
    mpq_class q_;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool fits_int64(const Integer& z) {
    return z.fits_slong_p() || (z >= Integer("-9223372036854775808") &&
                                z <= Integer("9223372036854775807"));
}

inline std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) throw TooLargeError("integer exceeds 64-bit range: " + z.get_str());
    return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

}  // namespace liminal

#endif  // LIMINAL_RATIONAL_HPP
