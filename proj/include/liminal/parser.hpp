#ifndef LIMINAL_PARSER_HPP
#define LIMINAL_PARSER_HPP

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "liminal/polynomial.hpp"

namespace liminal {

// Recursive-descent parser for the polynomial grammar
//
//   poly   := ['-'] term {('+'|'-') term}
//   term   := coeff ['*' factors] | factors
//   factors:= factor {'*' factor}
//   factor := var ['^' nat]
//   coeff  := nat ['/' nat]
//   var    := letter {letter|digit}
//
// Whitespace is insignificant. Accepted variable names are the aliases
// x, y, z, w, v, optionally followed by an index 1..99 (x1, z17, ...); the
// canonical variable order is fixed by first appearance in the text.
// A zero polynomial parses successfully; callers that need a germ reject it.
class PolynomialParser {
   public:
    explicit PolynomialParser(std::string text) : text_(std::move(text)) {}

    Polynomial parse() {
        struct RawTerm {
            Rational coeff;
            std::map<std::size_t, std::uint32_t> exps;  // var id -> exponent
        };
        std::vector<RawTerm> raw;

        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
            skip_ws();
        }
        raw.push_back(parse_term<RawTerm>());
        if (negate) raw.back().coeff = -raw.back().coeff;
        skip_ws();
        while (pos_ < text_.size()) {
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            raw.push_back(parse_term<RawTerm>());
            if (c == '-') raw.back().coeff = -raw.back().coeff;
            skip_ws();
        }

        std::size_t nvars = names_.size();
        std::vector<Term> terms;
        terms.reserve(raw.size());
        for (auto& rt : raw) {
            Monomial m(nvars);
            for (auto& [id, e] : rt.exps) m[id] = e;
            terms.push_back({std::move(m), std::move(rt.coeff)});
        }
        return Polynomial::from_terms(nvars, std::move(terms), names_);
    }

   private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    template <class RawTerm>
    RawTerm parse_term() {
        RawTerm t{Rational(1), {}};
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coeff = parse_coeff();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                parse_factors(t);
            }
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            parse_factors(t);
        } else {
            throw ParseError("expected term", pos_);
        }
        return t;
    }

    template <class RawTerm>
    void parse_factors(RawTerm& t) {
        parse_factor(t);
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            skip_ws();
            if (!std::isalpha(static_cast<unsigned char>(peek())))
                throw ParseError("expected variable", pos_);
            parse_factor(t);
            skip_ws();
        }
    }

    template <class RawTerm>
    void parse_factor(RawTerm& t) {
        std::size_t id = parse_var();
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_exponent();
        }
        t.exps[id] += e;
    }

    std::size_t parse_var() {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("expected variable", pos_);
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
            name += text_[pos_++];
        }
        if (!valid_var_name(name))
            throw ParseError("unknown variable '" + name + "'", start);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        std::size_t id = names_.size();
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    static bool valid_var_name(const std::string& name) {
        static const std::string letters = "xyzwv";
        if (name.empty() || letters.find(name[0]) == std::string::npos) return false;
        if (name.size() == 1) return true;
        if (name.size() > 3) return false;  // index at most 99
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
        return name[1] != '0';
    }

    Integer parse_nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected number", pos_);
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        Integer n;
        // base fixed to 10: the gmp string constructor would treat a leading
        // zero as an octal marker
        mpz_set_str(n.get_mpz_t(), digits.c_str(), 10);
        return n;
    }

    std::uint32_t parse_exponent() {
        std::size_t start = pos_;
        Integer n = parse_nat();
        if (n > 1000000) throw ParseError("exponent too large", start);
        return static_cast<std::uint32_t>(n.get_ui());
    }

    Rational parse_coeff() {
        Integer num = parse_nat();
        skip_ws();
        if (peek() == '/') {
            std::size_t slash = pos_;
            ++pos_;
            skip_ws();
            Integer den = parse_nat();
            if (den == 0) throw ParseError("zero denominator", slash);
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> ids_;
};

inline Polynomial parse_polynomial(const std::string& text) {
    return PolynomialParser(text).parse();
}

}  // namespace liminal

#endif  // LIMINAL_PARSER_HPP
