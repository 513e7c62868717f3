/*
   Copyright 2026 The Liaison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIAISON_PARSE_HPP
#define LIAISON_PARSE_HPP

#include <cctype>
#include <string>

#include "liaison/polynomial.hpp"

namespace liaison {

// Polynomial grammar (EBNF):
//   expr     = [ sign ] term { sign term } ;
//   sign     = "+" | "-" ;
//   term     = factor { "*" factor } ;
//   factor   = atom [ "^" integer ] ;
//   atom     = rational | variable | "(" expr ")" ;
//   rational = integer [ "/" integer ] ;
// "/" is only allowed inside a rational literal; general division is an error.

namespace detail {

template <class F>
class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr<F> ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial<F> parse() {
        Polynomial<F> p = expr();
        skip_ws();
        if (pos_ != text_.size()) err("unexpected trailing input");
        return p;
    }

private:
    Polynomial<F> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Polynomial<F> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                Polynomial<F> t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> term() {
        Polynomial<F> acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = acc * factor();
            } else if (peek() == '/') {
                err("division is not allowed in polynomial input");
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> factor() {
        Polynomial<F> base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            long e = integer();
            if (e < 0) err("negative exponent");
            Polynomial<F> acc = Polynomial<F>::constant(ring_, ring_->field().one());
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial<F> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial<F> p = expr();
            skip_ws();
            if (peek() != ')') err("expected ')'");
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@')
            return variable();
        err("expected number, variable, or '('");
    }

    Polynomial<F> rational() {
        std::string num = digits();
        skip_ws();
        if (peek() == '/') {
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                err("expected denominator after '/'");
            std::string den = digits();
            if (den == "0") err("zero denominator");
            return Polynomial<F>::constant(ring_, ring_->field().from_fraction(num, den));
        }
        return Polynomial<F>::constant(ring_, ring_->field().from_fraction(num, "1"));
    }

    Polynomial<F> variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '@'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) fail(Errc::UnknownVariable, "unknown variable '" + name + "'" + where(start));
        return Polynomial<F>::variable(ring_, *idx);
    }

    long integer() {
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected integer");
        std::string d = digits();
        if (d.size() > 9) err("integer literal too large for an exponent");
        long v = std::stol(d);
        return neg ? -v : v;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    std::string where(std::size_t at) const { return " at column " + std::to_string(at + 1); }

    [[noreturn]] void err(const std::string& msg) const {
        fail(Errc::ParseError, msg + where(pos_));
    }

    const std::string& text_;
    RingPtr<F> ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const std::string& text, RingPtr<F> ring) {
    return detail::PolyParser<F>(text, std::move(ring)).parse();
}

}  // namespace liaison

#endif
