#include "ci2/poly/parse.hpp"

#include "ci2/error.hpp"

#include <cctype>

namespace ci2 {

namespace {

struct RawTerm {
    mpq_class coeff = 1;
    std::vector<std::pair<std::size_t, unsigned>> powers;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            RawTerm t = term();
            if (negative) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
            negative = peek() == '-';
            ++pos_;
        }
        return terms;
    }

private:
    RawTerm term() {
        RawTerm t;
        factor(t);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') return t;
            ++pos_;
            factor(t);
        }
    }

    void factor(RawTerm& t) {
        skip_ws();
        if (at_end()) fail("expected a coefficient or variable");
        if (peek() == 'x') {
            ++pos_;
            const std::size_t index = integer("variable index");
            unsigned exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                const std::size_t e = integer("exponent");
                if (e > 65535) fail("exponent too large");
                exponent = static_cast<unsigned>(e);
            }
            if (index >= kMaxVars) fail("variable index exceeds 63");
            t.powers.emplace_back(index, exponent);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits());
            mpz_class den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                den = mpz_class(digits());
                if (den == 0) fail("zero denominator");
            }
            mpq_class q(num, den);
            q.canonicalize();
            t.coeff *= q;
            return;
        }
        fail(std::string("unexpected '") + peek() + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t integer(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        const std::string d = digits();
        if (d.size() > 9) fail(std::string(what) + " too large");
        return static_cast<std::size_t>(std::stoul(d));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Field field, std::optional<std::size_t> n_vars, std::size_t line) {
    const auto raw = Parser(text, line).parse();
    std::size_t needed = 0;
    for (const auto& t : raw)
        for (const auto& [i, e] : t.powers) needed = std::max(needed, i + 1);
    const std::size_t n = n_vars.value_or(needed);
    if (needed > n) {
        throw ParseError("variable x" + std::to_string(needed - 1) + " outside a ring of " + std::to_string(n) +
                             " variables",
                         line, 1);
    }
    std::vector<Term> terms;
    for (const auto& t : raw) {
        Exponents e(n, 0);
        for (const auto& [i, k] : t.powers) {
            if (e[i] + k > 65535) throw ParseError("exponent too large", line, 1);
            e[i] = static_cast<std::uint16_t>(e[i] + k);
        }
        const unsigned d = exponent_degree(e);
        terms.push_back({std::move(e), d, Scalar(field, t.coeff)});
    }
    return Polynomial::from_terms(field, n, std::move(terms));
}

std::size_t count_variables(std::string_view text) {
    std::size_t needed = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t j = i + 1, v = 0;
        bool any = false;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000) {
            v = v * 10 + static_cast<std::size_t>(text[j] - '0');
            ++j;
            any = true;
        }
        if (any) needed = std::max(needed, v + 1);
    }
    return needed;
}

}  // namespace ci2
