#include <cctype>
#include <string>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>
#include <hsinteg/poly.hpp>

namespace hsinteg
{

namespace
{

class Parser
{
public:
    Parser(std::string_view text, const ContextPtr &ctx) : text_(text), ctx_(ctx) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr()
    {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) {
            acc = -acc;
        }
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Polynomial rhs = term();
            if (c == '+') {
                acc += rhs;
            } else {
                acc -= rhs;
            }
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return maybe_power(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return coefficient();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto r = ctx_->vars.index_of(name);
            if (!r) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return maybe_power(Polynomial::variable(ctx_, *r));
        }
        if (c == '\0') {
            fail("unexpected end of input");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Polynomial maybe_power(Polynomial base)
    {
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        const mpz_class e = natural();
        if (e > limits().max_degree) {
            pos_ = start;
            throw ResourceError("exponent " + e.get_str() + " exceeds the degree guard");
        }
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    mpz_class natural()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a natural number");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial coefficient()
    {
        const std::size_t start = pos_;
        mpq_class value(natural());
        if (peek() == '/') {
            if (ctx_->ring.kind() != RingKind::rationals) {
                fail("fraction literal is only allowed over Q");
            }
            ++pos_;
            const mpz_class den = natural();
            if (den == 0) {
                fail("zero denominator");
            }
            value = mpq_class(value.get_num(), den);
            value.canonicalize();
        }
        try {
            return Polynomial::constant(ctx_, value);
        } catch (const DomainError &e) {
            pos_ = start;
            fail(e.what());
        }
    }

    std::string_view text_;
    const ContextPtr &ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr &ctx)
{
    return Parser(text, ctx).parse();
}

} // namespace hsinteg
