#ifndef HSINTEG_POLY_HPP
#define HSINTEG_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <hsinteg/coeffring.hpp>

namespace hsinteg
{

/// Ordered list of distinct variable names x_1..x_d.
class VariableSet
{
public:
    // Names must be unique, nonempty identifiers starting with a letter.
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const noexcept
    {
        return names_.size();
    }
    const std::string &name(std::size_t r) const
    {
        return names_.at(r);
    }
    const std::vector<std::string> &names() const noexcept
    {
        return names_;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VariableSet &, const VariableSet &) = default;

private:
    std::vector<std::string> names_;
};

/// Exponent vector alpha in N^d.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    static Monomial unit(std::size_t nvars, std::size_t r, std::uint32_t power = 1)
    {
        Monomial m(nvars);
        m.exps[r] = power;
        return m;
    }

    std::size_t size() const noexcept
    {
        return exps.size();
    }
    std::uint32_t operator[](std::size_t r) const
    {
        return exps[r];
    }
    // |alpha|
    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;
    // supp(alpha): indices with nonzero exponent.
    std::vector<std::size_t> support() const;

    bool divides(const Monomial &other) const noexcept;
    bool coprime(const Monomial &other) const noexcept;
    // Requires divides(other); returns other / *this.
    Monomial quotient_of(const Monomial &other) const;
    Monomial lcm(const Monomial &other) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

enum class OrderKind { degrevlex, deglex, lex };

/// Global monomial order with x_1 > x_2 > ... > x_d.
class MonomialOrder
{
public:
    constexpr MonomialOrder() = default;
    constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

    static MonomialOrder parse(std::string_view text);

    OrderKind kind() const noexcept
    {
        return kind_;
    }
    std::string name() const;

    // <0, 0, >0 as a is smaller, equal, larger than b.
    int compare(const Monomial &a, const Monomial &b) const noexcept;

    friend bool operator==(const MonomialOrder &, const MonomialOrder &) = default;

private:
    OrderKind kind_ = OrderKind::degrevlex;
};

/// Everything a polynomial needs to know about where it lives.
struct PolyContext {
    RingSpec ring;
    VariableSet vars;
    MonomialOrder order;

    friend bool operator==(const PolyContext &, const PolyContext &) = default;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

ContextPtr make_context(const RingSpec &ring, VariableSet vars, MonomialOrder order = MonomialOrder{});

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse polynomial in canonical form: terms strictly decreasing in the
/// context's order, no zero coefficients, every coefficient canonical.
/// Structural equality is therefore mathematical equality.
class Polynomial
{
public:
    explicit Polynomial(ContextPtr ctx);

    static Polynomial constant(ContextPtr ctx, const mpq_class &c);
    static Polynomial constant(ContextPtr ctx, long c)
    {
        return constant(std::move(ctx), mpq_class(c));
    }
    static Polynomial variable(ContextPtr ctx, std::size_t r);
    static Polynomial term(ContextPtr ctx, Monomial mono, const mpq_class &c);
    // Sorts, merges equal monomials, canonicalizes coefficients and drops
    // zeros. Applies the degree/term-count guards.
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr &context() const noexcept
    {
        return ctx_;
    }
    const RingSpec &ring() const noexcept
    {
        return ctx_->ring;
    }
    std::size_t nvars() const noexcept
    {
        return ctx_->vars.size();
    }
    const std::vector<Term> &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_constant() const noexcept;
    const Term &leading_term() const;
    std::uint64_t total_degree() const noexcept;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial operator-() const;

    // c * this, c already canonical for the ring.
    Polynomial scaled(const Scalar &c) const;
    // c * mono * this.
    Polynomial mul_term(const Monomial &mono, const Scalar &c) const;
    Polynomial pow(unsigned e) const;

    // Formal partial derivative in the ring's characteristic (0-based r).
    Polynomial partial_derivative(std::size_t r) const;
    // Delta^(alpha)(f): coefficient of T^alpha in f(x + T).
    Polynomial taylor_coefficient(const Monomial &alpha) const;

    // Canonical printing: descending terms, explicit signs, "c*x^a*y^b".
    std::string to_string() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b);

private:
    Polynomial(ContextPtr ctx, std::vector<Term> canonical_terms) : ctx_(std::move(ctx)), terms_(std::move(canonical_terms)) {}

    void check_same_context(const Polynomial &other) const;
    void check_guards() const;

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

bool same_context(const ContextPtr &a, const ContextPtr &b);

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | variable ['^' nat] | '(' expr ')' ['^' nat]
//   coefficient := integer | integer '/' integer   (fractions over Q only)
// Throws ParseError (with character position) on malformed input.
Polynomial parse_polynomial(std::string_view text, const ContextPtr &ctx);

// Binomial coefficient C(n, k) as an integer.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

} // namespace hsinteg

#endif
