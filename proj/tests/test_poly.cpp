#include <doctest.h>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>
#include <hsinteg/poly.hpp>

#include "oracles.hpp"
#include "random_objects.hpp"

using namespace hsinteg;
using hsinteg::testing::random_poly;

namespace
{

ContextPtr ctx_of(const char *ring, std::vector<std::string> vars = {"x", "y", "z"}, OrderKind k = OrderKind::degrevlex)
{
    return make_context(RingSpec::parse(ring), VariableSet(std::move(vars)), MonomialOrder(k));
}

Polynomial P(const ContextPtr &ctx, const char *text)
{
    return parse_polynomial(text, ctx);
}

} // namespace

TEST_SUITE("poly")
{
    TEST_CASE("variable sets validate names")
    {
        CHECK_THROWS_AS(VariableSet({"x", "x"}), UsageError);
        CHECK_THROWS_AS(VariableSet({"1x"}), UsageError);
        CHECK_THROWS_AS(VariableSet({""}), UsageError);
        CHECK_THROWS_AS(VariableSet({"a-b"}), UsageError);
        const VariableSet v({"x1", "x2"});
        CHECK(*v.index_of("x2") == 1);
        CHECK_FALSE(v.index_of("x3").has_value());
    }

    TEST_CASE("monomial arithmetic")
    {
        const Monomial a({2, 0, 1}), b({1, 3, 0});
        CHECK(a.degree() == 3);
        CHECK((a * b) == Monomial({3, 3, 1}));
        CHECK(a.lcm(b) == Monomial({2, 3, 1}));
        CHECK(Monomial({1, 0, 1}).divides(a));
        CHECK_FALSE(b.divides(a));
        CHECK(Monomial({1, 0, 0}).quotient_of(a) == Monomial({1, 0, 1}));
        CHECK(Monomial({0, 1, 0}).coprime(Monomial({1, 0, 2})));
        CHECK(a.support() == std::vector<std::size_t>{0, 2});
        CHECK(Monomial(3).is_one());
    }

    TEST_CASE("monomial orders on known pairs")
    {
        const Monomial y3({0, 3, 0}), xz2({1, 0, 2});
        CHECK(MonomialOrder(OrderKind::degrevlex).compare(y3, xz2) > 0);
        CHECK(MonomialOrder(OrderKind::deglex).compare(y3, xz2) < 0);
        CHECK(MonomialOrder(OrderKind::lex).compare(y3, xz2) < 0);
        CHECK(MonomialOrder(OrderKind::lex).compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
        CHECK(MonomialOrder(OrderKind::degrevlex).compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) < 0);
        for (const char *name : {"degrevlex", "deglex", "lex"})
            CHECK(MonomialOrder::parse(name).name() == name);
        CHECK_THROWS_AS(MonomialOrder::parse("grevlex"), ParseError);
    }

    TEST_CASE("monomial orders are total, multiplicative and well-founded on samples")
    {
        testing::Rng rng(7);
        const auto mons = testing::monomials_up_to(3, 3);
        for (auto kind : {OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex}) {
            const MonomialOrder ord(kind);
            for (int k = 0; k < 300; ++k) {
                const auto &a = mons[rng() % mons.size()];
                const auto &b = mons[rng() % mons.size()];
                const auto &c = mons[rng() % mons.size()];
                CHECK(ord.compare(a, b) == -ord.compare(b, a));
                CHECK((ord.compare(a, b) == 0) == (a == b));
                if (ord.compare(a, b) > 0)
                    CHECK(ord.compare(a * c, b * c) > 0);
                if (ord.compare(a, b) > 0 && ord.compare(b, c) > 0)
                    CHECK(ord.compare(a, c) > 0);
                CHECK(ord.compare(a, Monomial(3)) >= 0);
            }
        }
    }

    TEST_CASE("parsing and printing")
    {
        const auto Z = ctx_of("Z");
        CHECK(P(Z, "x^2 + y^3").to_string() == "y^3 + x^2");
        CHECK(P(Z, "(x+y)^2") == P(Z, "x^2 + 2*x*y + y^2"));
        CHECK(P(Z, "-x + x").is_zero());
        CHECK(P(Z, " - 3 * x * y ").to_string() == "-3*x*y");
        CHECK(P(Z, "0").to_string() == "0");
        CHECK(P(Z, "x*(y - 1)") == P(Z, "x*y - x"));
        const auto Q = ctx_of("Q");
        CHECK(P(Q, "1/2*x + 1/3").to_string() == "1/2*x + 1/3");
        CHECK(P(ctx_of("F3"), "4*x - 1").to_string() == "x + 2");
        CHECK(P(ctx_of("F2"), "(x + y)^2") == P(ctx_of("F2"), "x^2 + y^2"));
    }

    TEST_CASE("parse errors carry positions")
    {
        const auto Z = ctx_of("Z");
        for (const char *bad : {"x +", "q", "x^", "(x", "x)", "1/2*x", "x**2", "", "x y"}) {
            CHECK_THROWS_AS(P(Z, bad), ParseError);
        }
        try {
            P(Z, "x + q");
            FAIL("no throw");
        } catch (const ParseError &e) {
            CHECK(e.position() == 4);
            CHECK(std::string(e.what()).find("'q'") != std::string::npos);
        }
    }

    TEST_CASE("print/parse round trip")
    {
        testing::Rng rng(11);
        for (const char *ring : {"F2", "F3", "Fp:7", "Q", "Z"}) {
            const auto ctx = ctx_of(ring);
            for (int k = 0; k < 40; ++k) {
                const auto f = random_poly(rng, ctx, 4, 5, 30);
                CHECK(parse_polynomial(f.to_string(), ctx) == f);
            }
        }
    }

    TEST_CASE("commutative ring axioms on random polynomials")
    {
        testing::Rng rng(13);
        for (const char *ring : {"F2", "F5", "Q", "Z"}) {
            const auto ctx = ctx_of(ring);
            for (int k = 0; k < 30; ++k) {
                const auto f = random_poly(rng, ctx, 3, 3, 9), g = random_poly(rng, ctx, 3, 3, 9),
                           h = random_poly(rng, ctx, 3, 3, 9);
                CHECK(f * g == g * f);
                CHECK((f * g) * h == f * (g * h));
                CHECK(f * (g + h) == f * g + f * h);
                CHECK((f - g) + g == f);
                CHECK(f.pow(3) == f * f * f);
                CHECK(f * Polynomial::constant(ctx, 1) == f);
            }
        }
    }

    TEST_CASE("derivatives follow the characteristic")
    {
        const auto F2 = ctx_of("F2");
        CHECK(P(F2, "x^2 + y^3").partial_derivative(0).is_zero());
        CHECK(P(F2, "x^2 + y^3").partial_derivative(1) == P(F2, "y^2"));
        const auto Z = ctx_of("Z");
        CHECK(P(Z, "3*x^2 + 2*y^3").partial_derivative(1) == P(Z, "6*y^2"));
    }

    TEST_CASE("Taylor coefficients")
    {
        const auto F2 = ctx_of("F2");
        // Delta^(2) x^3 = 3 x = x in F_2 while d^2/dx^2 vanishes.
        CHECK(P(F2, "x^3").taylor_coefficient(Monomial({2, 0, 0})) == P(F2, "x"));
        const auto Z = ctx_of("Z");
        const auto f = P(Z, "x^3*y^2 + 5*x*y");
        CHECK(f.taylor_coefficient(Monomial({1, 1, 0})) == P(Z, "6*x^2*y + 5"));
        CHECK(f.taylor_coefficient(Monomial(3)) == f);
        CHECK(f.taylor_coefficient(Monomial({0, 0, 1})).is_zero());
    }

    TEST_CASE("binomial coefficients")
    {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(5, 0) == 1);
        CHECK(binomial(2, 5) == 0);
        CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
    }

    TEST_CASE("contexts do not mix")
    {
        const auto a = ctx_of("Z"), b = ctx_of("Q");
        CHECK_THROWS_AS(P(a, "x") + P(b, "x"), UsageError);
        CHECK(same_context(a, ctx_of("Z")));
        CHECK(P(a, "x") + P(ctx_of("Z"), "x") == P(a, "2*x"));
    }

    TEST_CASE("degree guard")
    {
        const auto ctx = ctx_of("Z");
        const auto saved = limits();
        limits().max_degree = 10;
        CHECK_THROWS_AS(P(ctx, "x^11"), ResourceError);
        CHECK_THROWS_AS(P(ctx, "x^6").pow(2), ResourceError);
        limits() = saved;
    }
}
