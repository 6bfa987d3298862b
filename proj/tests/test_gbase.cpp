#include <doctest.h>

#include <hsinteg/errors.hpp>
#include <hsinteg/gbase.hpp>
#include <hsinteg/limits.hpp>

using namespace hsinteg;

namespace
{

ContextPtr ctx_of(const char *ring, OrderKind k = OrderKind::degrevlex)
{
    return make_context(RingSpec::parse(ring), VariableSet({"x", "y"}), MonomialOrder(k));
}

std::vector<Polynomial> polys(const ContextPtr &ctx, std::vector<const char *> texts)
{
    std::vector<Polynomial> out;
    for (auto t : texts)
        out.push_back(parse_polynomial(t, ctx));
    return out;
}

std::vector<Polynomial> basis_of(const ContextPtr &ctx, std::vector<const char *> texts)
{
    const auto gens = polys(ctx, texts);
    std::vector<Polynomial> out;
    const auto gb = groebner(ctx, gens);
    for (const auto &v : gb.generators())
        out.push_back(v[0]);
    return out;
}

ModuleVector vec(const ContextPtr &ctx, std::vector<const char *> texts)
{
    return ModuleVector(ctx, polys(ctx, texts));
}

} // namespace

TEST_SUITE("gbase")
{
    TEST_CASE("reduced bases over fields")
    {
        const auto Q = ctx_of("Q", OrderKind::lex);
        CHECK(basis_of(Q, {"x^2 - y", "x*y - 1"}) == polys(Q, {"x - y^2", "y^3 - 1"}));
        const auto F2 = ctx_of("F2");
        CHECK(basis_of(F2, {"x", "x + 1"}) == polys(F2, {"1"}));
        CHECK(groebner(F2, polys(F2, {"x", "x + 1"})).is_unit_ideal());
        CHECK(basis_of(F2, {"x^2 + y^3"}) == polys(F2, {"y^3 + x^2"}));
        CHECK(basis_of(ctx_of("F3"), {"3*x"}).empty());
        CHECK(basis_of(ctx_of("Q"), {"2*x*y", "4*y^2"}) == polys(ctx_of("Q"), {"x*y", "y^2"}));
    }

    TEST_CASE("strong bases over Z")
    {
        const auto Z = ctx_of("Z");
        CHECK(basis_of(Z, {"2*x", "3*x"}) == polys(Z, {"x"}));
        CHECK(basis_of(Z, {"2", "x"}) == polys(Z, {"x", "2"}));
        CHECK(basis_of(Z, {"-4*x + 2", "6"}) == polys(Z, {"2*x + 2", "6"}));
        const auto gb = groebner(Z, polys(Z, {"6*x", "6*y^2", "3*x^2", "2*y^3"}));
        CHECK(verify_buchberger(gb));
        CHECK(normal_form(parse_polynomial("3*x^2*y + 7", Z), gb) == parse_polynomial("7", Z));
        CHECK_FALSE(normal_form(parse_polynomial("2*x", Z), gb).is_zero());
    }

    TEST_CASE("division with lift")
    {
        const auto Z = ctx_of("Z");
        const auto gb = groebner(Z, polys(Z, {"x^2 + y^3", "3*x*y"}));
        const auto v = ModuleVector::scalar(parse_polynomial("x^3*y + 5*x + y^4", Z));
        const auto red = normal_form_with_lift(v, gb);
        ModuleVector back = red.remainder;
        for (std::size_t i = 0; i < gb.size(); ++i)
            back += gb.generators()[i].scaled(red.quotients[i]);
        CHECK(back == v);
        const auto lift = ideal_membership(parse_polynomial("x^3 + x*y^3 + 6*x^2*y", Z), gb);
        REQUIRE(lift.has_value());
        CHECK(((*lift)[0] * parse_polynomial("x^2 + y^3", Z) + (*lift)[1] * parse_polynomial("3*x*y", Z)) ==
              parse_polynomial("x^3 + x*y^3 + 6*x^2*y", Z));
        CHECK_FALSE(ideal_membership(parse_polynomial("x*y", Z), gb).has_value());
    }

    TEST_CASE("submodules of R^2")
    {
        const auto Q = ctx_of("Q");
        const std::vector<ModuleVector> gens = {vec(Q, {"x", "y"}), vec(Q, {"y", "0"})};
        const auto gb = groebner(Q, 2, gens);
        CHECK(verify_buchberger(gb));
        CHECK(module_membership_with_lift(vec(Q, {"x*y + y^2", "y^2"}), gb).has_value());
        CHECK_FALSE(module_membership_with_lift(vec(Q, {"0", "1"}), gb).has_value());
        CHECK(module_contains(gb, std::vector<ModuleVector>{vec(Q, {"0", "y^2"})}));
        CHECK(vec(Q, {"x", "y"}).to_string() == "(x, y)");
    }

    TEST_CASE("syzygies")
    {
        const auto Q = ctx_of("Q");
        const std::vector<ModuleVector> gens = {ModuleVector::scalar(parse_polynomial("x", Q)),
                                                ModuleVector::scalar(parse_polynomial("y", Q))};
        const auto syz = syzygies(Q, 1, gens);
        REQUIRE(syz.size() == 1);
        const auto &s = syz[0];
        const bool plus = s[0] == parse_polynomial("y", Q) && s[1] == parse_polynomial("-x", Q);
        const bool minus = s[0] == parse_polynomial("-y", Q) && s[1] == parse_polynomial("x", Q);
        CHECK((plus || minus));
    }

    TEST_CASE("ideal quotients over Z")
    {
        const auto Z = ctx_of("Z");
        const auto J = polys(Z, {"6*x", "6*y^2", "3*x^2", "2*y^3"});
        CHECK(same_ideal(ideal_quotient(J, parse_polynomial("3*y^4", Z)), polys(Z, {"2", "x^2"})));
        CHECK(same_ideal(ideal_quotient(J, parse_polynomial("2*x^3", Z)), polys(Z, {"3", "y^3"})));
        CHECK(same_ideal(ideal_quotient(J, parse_polynomial("6", Z)), polys(Z, {"x", "y^2"})));
        CHECK(same_ideal(ideal_quotient(J, parse_polynomial("6*x", Z)), polys(Z, {"1"})));
        CHECK_THROWS_AS(ideal_quotient(J, Polynomial(Z)), UsageError);
    }

    TEST_CASE("Jacobian ideals")
    {
        const auto F2 = ctx_of("F2");
        const auto jf2 = jacobian_ideal(F2, polys(F2, {"x^2 + y^3"}));
        CHECK(jf2.rank == 1);
        CHECK(jf2.minors == polys(F2, {"y^2"}));
        CHECK(jacobian_ideal(F2, polys(F2, {"x^2"})).rank == 0);
        const auto Z = ctx_of("Z");
        const auto jz = jacobian_ideal(Z, polys(Z, {"x^2 + y^3"}));
        CHECK(jz.rank == 1);
        CHECK(same_ideal(jz.generators, polys(Z, {"2*x", "3*y^2", "x^2 + y^3"})));
        CHECK(jacobian_ideal(Z, polys(Z, {"x", "y"})).rank == 2);
    }

    TEST_CASE("determinants")
    {
        const auto Z = ctx_of("Z");
        const std::vector<std::vector<Polynomial>> m = {polys(Z, {"x", "y"}), polys(Z, {"1", "x"})};
        CHECK(determinant(m) == parse_polynomial("x^2 - y", Z));
    }

    TEST_CASE("pair guard")
    {
        const auto Z = ctx_of("Z");
        const auto saved = limits();
        limits().max_pairs = 0;
        CHECK_THROWS_AS(groebner(Z, polys(Z, {"x^2 + y", "x*y + 1"})), ResourceError);
        limits() = saved;
    }
}
