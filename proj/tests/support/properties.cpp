#include "properties.hpp"

#include <functional>
#include <sstream>

#include <hsinteg/integ.hpp>

#include "oracles.hpp"
#include "random_objects.hpp"

namespace hsinteg::testing
{

namespace
{

ContextPtr context_for(std::size_t k, std::size_t nvars, OrderKind order = OrderKind::degrevlex)
{
    static const RingSpec rings[] = {RingSpec::prime_field(2), RingSpec::prime_field(3), RingSpec::prime_field(5),
                                     RingSpec::rationals(), RingSpec::integers()};
    std::vector<std::string> names;
    for (std::size_t r = 0; r < nvars; ++r)
        names.push_back(nvars <= 3 ? std::string(1, "xyz"[r]) : "x" + std::to_string(r + 1));
    return make_context(rings[k % 5], VariableSet(names), MonomialOrder(order));
}

// Runs body once per case; a false return or an exception is a failure.
SuiteResult run_suite(std::string name, std::uint64_t seed, std::size_t cases,
                      const std::function<bool(Rng &, std::size_t, std::string &)> &body)
{
    SuiteResult res;
    res.name = std::move(name);
    Rng rng(seed);
    for (std::size_t k = 0; k < cases; ++k) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(rng, k, detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        ++res.cases;
        if (!ok) {
            ++res.failures;
            if (res.first_failure.empty())
                res.first_failure = "case " + std::to_string(k) + ": " + detail;
        }
    }
    return res;
}

bool fail(std::string &detail, const std::string &what)
{
    detail = what;
    return false;
}

ModuleVector combination(const std::vector<ModuleVector> &gens, const std::vector<Polynomial> &coeffs, std::size_t rank)
{
    ModuleVector acc(gens.empty() ? coeffs.front().context() : gens.front().context(), rank);
    for (std::size_t j = 0; j < gens.size(); ++j)
        acc += gens[j].scaled(coeffs[j]);
    return acc;
}

std::vector<ModuleVector> random_module_gens(Rng &rng, const ContextPtr &ctx, std::size_t rank, std::size_t count,
                                             unsigned deg, long c)
{
    std::vector<ModuleVector> gens;
    while (gens.size() < count) {
        std::vector<Polynomial> entries;
        for (std::size_t i = 0; i < rank; ++i)
            entries.push_back(random_poly(rng, ctx, deg, 2, c));
        ModuleVector v(ctx, std::move(entries));
        if (!v.is_zero())
            gens.push_back(std::move(v));
    }
    return gens;
}

} // namespace

SuiteResult hs_group_axioms(std::uint64_t seed, std::size_t cases)
{
    return run_suite("hs_group_axioms", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 2);
        const unsigned n = static_cast<unsigned>(uniform(rng, 1, 4));
        const auto d = random_hs(rng, ctx, n), e = random_hs(rng, ctx, n), f = random_hs(rng, ctx, n);
        const auto id = HSDerivation::identity(ctx, n);
        if (!(compose(d, compose(e, f)) == compose(compose(d, e), f)))
            return fail(detail, "associativity");
        if (!(compose(d, id) == d) || !(compose(id, d) == d))
            return fail(detail, "identity");
        const auto inv = invert(d);
        if (!compose(d, inv).is_identity() || !compose(inv, d).is_identity())
            return fail(detail, "inverse");
        const auto g = random_poly(rng, ctx, 3, 3, 5);
        const auto de = compose(d, e);
        for (unsigned l = 1; l <= n; ++l) {
            if (!(de.component(l, g) == composed_component(d, e, l, g)))
                return fail(detail, "composition components at " + std::to_string(l));
        }
        return true;
    });
}

SuiteResult leibniz_identity(std::uint64_t seed, std::size_t cases)
{
    return run_suite("leibniz_identity", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 1 + k % 3);
        const unsigned n = static_cast<unsigned>(uniform(rng, 1, 4));
        const auto d = random_hs(rng, ctx, n);
        const auto f = random_poly(rng, ctx, 3, 3, 5), g = random_poly(rng, ctx, 3, 3, 5);
        if (!verify_leibniz(d, f, g))
            return fail(detail, "Taylor-form Leibniz");
        const auto fg = f * g;
        for (unsigned l = 1; l <= n; ++l) {
            Polynomial rhs(ctx);
            for (unsigned i = 0; i <= l; ++i) {
                const auto di = i == 0 ? f : d.component(i, f);
                const auto dj = l - i == 0 ? g : d.component(l - i, g);
                rhs += di * dj;
            }
            if (!(d.component(l, fg) == rhs))
                return fail(detail, "component Leibniz at " + std::to_string(l));
        }
        return true;
    });
}

SuiteResult taylor_reconstruction(std::uint64_t seed, std::size_t cases)
{
    return run_suite("taylor_reconstruction", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 1 + k % 3);
        const unsigned n = static_cast<unsigned>(uniform(rng, 1, 4));
        const auto d = random_hs(rng, ctx, n);
        const auto f = random_poly(rng, ctx, 4, 4, 7);
        for (unsigned i = 1; i <= n; ++i) {
            const auto form = taylor_coeffs_of_component(d, i);
            if (!(form.apply(f) == d.component(i, f)))
                return fail(detail, "D_" + std::to_string(i) + " differs from its Taylor form");
        }
        for (const auto &alpha : monomials_up_to(ctx->vars.size(), 3)) {
            if (!(f.taylor_coefficient(alpha) == naive_taylor_coefficient(f, alpha)))
                return fail(detail, "Delta^alpha mismatch");
        }
        return true;
    });
}

SuiteResult operation_compatibility(std::uint64_t seed, std::size_t cases)
{
    return run_suite("operation_compatibility", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 2);
        const unsigned n = static_cast<unsigned>(uniform(rng, 1, 4));
        const unsigned m = static_cast<unsigned>(uniform(rng, 2, 3));
        const unsigned cut = static_cast<unsigned>(uniform(rng, 0, n));
        const auto d = random_hs(rng, ctx, n, 2, 2, 3, static_cast<unsigned>(uniform(rng, 0, n)));
        const auto e = random_hs(rng, ctx, n);
        const auto a = random_poly(rng, ctx, 1, 2, 3), b = random_poly(rng, ctx, 1, 2, 3);

        if (!(truncate_hs(compose(d, e), cut) == compose(truncate_hs(d, cut), truncate_hs(e, cut))))
            return fail(detail, "truncation of a composition");
        // Scalars commute with every D_i, so c . (D o E) = (c . D) o (c . E) for c in k.
        const auto c = Polynomial::constant(ctx, uniform(rng, -3, 3));
        if (!(dot_action(c, compose(d, e)) == compose(dot_action(c, d), dot_action(c, e))))
            return fail(detail, "dot action of a composition");
        if (!(dot_action(a, dot_action(b, d)) == dot_action(a * b, d)))
            return fail(detail, "dot action is an action");
        if (!(ramify(compose(d, e), m) == compose(ramify(d, m), ramify(e, m))))
            return fail(detail, "ramification of a composition");
        if (!(ramify(dot_action(b.pow(m), d), m) == dot_action(b, ramify(d, m))))
            return fail(detail, "ramification against the dot action");
        if (!(truncate_hs(ramify(d, m), cut * m) == ramify(truncate_hs(d, cut), m)))
            return fail(detail, "ramification against truncation");
        const unsigned want = d.is_identity() ? n * m : m * (ell(d) + 1) - 1;
        if (ell(ramify(d, m)) != want)
            return fail(detail, "ell of a ramification");
        if (ell(compose(d, e)) < std::min(ell(d), ell(e)))
            return fail(detail, "ell of a composition");
        if (!(invert(compose(d, e)) == compose(invert(e), invert(d))))
            return fail(detail, "inverse of a composition");
        if (!(taylor_extend(d, n + 2).images()[0].truncated(n) == d.images()[0]))
            return fail(detail, "taylor_extend keeps the prefix");
        return true;
    });
}

SuiteResult substitution_matches_expansion(std::uint64_t seed, std::size_t cases)
{
    return run_suite("substitution_matches_expansion", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 1 + k % 3);
        const unsigned level = static_cast<unsigned>(uniform(rng, 0, 5));
        std::vector<TruncatedSeries> images;
        for (std::size_t r = 0; r < ctx->vars.size(); ++r) {
            std::vector<Polynomial> cs;
            for (unsigned i = 0; i <= level; ++i)
                cs.push_back(random_poly(rng, ctx, 2, 2, 4));
            images.emplace_back(std::move(cs));
        }
        const auto f = random_poly(rng, ctx, 4, 4, 6);
        if (!(substitute(f, images, level) == naive_substitute(f, images, level)))
            return fail(detail, "Horner and expansion disagree");
        return true;
    });
}

SuiteResult sparse_assembly(std::uint64_t seed, std::size_t cases)
{
    return run_suite("sparse_assembly", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 2);
        const unsigned m = static_cast<unsigned>(uniform(rng, 2, 3));
        const unsigned q = static_cast<unsigned>(uniform(rng, 1, 3));
        // r < m and 2 (q m + 1) > q m + r always hold for r < q m + 2.
        const unsigned r = static_cast<unsigned>(uniform(rng, 0, std::min(m - 1, q * m + 1)));
        const unsigned n = q * m + r;
        const auto d = random_hs(rng, ctx, q);
        std::vector<std::vector<Polynomial>> deltas;
        for (unsigned j = 0; j < r; ++j) {
            deltas.push_back({random_poly(rng, ctx, 2, 2, 3), random_poly(rng, ctx, 2, 2, 3)});
        }
        const auto theta = sparse_assemble(d, deltas, m, n);
        if (theta.length() != n)
            return fail(detail, "length");
        const auto f = random_poly(rng, ctx, 3, 3, 5), g = random_poly(rng, ctx, 3, 3, 5);
        for (unsigned l = 1; l <= n; ++l) {
            Polynomial want(ctx);
            if (l <= q * m) {
                if (l % m == 0)
                    want = d.component(l / m, f);
            } else {
                const auto &a = deltas[l - q * m - 1];
                for (std::size_t v = 0; v < 2; ++v)
                    want += a[v] * f.partial_derivative(v);
            }
            if (!(theta.component(l, f) == want))
                return fail(detail, "component " + std::to_string(l));
        }
        if (!verify_leibniz(theta, f, g))
            return fail(detail, "Leibniz");
        return true;
    });
}

SuiteResult buchberger_self_check(std::uint64_t seed, std::size_t cases)
{
    return run_suite("buchberger_self_check", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        static const OrderKind orders[] = {OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex};
        const auto ctx = context_for(k, 2 + (k / 5) % 2, orders[(k / 10) % 3]);
        const bool over_z = ctx->ring.kind() == RingKind::integers;
        const std::size_t rank = 1 + (k / 30) % 2;
        const auto gens = random_module_gens(rng, ctx, rank, static_cast<std::size_t>(uniform(rng, 1, 3)),
                                             over_z ? 2 : 3, over_z ? 4 : 6);
        const auto gb = groebner(ctx, rank, gens);
        if (!verify_buchberger(gb))
            return fail(detail, "S-pairs do not reduce to zero");
        for (std::size_t i = 0; i < gb.size(); ++i) {
            if (!(combination(gb.originals(), gb.transform()[i], rank) == gb.generators()[i]))
                return fail(detail, "transform row " + std::to_string(i));
        }
        for (const auto &g : gens) {
            if (!normal_form_with_lift(g, gb).remainder.is_zero())
                return fail(detail, "input generator does not reduce to zero");
        }
        // Canonical form: a shuffled, redundant generating set gives the same basis.
        auto other = gens;
        std::shuffle(other.begin(), other.end(), rng);
        std::vector<Polynomial> mult;
        for (std::size_t j = 0; j < gens.size(); ++j)
            mult.push_back(random_poly(rng, ctx, 1, 2, 3));
        other.push_back(combination(gens, mult, rank));
        if (!(groebner(ctx, rank, other).generators() == gb.generators()))
            return fail(detail, "basis depends on the generating set");
        return true;
    });
}

SuiteResult lift_exactness(std::uint64_t seed, std::size_t cases)
{
    return run_suite("lift_exactness", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 2 + k % 2);
        const bool over_z = ctx->ring.kind() == RingKind::integers;
        const std::size_t rank = 1 + (k / 5) % 2;
        const auto gens = random_module_gens(rng, ctx, rank, static_cast<std::size_t>(uniform(rng, 1, 3)),
                                             over_z ? 2 : 3, over_z ? 4 : 6);
        const auto gb = groebner(ctx, rank, gens);
        std::vector<Polynomial> mult;
        for (std::size_t j = 0; j < gens.size(); ++j)
            mult.push_back(random_poly(rng, ctx, 2, 3, 5));
        const auto member = combination(gens, mult, rank);
        const auto lift = module_membership_with_lift(member, gb);
        if (!lift)
            return fail(detail, "constructed member rejected");
        if (!(combination(gens, lift->quotients, rank) == member))
            return fail(detail, "lift does not reproduce the member");
        const auto direct = module_membership_with_lift(member, std::span<const ModuleVector>(gens));
        if (!direct || !(combination(gens, direct->quotients, rank) == member))
            return fail(detail, "generator overload");
        // A random vector: any lift returned must be exact, and the division
        // identity must hold.
        std::vector<Polynomial> entries;
        for (std::size_t i = 0; i < rank; ++i)
            entries.push_back(random_poly(rng, ctx, 3, 3, 5));
        const ModuleVector v(ctx, entries);
        const auto red = normal_form_with_lift(v, gb);
        if (!(combination(gb.generators(), red.quotients, rank) + red.remainder == v))
            return fail(detail, "division identity");
        const auto lv = module_membership_with_lift(v, gb);
        if (lv.has_value() != red.remainder.is_zero())
            return fail(detail, "membership disagrees with the normal form");
        if (lv && !(combination(gens, lv->quotients, rank) == v))
            return fail(detail, "lift of a random member");
        return true;
    });
}

SuiteResult syzygy_soundness(std::uint64_t seed, std::size_t cases)
{
    return run_suite("syzygy_soundness", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(k, 2);
        const bool over_z = ctx->ring.kind() == RingKind::integers;
        const auto gens = random_module_gens(rng, ctx, 1, static_cast<std::size_t>(uniform(rng, 2, 3)),
                                             over_z ? 2 : 3, over_z ? 4 : 6);
        const auto syz = syzygies(ctx, 1, gens);
        for (const auto &s : syz) {
            if (!combination(gens, s.entries(), 1).is_zero())
                return fail(detail, "syzygy does not annihilate");
        }
        const std::size_t q = gens.size();
        const auto syz_gb = groebner(ctx, q, syz);
        std::vector<ModuleVector> koszul;
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = i + 1; j < q; ++j) {
                std::vector<Polynomial> e(q, Polynomial(ctx));
                e[i] = gens[j][0];
                e[j] = -gens[i][0];
                koszul.emplace_back(ctx, e);
            }
        }
        if (!module_contains(syz_gb, koszul))
            return fail(detail, "Koszul syzygy missing");
        return true;
    });
}

SuiteResult f2_membership_oracle(std::uint64_t seed, std::size_t cases)
{
    constexpr unsigned power = 5;
    return run_suite("f2_membership_oracle", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(0, 2 + k % 2, k % 3 == 0 ? OrderKind::lex : OrderKind::degrevlex);
        std::vector<Polynomial> gens;
        const long count = uniform(rng, 1, 3);
        for (long j = 0; j < count; ++j)
            gens.push_back(random_poly(rng, ctx, 3, 3, 1));
        std::vector<Polynomial> with_power = gens;
        for (const auto &m : monomials_up_to(ctx->vars.size(), power)) {
            if (m.degree() == power)
                with_power.push_back(Polynomial::term(ctx, m, 1));
        }
        const auto gb = groebner(ctx, with_power);
        std::vector<Polynomial> probes;
        for (const auto &m : monomials_up_to(ctx->vars.size(), power - 1))
            probes.push_back(Polynomial::term(ctx, m, 1));
        for (int j = 0; j < 4; ++j)
            probes.push_back(random_poly(rng, ctx, 4, 4, 1));
        for (const auto &p : probes) {
            const bool engine = normal_form(p, gb).is_zero();
            if (engine != f2_member_mod_power(p, gens, power))
                return fail(detail, "disagreement on " + p.to_string());
        }
        return true;
    });
}

SuiteResult z_term_ideal_oracle(std::uint64_t seed, std::size_t cases)
{
    return run_suite("z_term_ideal_oracle", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(4, 2);
        const std::vector<Polynomial> gens = {parse_polynomial("6*x", ctx), parse_polynomial("6*y^2", ctx),
                                              parse_polynomial("3*x^2", ctx), parse_polynomial("2*y^3", ctx)};
        const auto gb = groebner(ctx, gens);
        Polynomial f(ctx);
        if (k % 2 == 0) {
            for (const auto &g : gens)
                f += random_poly(rng, ctx, 4 - static_cast<unsigned>(g.total_degree()), 2, 20) * g;
        } else {
            f = random_poly(rng, ctx, 4, 4, 20);
        }
        // Term ideal: multipliers of degree deg f - 1 <= 3 suffice.
        const bool oracle = integer_lattice_member(f, gens, 3);
        const auto lift = ideal_membership(f, gb);
        if (lift.has_value() != oracle)
            return fail(detail, "disagreement on " + f.to_string());
        if (k % 2 == 0 && !oracle)
            return fail(detail, "constructed member rejected by the oracle");
        if (lift) {
            Polynomial back(ctx);
            for (std::size_t j = 0; j < gens.size(); ++j)
                back += (*lift)[j] * gens[j];
            if (!(back == f))
                return fail(detail, "lift");
        }
        return true;
    });
}

SuiteResult z_bounded_lift_oracle(std::uint64_t seed, std::size_t cases)
{
    return run_suite("z_bounded_lift_oracle", seed, cases, [](Rng &rng, std::size_t, std::string &detail) {
        const auto ctx = context_for(4, 2);
        std::vector<Polynomial> gens;
        const long count = uniform(rng, 1, 3);
        while (gens.size() < static_cast<std::size_t>(count)) {
            auto g = random_poly(rng, ctx, 2, 2, 6);
            if (!g.is_zero())
                gens.push_back(std::move(g));
        }
        const auto gb = groebner(ctx, gens);
        Polynomial f = random_poly(rng, ctx, 3, 3, 10);
        if (uniform(rng, 0, 1) == 0) {
            for (const auto &g : gens)
                f += random_poly(rng, ctx, 1, 2, 5) * g;
        }
        // A bounded lattice hit is a proof of membership.
        if (integer_lattice_member(f, gens, 2) && !ideal_membership(f, gb))
            return fail(detail, "lattice member rejected: " + f.to_string());
        // An engine lift is confirmed by the lattice at the lift's degree.
        if (const auto lift = ideal_membership(f, gb)) {
            unsigned deg = 0;
            for (const auto &q : *lift)
                deg = std::max(deg, static_cast<unsigned>(q.total_degree()));
            if (!integer_lattice_member(f, gens, deg))
                return fail(detail, "engine member not confirmed: " + f.to_string());
        }
        return true;
    });
}

SuiteResult f5_free_extension(std::uint64_t seed, std::size_t cases)
{
    return run_suite("f5_free_extension", seed, cases, [](Rng &rng, std::size_t k, std::string &detail) {
        const auto ctx = context_for(2, 2 + k % 2);
        const Problem problem(ctx, {});
        const unsigned n = static_cast<unsigned>(uniform(rng, 1, 5));
        const auto d = random_hs(rng, ctx, n, 2, 2, 4, 1);
        const auto step = extend_one_step(d, problem, LiftMode::free);
        if (!step.extended)
            return fail(detail, "extension refused over the polynomial ring");
        if (step.extended->length() != n + 1 || !(truncate_hs(*step.extended, n) == d))
            return fail(detail, "extension does not restrict to D");
        const auto f = random_poly(rng, ctx, 3, 3, 4), g = random_poly(rng, ctx, 3, 3, 4);
        if (!verify_leibniz(*step.extended, f, g))
            return fail(detail, "extension is not a HS derivation");
        return true;
    });
}

SuiteResult rho_below_n()
{
    SuiteResult res;
    res.name = "rho_below_n";
    for (unsigned n = 2; n <= 100; ++n) {
        ++res.cases;
        const unsigned r = rho(n);
        if (r < 1 || r >= n) {
            ++res.failures;
            if (res.first_failure.empty())
                res.first_failure = "n = " + std::to_string(n);
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_properties()
{
    const auto s = property_seed;
    const auto c = property_cases;
    return {hs_group_axioms(s, c),
            leibniz_identity(s + 1, c),
            taylor_reconstruction(s + 2, c),
            operation_compatibility(s + 3, c),
            substitution_matches_expansion(s + 4, c),
            sparse_assembly(s + 5, c),
            buchberger_self_check(s + 6, c),
            lift_exactness(s + 7, c),
            syzygy_soundness(s + 8, c),
            f2_membership_oracle(s + 9, c),
            z_term_ideal_oracle(s + 10, c),
            z_bounded_lift_oracle(s + 11, c),
            f5_free_extension(s + 12, c),
            rho_below_n()};
}

} // namespace hsinteg::testing
