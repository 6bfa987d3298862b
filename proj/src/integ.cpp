#include <hsinteg/integ.hpp>

#include <algorithm>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>

namespace hsinteg
{

std::string to_string(LiftMode mode)
{
    return mode == LiftMode::free ? "free" : "jacobian";
}

LiftMode parse_lift_mode(std::string_view text)
{
    if (text == "free") {
        return LiftMode::free;
    }
    if (text == "jacobian") {
        return LiftMode::jacobian;
    }
    throw UsageError("unknown lift mode '" + std::string(text) + "' (expected free or jacobian)");
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        return "TRUE";
    case Verdict::fails:
        return "FALSE";
    case Verdict::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

std::string to_string(IntegrationStatus s)
{
    switch (s) {
    case IntegrationStatus::yes:
        return "YES";
    case IntegrationStatus::no:
        return "NO";
    case IntegrationStatus::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

namespace
{

std::vector<ModuleVector> fe_block(const ContextPtr &ctx, const std::vector<Polynomial> &gens)
{
    const std::size_t p = gens.size();
    std::vector<ModuleVector> out;
    for (std::size_t s = 0; s < p; ++s) {
        for (std::size_t t = 0; t < p; ++t) {
            std::vector<Polynomial> e(p, Polynomial(ctx));
            e[s] = gens[t];
            out.emplace_back(ctx, std::move(e));
        }
    }
    return out;
}

std::vector<ModuleVector> jacobian_columns(const ContextPtr &ctx, const std::vector<Polynomial> &gens)
{
    std::vector<ModuleVector> out;
    for (std::size_t r = 0; r < ctx->vars.size(); ++r) {
        std::vector<Polynomial> col;
        for (const auto &f : gens) {
            col.push_back(f.partial_derivative(r));
        }
        out.emplace_back(ctx, std::move(col));
    }
    return out;
}

} // namespace

Problem::Problem(ContextPtr ctx, std::vector<Polynomial> ideal_gens, std::optional<std::vector<unsigned>> weights)
    : ctx_(std::move(ctx)), weights_(std::move(weights))
{
    for (auto &f : ideal_gens) {
        if (!same_context(f.context(), ctx_)) {
            throw UsageError("ideal generator from a different context");
        }
        if (!f.is_zero()) {
            gens_.push_back(std::move(f));
        }
    }
    if (weights_ && weights_->size() != nvars()) {
        throw UsageError("expected " + std::to_string(nvars()) + " weights, got " + std::to_string(weights_->size()));
    }
    const std::size_t p = gens_.size();
    ideal_gb_ = groebner(ctx_, gens_);
    trivial_ = ideal_gb_.is_unit_ideal();
    jac_ = jacobian_ideal(ctx_, gens_);
    jac_gb_ = groebner(ctx_, jac_.generators);

    const auto cols = jacobian_columns(ctx_, gens_);
    const auto fe = fe_block(ctx_, gens_);
    std::vector<ModuleVector> free_gens = cols;
    free_gens.insert(free_gens.end(), fe.begin(), fe.end());
    free_module_ = groebner(ctx_, p, std::move(free_gens));
    if (jac_.rank >= 1) {
        std::vector<ModuleVector> jgens;
        for (const auto &g : jac_.minors) {
            for (const auto &col : cols) {
                jgens.push_back(col.scaled(g));
            }
        }
        jgens.insert(jgens.end(), fe.begin(), fe.end());
        jacobian_module_ = groebner(ctx_, p, std::move(jgens));
    }
}

bool Problem::in_ideal(const Polynomial &f) const
{
    return normal_form(f, ideal_gb_).is_zero();
}

bool Problem::in_jacobian_ideal(const Polynomial &f) const
{
    return normal_form(f, jac_gb_).is_zero();
}

const GroebnerBasis &Problem::extension_module(LiftMode mode) const
{
    if (mode == LiftMode::free) {
        return free_module_;
    }
    if (!jacobian_module_) {
        throw DomainError("jacobian mode needs a Jacobian rank of at least 1");
    }
    return *jacobian_module_;
}

LogDerivation::LogDerivation(const Problem &problem, std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != problem.nvars()) {
        throw UsageError("a derivation needs " + std::to_string(problem.nvars()) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
    }
    for (const auto &f : problem.ideal()) {
        Polynomial s(problem.context());
        for (std::size_t r = 0; r < coeffs_.size(); ++r) {
            if (!same_context(coeffs_[r].context(), problem.context())) {
                throw UsageError("derivation coefficient from a different context");
            }
            s += coeffs_[r] * f.partial_derivative(r);
        }
        if (!problem.in_ideal(s)) {
            throw DomainError("derivation " + to_string() + " does not preserve the ideal: image of " + f.to_string() +
                              " is " + s.to_string());
        }
    }
}

LogDerivation LogDerivation::parse(const Problem &problem, std::string_view text)
{
    std::vector<Polynomial> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        try {
            coeffs.push_back(parse_polynomial(piece, problem.context()));
        } catch (const ParseError &e) {
            throw ParseError("derivation coefficient " + std::to_string(coeffs.size() + 1) + ": " + e.message(),
                             start + e.position());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return LogDerivation(problem, std::move(coeffs));
}

std::string LogDerivation::to_string() const
{
    std::string out;
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        if (r > 0) {
            out += ",";
        }
        out += coeffs_[r].to_string();
    }
    return out;
}

std::vector<LogDerivation> log_derivations(const Problem &problem)
{
    const auto &ctx = problem.context();
    const std::size_t d = problem.nvars();
    auto gens = jacobian_columns(ctx, problem.ideal());
    const auto fe = fe_block(ctx, problem.ideal());
    gens.insert(gens.end(), fe.begin(), fe.end());
    std::vector<ModuleVector> heads;
    for (const auto &u : syzygies(ctx, problem.ideal().size(), gens)) {
        std::vector<Polynomial> a(u.entries().begin(), u.entries().begin() + static_cast<std::ptrdiff_t>(d));
        ModuleVector v(ctx, std::move(a));
        if (!v.is_zero()) {
            heads.push_back(std::move(v));
        }
    }
    const GroebnerBasis gb = groebner(ctx, d, std::move(heads));
    std::vector<LogDerivation> out;
    for (const auto &g : gb.generators()) {
        out.emplace_back(problem, g.entries());
    }
    return out;
}

StepResult extend_one_step(const HSDerivation &d, const Problem &problem, LiftMode mode)
{
    const auto &ctx = problem.context();
    if (!same_context(d.context(), ctx)) {
        throw UsageError("HS derivation from a different context");
    }
    if (!is_logarithmic(d, problem.ideal(), problem.ideal_basis())) {
        throw DomainError("HS derivation is not logarithmic for the ideal");
    }
    const GroebnerBasis &module = problem.extension_module(mode);
    const unsigned n = d.length();
    check_level(n + 1);
    const HSDerivation padded = taylor_extend(d, n + 1);
    std::vector<Polynomial> v;
    for (const auto &f : problem.ideal()) {
        v.push_back(padded.component(n + 1, f));
    }
    const ModuleVector target(ctx, std::move(v));
    auto lift = module_membership_with_lift(target, module);
    if (!lift) {
        return {std::nullopt, MembershipEvidence{target, normal_form_with_lift(target, module).remainder, mode, n}};
    }
    const std::size_t nv = problem.nvars();
    std::vector<Polynomial> alpha(nv, Polynomial(ctx));
    if (mode == LiftMode::free) {
        std::copy(lift->quotients.begin(), lift->quotients.begin() + static_cast<std::ptrdiff_t>(nv), alpha.begin());
    } else {
        const auto &minors = problem.jacobian().minors;
        for (std::size_t k = 0; k < minors.size(); ++k) {
            for (std::size_t r = 0; r < nv; ++r) {
                const Polynomial &q = lift->quotients[k * nv + r];
                if (!q.is_zero()) {
                    alpha[r] += q * minors[k];
                }
            }
        }
    }
    std::vector<TruncatedSeries> images;
    for (std::size_t r = 0; r < nv; ++r) {
        std::vector<Polynomial> c = padded.images()[r].coeffs();
        c[n + 1] = -alpha[r];
        images.emplace_back(std::move(c));
    }
    HSDerivation out = HSDerivation::from_images(std::move(images));
    if (!is_logarithmic(out, problem.ideal(), problem.ideal_basis())) {
        throw InternalError("one-step extension produced a non-logarithmic HS derivation");
    }
    return {std::move(out), std::nullopt};
}

bool ledger_establishes(const std::vector<unsigned> &ledger, unsigned j)
{
    return j <= 1 || std::any_of(ledger.begin(), ledger.end(), [j](unsigned l) { return l >= j; });
}

namespace
{

bool coefficients_in_jacobian(const LogDerivation &delta, const Problem &problem)
{
    return problem.jacobian().rank >= 1 &&
           std::all_of(delta.coeffs().begin(), delta.coeffs().end(),
                       [&](const Polynomial &a) { return problem.in_jacobian_ideal(a); });
}

} // namespace

IntegrabilityReport check_equality(const Problem &problem, unsigned max_level)
{
    if (max_level < 2) {
        throw UsageError("max level must be at least 2");
    }
    IntegrabilityReport report;
    report.trivial_ring = problem.trivial_ring();
    try {
        check_level(max_level);
        report.generators = log_derivations(problem);
        if (report.trivial_ring) {
            for (unsigned n = 1; n <= max_level; ++n) {
                report.levels.push_back({n, Verdict::holds, std::nullopt, {}});
                report.ledger.push_back(n);
            }
            return report;
        }
        std::vector<Certificate> current;
        for (std::size_t i = 0; i < report.generators.size(); ++i) {
            current.push_back({i, HSDerivation::from_derivation(problem.context(), report.generators[i].coeffs()), {}});
        }
        report.levels.push_back({1, Verdict::holds, std::nullopt, current});
        report.ledger.push_back(1);
        for (unsigned n = 1; n < max_level; ++n) {
            std::vector<Certificate> next;
            for (const auto &cert : current) {
                StepResult step = extend_one_step(cert.integral, problem, LiftMode::free);
                if (step.extended) {
                    auto modes = cert.modes;
                    modes.push_back(LiftMode::free);
                    next.push_back({cert.generator, std::move(*step.extended), std::move(modes)});
                    continue;
                }
                const LogDerivation &delta = report.generators[cert.generator];
                if (coefficients_in_jacobian(delta, problem)) {
                    IntegrationResult r =
                        integrate_derivation(delta, problem, n + 1, LiftMode::jacobian, &report.ledger);
                    if (r.status == IntegrationStatus::yes) {
                        next.push_back({cert.generator, std::move(r.integral), std::move(r.modes)});
                        continue;
                    }
                }
                report.levels.push_back({n + 1, Verdict::fails, Witness{cert.generator, std::move(*step.evidence)}, {}});
                return report;
            }
            report.levels.push_back({n + 1, Verdict::holds, std::nullopt, next});
            report.ledger.push_back(n + 1);
            current = std::move(next);
        }
    } catch (const ResourceError &e) {
        report.aborted = true;
        report.abort_reason = e.what();
    }
    return report;
}

IntegrationResult integrate_derivation(const LogDerivation &delta, const Problem &problem, unsigned target_level,
                                       LiftMode mode, const std::vector<unsigned> *ledger)
{
    if (target_level < 1) {
        throw UsageError("target level must be at least 1");
    }
    check_level(target_level);
    if (mode == LiftMode::jacobian) {
        problem.extension_module(mode);
    }
    IntegrationResult res{IntegrationStatus::yes, HSDerivation::from_derivation(problem.context(), delta.coeffs()),
                          {}, std::nullopt, {}, {}};
    if (ledger) {
        res.ledger = *ledger;
    }
    bool ledger_known = ledger != nullptr;
    for (unsigned n = 1; n < target_level; ++n) {
        StepResult step = extend_one_step(res.integral, problem, mode);
        LiftMode used = mode;
        if (!step.extended && mode == LiftMode::jacobian) {
            step = extend_one_step(res.integral, problem, LiftMode::free);
            used = LiftMode::free;
        }
        if (step.extended) {
            res.integral = std::move(*step.extended);
            res.modes.push_back(used);
            continue;
        }
        res.evidence = std::move(step.evidence);
        if (n == 1) {
            res.status = IntegrationStatus::no;
            res.reason = "no 2-integral exists: the level-2 membership fails";
            return res;
        }
        const unsigned j = rho(n);
        if (!ledger_establishes(res.ledger, j) && !ledger_known) {
            res.ledger = check_equality(problem, j).ledger;
            ledger_known = true;
        }
        if (ledger_establishes(res.ledger, j)) {
            res.status = IntegrationStatus::no;
            res.reason = "the " + std::to_string(n) + "-integral does not extend and Ider(A;" + std::to_string(j) +
                         ") = Der(A) makes every " + std::to_string(n) + "-integral equivalent";
        } else {
            res.status = IntegrationStatus::inconclusive;
            res.reason = "the greedy " + std::to_string(n) + "-integral does not extend and Ider(A;" +
                         std::to_string(j) + ") = Der(A) is not established";
        }
        return res;
    }
    return res;
}

HSDerivation euler_integral(const std::vector<unsigned> &weights, const Problem &problem, unsigned level)
{
    const std::size_t d = problem.nvars();
    if (weights.size() != d) {
        throw UsageError("expected " + std::to_string(d) + " weights, got " + std::to_string(weights.size()));
    }
    check_level(level);
    const auto &ctx = problem.context();
    auto wdeg = [&](const Monomial &m) {
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < d; ++r) {
            s += std::uint64_t(weights[r]) * m[r];
        }
        return s;
    };
    for (const auto &f : problem.ideal()) {
        const Monomial &first = f.terms().front().mono;
        for (const auto &t : f.terms()) {
            if (wdeg(t.mono) != wdeg(first)) {
                const Polynomial a = Polynomial::term(ctx, first, 1);
                const Polynomial b = Polynomial::term(ctx, t.mono, 1);
                throw DomainError("generator " + f.to_string() + " is not quasi-homogeneous: " + a.to_string() +
                                  " has weighted degree " + std::to_string(wdeg(first)) + " but " + b.to_string() +
                                  " has " + std::to_string(wdeg(t.mono)));
            }
        }
    }
    TruncatedSeries one_minus_t = TruncatedSeries::constant(Polynomial::constant(ctx, 1), level);
    one_minus_t -= TruncatedSeries::t(ctx, level);
    const TruncatedSeries geometric = unit_inverse(one_minus_t);
    std::vector<TruncatedSeries> images;
    for (std::size_t r = 0; r < d; ++r) {
        TruncatedSeries s = TruncatedSeries::constant(Polynomial::variable(ctx, r), level);
        for (unsigned k = 0; k < weights[r]; ++k) {
            s = s * geometric;
        }
        images.push_back(std::move(s));
    }
    HSDerivation out = HSDerivation::from_images(std::move(images));
    if (!is_logarithmic(out, problem.ideal(), problem.ideal_basis())) {
        throw InternalError("Euler integral failed the logarithmic check");
    }
    return out;
}

unsigned rho(unsigned n)
{
    if (n < 1) {
        throw UsageError("rho is defined for n >= 1");
    }
    return n % 2 == 1 ? (n + 1) / 2 : (n + 1) / 3;
}

bool verify_certificate(const HSDerivation &integral, const std::vector<Polynomial> &delta, const Problem &problem)
{
    if (integral.length() < 1 || delta.size() != integral.nvars()) {
        return false;
    }
    for (std::size_t r = 0; r < delta.size(); ++r) {
        if (!(integral.coefficient(r, 1) == delta[r])) {
            return false;
        }
    }
    return is_logarithmic(integral, problem.ideal(), problem.ideal_basis());
}

} // namespace hsinteg
