#include <hsinteg/poly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>
#include <utility>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>

namespace hsinteg
{

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names))
{
    std::unordered_set<std::string> seen;
    for (const auto &n : names_) {
        if (n.empty() || !std::isalpha(static_cast<unsigned char>(n.front()))) {
            throw UsageError("variable name must start with a letter: '" + n + "'");
        }
        for (char c : n) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                throw UsageError("invalid character in variable name '" + n + "'");
            }
        }
        if (!seen.insert(n).second) {
            throw UsageError("duplicate variable name '" + n + "'");
        }
    }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    for (std::size_t r = 0; r < names_.size(); ++r) {
        if (names_[r] == name) {
            return r;
        }
    }
    return std::nullopt;
}

std::uint64_t Monomial::degree() const noexcept
{
    return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t r = 0; r < exps.size(); ++r) {
        if (exps[r] != 0) {
            s.push_back(r);
        }
    }
    return s;
}

bool Monomial::divides(const Monomial &other) const noexcept
{
    for (std::size_t r = 0; r < exps.size(); ++r) {
        if (exps[r] > other.exps[r]) {
            return false;
        }
    }
    return true;
}

bool Monomial::coprime(const Monomial &other) const noexcept
{
    for (std::size_t r = 0; r < exps.size(); ++r) {
        if (exps[r] != 0 && other.exps[r] != 0) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial &other) const
{
    Monomial q(exps.size());
    for (std::size_t r = 0; r < exps.size(); ++r) {
        q.exps[r] = other.exps[r] - exps[r];
    }
    return q;
}

Monomial Monomial::lcm(const Monomial &other) const
{
    Monomial l(exps.size());
    for (std::size_t r = 0; r < exps.size(); ++r) {
        l.exps[r] = std::max(exps[r], other.exps[r]);
    }
    return l;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial m(a.exps.size());
    for (std::size_t r = 0; r < a.exps.size(); ++r) {
        m.exps[r] = a.exps[r] + b.exps[r];
    }
    return m;
}

MonomialOrder MonomialOrder::parse(std::string_view text)
{
    if (text == "degrevlex") {
        return MonomialOrder(OrderKind::degrevlex);
    }
    if (text == "deglex") {
        return MonomialOrder(OrderKind::deglex);
    }
    if (text == "lex") {
        return MonomialOrder(OrderKind::lex);
    }
    throw ParseError("unknown monomial order '" + std::string(text) + "'", 0);
}

std::string MonomialOrder::name() const
{
    switch (kind_) {
        case OrderKind::degrevlex:
            return "degrevlex";
        case OrderKind::deglex:
            return "deglex";
        case OrderKind::lex:
            return "lex";
    }
    return {};
}

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const noexcept
{
    const std::size_t d = a.exps.size();
    if (kind_ != OrderKind::lex) {
        const auto da = a.degree();
        const auto db = b.degree();
        if (da != db) {
            return da < db ? -1 : 1;
        }
    }
    if (kind_ == OrderKind::degrevlex) {
        for (std::size_t i = d; i-- > 0;) {
            if (a.exps[i] != b.exps[i]) {
                return a.exps[i] < b.exps[i] ? 1 : -1;
            }
        }
        return 0;
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (a.exps[i] != b.exps[i]) {
            return a.exps[i] < b.exps[i] ? -1 : 1;
        }
    }
    return 0;
}

ContextPtr make_context(const RingSpec &ring, VariableSet vars, MonomialOrder order)
{
    return std::make_shared<const PolyContext>(PolyContext{ring, std::move(vars), order});
}

bool same_context(const ContextPtr &a, const ContextPtr &b)
{
    return a == b || *a == *b;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k)
{
    mpz_class r;
    if (k > n) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Polynomial Polynomial::constant(ContextPtr ctx, const mpq_class &c)
{
    const std::size_t d = ctx->vars.size();
    return term(std::move(ctx), Monomial(d), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t r)
{
    const std::size_t d = ctx->vars.size();
    if (r >= d) {
        throw UsageError("variable index " + std::to_string(r) + " out of range");
    }
    return term(std::move(ctx), Monomial::unit(d, r), mpq_class(1));
}

Polynomial Polynomial::term(ContextPtr ctx, Monomial mono, const mpq_class &c)
{
    if (mono.size() != ctx->vars.size()) {
        throw UsageError("monomial arity does not match the variable set");
    }
    Scalar v = ctx->ring.canonical(c);
    std::vector<Term> t;
    if (!RingSpec::is_zero(v)) {
        t.push_back(Term{std::move(mono), std::move(v)});
    }
    Polynomial p(std::move(ctx), std::move(t));
    p.check_guards();
    return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms)
{
    const auto &ord = ctx->order;
    const auto &ring = ctx->ring;
    for (auto &t : terms) {
        if (t.mono.size() != ctx->vars.size()) {
            throw UsageError("monomial arity does not match the variable set");
        }
        if (!ring.is_canonical(t.coeff)) {
            t.coeff = ring.canonical(t.coeff);
        }
    }
    std::sort(terms.begin(), terms.end(), [&](const Term &a, const Term &b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = ring.add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && RingSpec::is_zero(out.back().coeff)) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && RingSpec::is_zero(out.back().coeff)) {
        out.pop_back();
    }
    Polynomial p(std::move(ctx), std::move(out));
    p.check_guards();
    return p;
}

void Polynomial::check_guards() const
{
    const auto &lim = limits();
    if (terms_.size() > lim.max_terms) {
        throw ResourceError("polynomial exceeds " + std::to_string(lim.max_terms) + " terms");
    }
    for (const auto &t : terms_) {
        if (t.mono.degree() > lim.max_degree) {
            throw ResourceError("polynomial exceeds total degree " + std::to_string(lim.max_degree));
        }
    }
}

void Polynomial::check_same_context(const Polynomial &other) const
{
    if (!same_context(ctx_, other.ctx_)) {
        throw UsageError("polynomials from different contexts");
    }
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

const Term &Polynomial::leading_term() const
{
    if (terms_.empty()) {
        throw UsageError("zero polynomial has no leading term");
    }
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const noexcept
{
    std::uint64_t d = 0;
    for (const auto &t : terms_) {
        d = std::max(d, t.mono.degree());
    }
    return d;
}

namespace
{

// Merge of two canonical term lists: a + sign*b.
std::vector<Term> merge_terms(const PolyContext &ctx, const std::vector<Term> &a, const std::vector<Term> &b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        int c = 0;
        if (i == a.size()) {
            c = -1;
        } else if (j == b.size()) {
            c = 1;
        } else {
            c = ctx.order.compare(a[i].mono, b[j].mono);
        }
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(Term{b[j].mono, subtract ? ctx.ring.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Scalar s = subtract ? ctx.ring.sub(a[i].coeff, b[j].coeff) : ctx.ring.add(a[i].coeff, b[j].coeff);
            if (!RingSpec::is_zero(s)) {
                out.push_back(Term{a[i].mono, std::move(s)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    check_same_context(other);
    terms_ = merge_terms(*ctx_, terms_, other.terms_, false);
    check_guards();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    check_same_context(other);
    terms_ = merge_terms(*ctx_, terms_, other.terms_, true);
    check_guards();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    a.check_same_context(b);
    if (a.is_zero() || b.is_zero()) {
        return Polynomial(a.ctx_);
    }
    const auto &ring = a.ctx_->ring;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &s : a.terms_) {
        for (const auto &t : b.terms_) {
            Scalar c = ring.mul(s.coeff, t.coeff);
            if (!RingSpec::is_zero(c)) {
                prod.push_back(Term{s.mono * t.mono, std::move(c)});
            }
        }
    }
    return Polynomial::from_terms(a.ctx_, std::move(prod));
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    std::vector<Term> t = terms_;
    for (auto &x : t) {
        x.coeff = ctx_->ring.neg(x.coeff);
    }
    return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::scaled(const Scalar &c) const
{
    const auto &ring = ctx_->ring;
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto &x : terms_) {
        Scalar v = ring.mul(x.coeff, c);
        if (!RingSpec::is_zero(v)) {
            t.push_back(Term{x.mono, std::move(v)});
        }
    }
    return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::mul_term(const Monomial &mono, const Scalar &c) const
{
    const auto &ring = ctx_->ring;
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto &x : terms_) {
        Scalar v = ring.mul(x.coeff, c);
        if (!RingSpec::is_zero(v)) {
            t.push_back(Term{x.mono * mono, std::move(v)});
        }
    }
    // Multiplication by a monomial preserves the order.
    Polynomial p(ctx_, std::move(t));
    p.check_guards();
    return p;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(ctx_, 1);
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial Polynomial::taylor_coefficient(const Monomial &alpha) const
{
    if (alpha.size() != nvars()) {
        throw UsageError("multi-index arity does not match the variable set");
    }
    const auto &ring = ctx_->ring;
    std::vector<Term> t;
    for (const auto &x : terms_) {
        if (!alpha.divides(x.mono)) {
            continue;
        }
        mpz_class b = 1;
        for (std::size_t r = 0; r < alpha.size(); ++r) {
            if (alpha.exps[r] != 0) {
                b *= binomial(x.mono.exps[r], alpha.exps[r]);
            }
        }
        Scalar c = ring.mul(x.coeff, ring.from_mpz(b));
        if (!RingSpec::is_zero(c)) {
            t.push_back(Term{alpha.quotient_of(x.mono), std::move(c)});
        }
    }
    // x^beta -> x^(beta - alpha) is order preserving on the surviving terms.
    return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::partial_derivative(std::size_t r) const
{
    if (r >= nvars()) {
        throw UsageError("variable index " + std::to_string(r) + " out of range");
    }
    return taylor_coefficient(Monomial::unit(nvars(), r));
}

bool operator==(const Polynomial &a, const Polynomial &b)
{
    if (!same_context(a.ctx_, b.ctx_) || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        const bool negative = sgn(t.coeff) < 0;
        const Scalar mag = negative ? Scalar(-t.coeff) : t.coeff;
        if (first) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t r = 0; r < t.mono.size(); ++r) {
            const auto e = t.mono.exps[r];
            if (e == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += ctx_->vars.name(r);
            if (e > 1) {
                mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

} // namespace hsinteg
