#include <hsinteg/hsd.hpp>

#include <map>
#include <tuple>

#include <hsinteg/errors.hpp>

namespace hsinteg
{

HSDerivation HSDerivation::from_images(std::vector<TruncatedSeries> images)
{
    if (images.empty()) {
        throw UsageError("an HS derivation needs one image per variable");
    }
    const ContextPtr ctx = images.front().context();
    if (images.size() != ctx->vars.size()) {
        throw UsageError("expected " + std::to_string(ctx->vars.size()) + " images, got " +
                         std::to_string(images.size()));
    }
    const unsigned level = images.front().level();
    for (std::size_t r = 0; r < images.size(); ++r) {
        if (images[r].level() != level || !same_context(images[r].context(), ctx)) {
            throw UsageError("images must share level and context");
        }
        if (!(images[r][0] == Polynomial::variable(ctx, r))) {
            throw UsageError("image of " + ctx->vars.name(r) + " must have constant term " + ctx->vars.name(r));
        }
    }
    return HSDerivation(ctx, level, std::move(images));
}

HSDerivation HSDerivation::from_coefficients(const ContextPtr &ctx, const std::vector<std::vector<Polynomial>> &higher)
{
    if (higher.size() != ctx->vars.size()) {
        throw UsageError("expected coefficient lists for " + std::to_string(ctx->vars.size()) + " variables");
    }
    std::vector<TruncatedSeries> images;
    for (std::size_t r = 0; r < higher.size(); ++r) {
        std::vector<Polynomial> coeffs{Polynomial::variable(ctx, r)};
        coeffs.insert(coeffs.end(), higher[r].begin(), higher[r].end());
        images.emplace_back(std::move(coeffs));
    }
    return from_images(std::move(images));
}

HSDerivation HSDerivation::identity(const ContextPtr &ctx, unsigned n)
{
    std::vector<TruncatedSeries> images;
    for (std::size_t r = 0; r < ctx->vars.size(); ++r) {
        images.push_back(TruncatedSeries::constant(Polynomial::variable(ctx, r), n));
    }
    return HSDerivation(ctx, n, std::move(images));
}

HSDerivation HSDerivation::from_derivation(const ContextPtr &ctx, std::span<const Polynomial> coeffs)
{
    std::vector<std::vector<Polynomial>> higher;
    for (const auto &a : coeffs) {
        higher.push_back({a});
    }
    return from_coefficients(ctx, higher);
}

const Polynomial &HSDerivation::coefficient(std::size_t r, unsigned i) const
{
    if (i == 0 || i > level_) {
        throw UsageError("component index " + std::to_string(i) + " outside 1.." + std::to_string(level_));
    }
    return images_.at(r)[i];
}

TruncatedSeries HSDerivation::apply(const Polynomial &f) const
{
    if (!same_context(f.context(), ctx_)) {
        throw UsageError("polynomial from a different context");
    }
    return substitute(f, images_, level_);
}

Polynomial HSDerivation::component(unsigned i, const Polynomial &f) const
{
    if (i > level_) {
        throw UsageError("component index " + std::to_string(i) + " exceeds length " + std::to_string(level_));
    }
    if (i == 0) {
        return f;
    }
    return apply(f)[i];
}

bool HSDerivation::is_identity() const
{
    return ell(*this) == level_;
}

std::vector<std::vector<std::string>> HSDerivation::to_strings() const
{
    std::vector<std::vector<std::string>> out;
    for (const auto &img : images_) {
        std::vector<std::string> row;
        for (unsigned i = 1; i <= level_; ++i) {
            row.push_back(img[i].to_string());
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace
{

void check_pair(const HSDerivation &d, const HSDerivation &e)
{
    if (d.length() != e.length()) {
        throw UsageError("HS derivations of different lengths");
    }
    if (!same_context(d.context(), e.context())) {
        throw UsageError("HS derivations from different contexts");
    }
}

// sum_j shift(Phi_D(e_j), j), the t-series of (D o E) applied to x_r.
TruncatedSeries compose_image(const HSDerivation &d, const TruncatedSeries &img)
{
    const unsigned n = d.length();
    std::vector<Polynomial> acc(n + 1, Polynomial(d.context()));
    for (unsigned j = 0; j <= n; ++j) {
        if (img[j].is_zero()) {
            continue;
        }
        const TruncatedSeries s = d.apply(img[j]);
        for (unsigned i = 0; i + j <= n; ++i) {
            acc[i + j] += s[i];
        }
    }
    return TruncatedSeries(std::move(acc));
}

} // namespace

HSDerivation compose(const HSDerivation &d, const HSDerivation &e)
{
    check_pair(d, e);
    std::vector<TruncatedSeries> images;
    for (const auto &img : e.images()) {
        images.push_back(compose_image(d, img));
    }
    return HSDerivation::from_images(std::move(images));
}

HSDerivation invert(const HSDerivation &d)
{
    const unsigned n = d.length();
    const auto &ctx = d.context();
    std::vector<TruncatedSeries> images;
    for (std::size_t r = 0; r < d.nvars(); ++r) {
        std::vector<Polynomial> e{Polynomial::variable(ctx, r)};
        std::vector<TruncatedSeries> applied{d.apply(e[0])};
        for (unsigned l = 1; l <= n; ++l) {
            Polynomial s(ctx);
            for (unsigned j = 0; j < l; ++j) {
                s += applied[j][l - j];
            }
            e.push_back(-s);
            applied.push_back(d.apply(e.back()));
        }
        images.emplace_back(std::move(e));
    }
    return HSDerivation::from_images(std::move(images));
}

HSDerivation truncate_hs(const HSDerivation &d, unsigned m)
{
    std::vector<TruncatedSeries> images;
    for (const auto &img : d.images()) {
        images.push_back(img.truncated(m));
    }
    return HSDerivation::from_images(std::move(images));
}

HSDerivation dot_action(const Polynomial &a, const HSDerivation &d)
{
    if (!same_context(a.context(), d.context())) {
        throw UsageError("scalar from a different context");
    }
    std::vector<TruncatedSeries> images;
    for (const auto &img : d.images()) {
        images.push_back(img.rescaled_t(a));
    }
    return HSDerivation::from_images(std::move(images));
}

HSDerivation ramify(const HSDerivation &d, unsigned m)
{
    if (m == 0) {
        throw UsageError("ramification index must be positive");
    }
    const unsigned n = d.length();
    check_level(n * m);
    std::vector<TruncatedSeries> images;
    for (const auto &img : d.images()) {
        std::vector<Polynomial> c(n * m + 1, Polynomial(d.context()));
        for (unsigned i = 0; i <= n; ++i) {
            c[i * m] = img[i];
        }
        images.emplace_back(std::move(c));
    }
    return HSDerivation::from_images(std::move(images));
}

unsigned ell(const HSDerivation &d)
{
    unsigned best = d.length();
    for (const auto &img : d.images()) {
        for (unsigned i = 1; i <= d.length(); ++i) {
            if (!img[i].is_zero()) {
                best = std::min(best, i - 1);
                break;
            }
        }
    }
    return best;
}

HSDerivation taylor_extend(const HSDerivation &d, unsigned big_n)
{
    std::vector<TruncatedSeries> images;
    for (const auto &img : d.images()) {
        images.push_back(img.extended(big_n));
    }
    return HSDerivation::from_images(std::move(images));
}

Polynomial TaylorForm::apply(const Polynomial &f) const
{
    Polynomial out(f.context());
    for (const auto &[alpha, c] : coeffs) {
        if (!c.is_zero()) {
            out += c * f.taylor_coefficient(alpha);
        }
    }
    return out;
}

namespace
{

class TaylorBuilder
{
public:
    explicit TaylorBuilder(const HSDerivation &d) : d_(d) {}

    // Sum over compositions (b_1..b_a) of e into a positive parts of
    // c_{r b_1} ... c_{r b_a}.
    const Polynomial &compositions(std::size_t r, unsigned a, unsigned e)
    {
        const auto key = std::make_tuple(r, a, e);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        Polynomial out(d_.context());
        if (a == 0) {
            if (e == 0) {
                out = Polynomial::constant(d_.context(), 1);
            }
        } else {
            for (unsigned b = 1; b + (a - 1) <= e; ++b) {
                const Polynomial &c = d_.coefficient(r, b);
                if (c.is_zero()) {
                    continue;
                }
                const Polynomial &rest = compositions(r, a - 1, e - b);
                if (!rest.is_zero()) {
                    out += c * rest;
                }
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    // C^i_alpha: sum over eps >= alpha on supp(alpha), zero elsewhere,
    // |eps| = i.
    Polynomial coefficient(const Monomial &alpha, unsigned i)
    {
        const auto supp = alpha.support();
        Polynomial total(d_.context());
        std::vector<unsigned> eps(supp.size());
        distribute(alpha, supp, 0, i, eps, total);
        return total;
    }

private:
    void distribute(const Monomial &alpha, const std::vector<std::size_t> &supp, std::size_t k, unsigned left,
                    std::vector<unsigned> &eps, Polynomial &total)
    {
        if (k == supp.size()) {
            if (left != 0) {
                return;
            }
            Polynomial prod = Polynomial::constant(d_.context(), 1);
            for (std::size_t s = 0; s < supp.size(); ++s) {
                const Polynomial &p = compositions(supp[s], alpha[supp[s]], eps[s]);
                if (p.is_zero()) {
                    return;
                }
                prod *= p;
            }
            total += prod;
            return;
        }
        for (unsigned e = alpha[supp[k]]; e <= left; ++e) {
            eps[k] = e;
            distribute(alpha, supp, k + 1, left - e, eps, total);
        }
    }

    const HSDerivation &d_;
    std::map<std::tuple<std::size_t, unsigned, unsigned>, Polynomial> memo_;
};

// All alpha in N^d with 0 < |alpha| <= i.
void multi_indices(std::size_t d, unsigned i, std::size_t r, Monomial &cur, unsigned used, std::vector<Monomial> &out)
{
    if (r == d) {
        if (used > 0) {
            out.push_back(cur);
        }
        return;
    }
    for (unsigned e = 0; used + e <= i; ++e) {
        cur.exps[r] = e;
        multi_indices(d, i, r + 1, cur, used + e, out);
    }
    cur.exps[r] = 0;
}

} // namespace

TaylorForm taylor_coeffs_of_component(const HSDerivation &d, unsigned i)
{
    if (i == 0 || i > d.length()) {
        throw UsageError("component index " + std::to_string(i) + " outside 1.." + std::to_string(d.length()));
    }
    TaylorBuilder builder(d);
    std::vector<Monomial> alphas;
    Monomial cur(d.nvars());
    multi_indices(d.nvars(), i, 0, cur, 0, alphas);
    TaylorForm out;
    out.index = i;
    for (auto &alpha : alphas) {
        Polynomial c = builder.coefficient(alpha, i);
        if (!c.is_zero()) {
            out.coeffs.emplace_back(std::move(alpha), std::move(c));
        }
    }
    return out;
}

bool is_logarithmic(const HSDerivation &d, std::span<const Polynomial> ideal_gens, const GroebnerBasis &gb)
{
    for (const auto &f : ideal_gens) {
        const TruncatedSeries s = d.apply(f);
        for (unsigned i = 1; i <= d.length(); ++i) {
            if (!normal_form(s[i], gb).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

HSDerivation sparse_assemble(const HSDerivation &d, const std::vector<std::vector<Polynomial>> &deltas, unsigned m,
                             unsigned n)
{
    if (m == 0) {
        throw UsageError("sparse assembly needs m >= 1");
    }
    const unsigned q = n / m;
    const unsigned r = n % m;
    if (d.length() != q || deltas.size() != r) {
        throw UsageError("sparse assembly expects a length " + std::to_string(q) + " HS derivation and " +
                         std::to_string(r) + " derivations");
    }
    if (2 * (q * m + 1) <= n) {
        throw UsageError("sparse assembly needs 2(qm + 1) > n");
    }
    const auto &ctx = d.context();
    const HSDerivation base = taylor_extend(ramify(d, m), n);
    std::vector<TruncatedSeries> images;
    for (std::size_t v = 0; v < d.nvars(); ++v) {
        std::vector<Polynomial> c = base.images()[v].coeffs();
        for (unsigned j = 0; j < r; ++j) {
            if (deltas[j].size() != d.nvars()) {
                throw UsageError("derivation with the wrong number of coefficients");
            }
            if (!same_context(deltas[j][v].context(), ctx)) {
                throw UsageError("derivation coefficient from a different context");
            }
            c[q * m + 1 + j] = deltas[j][v];
        }
        images.emplace_back(std::move(c));
    }
    return HSDerivation::from_images(std::move(images));
}

bool verify_leibniz(const HSDerivation &d, const Polynomial &f, const Polynomial &g)
{
    const unsigned n = d.length();
    std::vector<Polynomial> df{f};
    std::vector<Polynomial> dg{g};
    std::vector<Polynomial> dfg{f * g};
    for (unsigned i = 1; i <= n; ++i) {
        const TaylorForm tf = taylor_coeffs_of_component(d, i);
        df.push_back(tf.apply(f));
        dg.push_back(tf.apply(g));
        dfg.push_back(tf.apply(f * g));
    }
    for (unsigned l = 0; l <= n; ++l) {
        Polynomial s(f.context());
        for (unsigned i = 0; i <= l; ++i) {
            s += df[i] * dg[l - i];
        }
        if (!(s == dfg[l])) {
            return false;
        }
    }
    return true;
}

} // namespace hsinteg
