#include <hsinteg/jet.hpp>

#include <algorithm>
#include <map>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>

namespace hsinteg
{

void check_level(unsigned level)
{
    if (level > limits().max_level) {
        throw ResourceError("truncation level " + std::to_string(level) + " exceeds the cap of " +
                            std::to_string(limits().max_level));
    }
}

TruncatedSeries::TruncatedSeries(ContextPtr ctx, unsigned level)
{
    check_level(level);
    coeffs_.assign(level + 1, Polynomial(std::move(ctx)));
}

TruncatedSeries::TruncatedSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw UsageError("a truncated series needs at least one coefficient");
    }
    check_level(level());
    for (const auto &c : coeffs_) {
        if (!same_context(c.context(), coeffs_.front().context())) {
            throw UsageError("series coefficients from different contexts");
        }
    }
}

TruncatedSeries TruncatedSeries::constant(const Polynomial &a0, unsigned level)
{
    TruncatedSeries s(a0.context(), level);
    s.coeffs_[0] = a0;
    return s;
}

TruncatedSeries TruncatedSeries::t(ContextPtr ctx, unsigned level)
{
    TruncatedSeries s(ctx, level);
    if (level >= 1) {
        s.coeffs_[1] = Polynomial::constant(std::move(ctx), 1);
    }
    return s;
}

bool TruncatedSeries::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial &p) { return p.is_zero(); });
}

void TruncatedSeries::check_compatible(const TruncatedSeries &other) const
{
    if (level() != other.level()) {
        throw UsageError("series level mismatch: " + std::to_string(level()) + " vs " + std::to_string(other.level()));
    }
    if (!same_context(context(), other.context())) {
        throw UsageError("series from different contexts");
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    a.check_compatible(b);
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries out(a.context(), a.level());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Polynomial &a) const
{
    TruncatedSeries out = *this;
    for (auto &c : out.coeffs_) {
        c = c * a;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(unsigned m) const
{
    if (m > level()) {
        throw UsageError("cannot truncate a level " + std::to_string(level()) + " series to level " + std::to_string(m));
    }
    return TruncatedSeries(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

TruncatedSeries TruncatedSeries::extended(unsigned m) const
{
    if (m < level()) {
        throw UsageError("cannot extend a level " + std::to_string(level()) + " series to level " + std::to_string(m));
    }
    check_level(m);
    TruncatedSeries out(context(), m);
    std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
    return out;
}

TruncatedSeries TruncatedSeries::rescaled_t(const Polynomial &a) const
{
    TruncatedSeries out = *this;
    Polynomial power = Polynomial::constant(context(), 1);
    for (std::size_t i = 1; i < out.coeffs_.size(); ++i) {
        power *= a;
        out.coeffs_[i] = out.coeffs_[i] * power;
    }
    return out;
}

bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + coeffs_[i].to_string() + ")";
        if (i > 0) {
            out += "*t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace
{

// Horner evaluation in variable r of the terms whose exponents in
// variables < r have already been consumed.
TruncatedSeries horner(const std::vector<const Term *> &terms, std::size_t r, std::span<const TruncatedSeries> images,
                       const ContextPtr &ctx, unsigned level)
{
    if (r == images.size()) {
        // All exponents fixed: at most one term survives canonical form.
        Polynomial c(ctx);
        for (const auto *t : terms) {
            c += Polynomial::constant(ctx, t->coeff);
        }
        return TruncatedSeries::constant(c, level);
    }
    std::map<std::uint32_t, std::vector<const Term *>, std::greater<>> buckets;
    for (const auto *t : terms) {
        buckets[t->mono.exps[r]].push_back(t);
    }
    TruncatedSeries acc(ctx, level);
    std::uint32_t current = buckets.begin()->first;
    for (const auto &[e, group] : buckets) {
        for (; current > e; --current) {
            acc = acc * images[r];
        }
        acc += horner(group, r + 1, images, ctx, level);
    }
    for (; current > 0; --current) {
        acc = acc * images[r];
    }
    return acc;
}

} // namespace

TruncatedSeries substitute(const Polynomial &f, std::span<const TruncatedSeries> images, unsigned level)
{
    if (images.size() != f.nvars()) {
        throw UsageError("substitution needs one image per variable");
    }
    for (const auto &img : images) {
        if (img.level() != level) {
            throw UsageError("image level mismatch in substitution");
        }
        if (!same_context(img.context(), f.context())) {
            throw UsageError("image from a different context");
        }
    }
    if (f.is_zero()) {
        return TruncatedSeries(f.context(), level);
    }
    std::vector<const Term *> all;
    all.reserve(f.size());
    for (const auto &t : f.terms()) {
        all.push_back(&t);
    }
    return horner(all, 0, images, f.context(), level);
}

TruncatedSeries unit_inverse(const TruncatedSeries &u)
{
    const Polynomial &a0 = u[0];
    if (!a0.is_constant() || a0.is_zero()) {
        throw DomainError("series constant term is not a nonzero constant");
    }
    const auto &ring = a0.ring();
    const Scalar c0 = a0.leading_term().coeff;
    if (!ring.is_unit(c0)) {
        throw DomainError("series constant term " + a0.to_string() + " is not a unit in " + ring.name());
    }
    const Scalar inv0 = ring.inverse(c0);
    const unsigned n = u.level();
    std::vector<Polynomial> v;
    v.reserve(n + 1);
    v.push_back(Polynomial::constant(u.context(), inv0));
    for (unsigned k = 1; k <= n; ++k) {
        Polynomial s(u.context());
        for (unsigned j = 1; j <= k; ++j) {
            if (!u[j].is_zero() && !v[k - j].is_zero()) {
                s += u[j] * v[k - j];
            }
        }
        v.push_back(-s.scaled(inv0));
    }
    return TruncatedSeries(std::move(v));
}

} // namespace hsinteg
