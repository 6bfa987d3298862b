#ifndef HSINTEG_HSD_HPP
#define HSINTEG_HSD_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <hsinteg/gbase.hpp>
#include <hsinteg/jet.hpp>

namespace hsinteg
{

/// Hasse-Schmidt derivation D = (Id, D_1, ..., D_n) of R = k[x_1..x_d],
/// stored as the substitution x_r -> x_r + c_{r1} t + ... + c_{rn} t^n.
/// The ring map Phi_D(f) = f(images) determines every D_i.
class HSDerivation
{
public:
    // Each image must have constant term x_r and the same level.
    static HSDerivation from_images(std::vector<TruncatedSeries> images);
    // higher[r][i - 1] = c_{ri}; all rows the same length n.
    static HSDerivation from_coefficients(const ContextPtr &ctx, const std::vector<std::vector<Polynomial>> &higher);
    static HSDerivation identity(const ContextPtr &ctx, unsigned n);
    // (Id, delta) with delta = sum_r a_r d/dx_r.
    static HSDerivation from_derivation(const ContextPtr &ctx, std::span<const Polynomial> coeffs);

    unsigned length() const noexcept
    {
        return level_;
    }
    const ContextPtr &context() const noexcept
    {
        return ctx_;
    }
    std::size_t nvars() const noexcept
    {
        return images_.size();
    }
    const std::vector<TruncatedSeries> &images() const noexcept
    {
        return images_;
    }
    // c_{ri} = D_i(x_r), 1 <= i <= n.
    const Polynomial &coefficient(std::size_t r, unsigned i) const;

    // Phi_D(f) in R[t]/(t^{n+1}).
    TruncatedSeries apply(const Polynomial &f) const;
    // D_i(f).
    Polynomial component(unsigned i, const Polynomial &f) const;
    bool is_identity() const;

    friend bool operator==(const HSDerivation &a, const HSDerivation &b)
    {
        return a.level_ == b.level_ && a.images_ == b.images_;
    }

    // One list per variable: [c_{r1}, ..., c_{rn}].
    std::vector<std::vector<std::string>> to_strings() const;

private:
    HSDerivation(ContextPtr ctx, unsigned level, std::vector<TruncatedSeries> images)
        : ctx_(std::move(ctx)), level_(level), images_(std::move(images))
    {
    }

    ContextPtr ctx_;
    unsigned level_;
    std::vector<TruncatedSeries> images_;
};

// D o E: (D o E)_l = sum_{i+j=l} D_i E_j. Equal lengths required.
HSDerivation compose(const HSDerivation &d, const HSDerivation &e);
// D* with D o D* = D* o D = identity.
HSDerivation invert(const HSDerivation &d);
// (Id, D_1, ..., D_m), m <= n.
HSDerivation truncate_hs(const HSDerivation &d, unsigned m);
// a . D = (Id, a D_1, a^2 D_2, ...).
HSDerivation dot_action(const Polynomial &a, const HSDerivation &d);
// D[m]: D_i moved to slot i m, zeros elsewhere, length n m.
HSDerivation ramify(const HSDerivation &d, unsigned m);
// Largest l with D_1 = ... = D_l = 0 (n for the identity).
unsigned ell(const HSDerivation &d);
// Zero-pad D to length big_n >= n.
HSDerivation taylor_extend(const HSDerivation &d, unsigned big_n);

/// D_i = sum_{0 < |alpha| <= i} C_alpha Delta^(alpha).
struct TaylorForm {
    unsigned index = 0;
    std::vector<std::pair<Monomial, Polynomial>> coeffs;

    Polynomial apply(const Polynomial &f) const;
};

// Coefficients C^i_alpha from the product formula over compositions.
TaylorForm taylor_coeffs_of_component(const HSDerivation &d, unsigned i);

// Phi_D(I) subset I[t]: every coefficient of Phi_D(f_j) lies in I.
bool is_logarithmic(const HSDerivation &d, std::span<const Polynomial> ideal_gens, const GroebnerBasis &gb);

// Theta(D, delta): D[m] truncated below q m + 1 where n = q m + r,
// 0 <= r < m, followed by the derivations delta_1..delta_r in slots
// q m + 1 .. n. d must have length q, deltas.size() must be r and
// 2 (q m + 1) > n.
HSDerivation sparse_assemble(const HSDerivation &d, const std::vector<std::vector<Polynomial>> &deltas, unsigned m,
                             unsigned n);

// D_l(f g) == sum_{i+j=l} D_i(f) D_j(g) for every l <= n, with each D_i
// evaluated through its Taylor form.
bool verify_leibniz(const HSDerivation &d, const Polynomial &f, const Polynomial &g);

} // namespace hsinteg

#endif
