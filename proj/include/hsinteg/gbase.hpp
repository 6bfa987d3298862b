#ifndef HSINTEG_GBASE_HPP
#define HSINTEG_GBASE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <hsinteg/poly.hpp>

namespace hsinteg
{

/// Element (v_1, ..., v_p) of the free module R^p. p = 1 for ideals.
class ModuleVector
{
public:
    // Zero vector of rank p.
    ModuleVector(ContextPtr ctx, std::size_t rank);
    ModuleVector(ContextPtr ctx, std::vector<Polynomial> entries);
    static ModuleVector scalar(const Polynomial &f)
    {
        return ModuleVector(f.context(), std::vector<Polynomial>{f});
    }

    const ContextPtr &context() const noexcept
    {
        return ctx_;
    }
    std::size_t rank() const noexcept
    {
        return entries_.size();
    }
    const Polynomial &operator[](std::size_t i) const
    {
        return entries_.at(i);
    }
    const std::vector<Polynomial> &entries() const noexcept
    {
        return entries_;
    }
    bool is_zero() const noexcept;

    ModuleVector &operator+=(const ModuleVector &other);
    ModuleVector &operator-=(const ModuleVector &other);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector &b)
    {
        return a += b;
    }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector &b)
    {
        return a -= b;
    }
    ModuleVector scaled(const Polynomial &a) const;

    friend bool operator==(const ModuleVector &a, const ModuleVector &b)
    {
        return a.entries_ == b.entries_;
    }

    // "(e_1, e_2, ...)"; a bare polynomial for rank 1.
    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::vector<Polynomial> entries_;
};

/// Canonical Groebner basis of a submodule of R^p.
///
/// Over a field the basis is reduced and monic. Over Z it is a minimal
/// strong basis with positive leading coefficients whose tails are reduced
/// to the least non-negative residues modulo the leading coefficients that
/// could act on them; this form is unique for the submodule and order.
///
/// The module order is term-over-position on top of the context's monomial
/// order, with e_1 > e_2 > ... on ties. Each basis element also records its
/// expression in terms of the generators it was computed from.
class GroebnerBasis
{
public:
    const ContextPtr &context() const noexcept
    {
        return ctx_;
    }
    std::size_t rank() const noexcept
    {
        return rank_;
    }
    const std::vector<ModuleVector> &generators() const noexcept
    {
        return basis_;
    }
    std::size_t size() const noexcept
    {
        return basis_.size();
    }
    // Input generators, as passed to groebner().
    const std::vector<ModuleVector> &originals() const noexcept
    {
        return originals_;
    }
    // generators()[i] == sum_j transform()[i][j] * originals()[j].
    const std::vector<std::vector<Polynomial>> &transform() const noexcept
    {
        return transform_;
    }
    bool is_zero() const noexcept
    {
        return basis_.empty();
    }
    // Rank 1 and the basis is {1}.
    bool is_unit_ideal() const;

private:
    friend GroebnerBasis groebner(const ContextPtr &ctx, std::size_t rank, std::vector<ModuleVector> gens);

    ContextPtr ctx_;
    std::size_t rank_ = 0;
    std::vector<ModuleVector> basis_;
    std::vector<ModuleVector> originals_;
    std::vector<std::vector<Polynomial>> transform_;
};

// Buchberger completion (Gebauer-Moeller criteria over fields; S- and
// G-polynomials over Z), then minimalization and inter-reduction. Runs the
// Buchberger self-check on the result and throws InternalError if it fails.
// ResourceError on pair-queue or deadline exhaustion.
GroebnerBasis groebner(const ContextPtr &ctx, std::size_t rank, std::vector<ModuleVector> gens);
// Ideal convenience overload (rank 1).
GroebnerBasis groebner(const ContextPtr &ctx, std::span<const Polynomial> gens);

/// v == sum_i quotients[i] * basis[i] + remainder, exactly.
struct LiftedReduction {
    ModuleVector remainder;
    std::vector<Polynomial> quotients;
};

// Deterministic division: leading term first, generators scanned in stored
// order. Over Z a term is reducible only when the generator's leading
// coefficient divides it. Quotients are indexed by gb.generators().
LiftedReduction normal_form_with_lift(const ModuleVector &v, const GroebnerBasis &gb);
Polynomial normal_form(const Polynomial &f, const GroebnerBasis &gb);

// Present iff f lies in the ideal; the lift is against gb.originals().
std::optional<std::vector<Polynomial>> ideal_membership(const Polynomial &f, const GroebnerBasis &gb);

// Present iff v lies in the submodule; quotients are against gb.originals()
// and the identity v == sum q_j * originals[j] is re-verified.
std::optional<LiftedReduction> module_membership_with_lift(const ModuleVector &v, const GroebnerBasis &gb);
std::optional<LiftedReduction> module_membership_with_lift(const ModuleVector &v, std::span<const ModuleVector> gens);

// Generators (reduced basis) of {u in R^k : sum u_i gens_i = 0}.
std::vector<ModuleVector> syzygies(const ContextPtr &ctx, std::size_t rank, std::span<const ModuleVector> gens);

// Reduced basis of (I : g). Throws UsageError for g == 0.
std::vector<Polynomial> ideal_quotient(std::span<const Polynomial> ideal_gens, const Polynomial &g);

struct JacobianData {
    // Largest e with an e x e minor of (df_j/dx_i) outside I; 0 when every
    // partial derivative lies in I.
    unsigned rank = 0;
    // Nonzero e x e minors for e = rank (empty for rank 0).
    std::vector<Polynomial> minors;
    // minors followed by the ideal generators: J^0_rank + I.
    std::vector<Polynomial> generators;
};

JacobianData jacobian_ideal(const ContextPtr &ctx, std::span<const Polynomial> ideal_gens);

// Every S-polynomial (and over Z every G-polynomial) of the basis reduces to
// zero.
bool verify_buchberger(const GroebnerBasis &gb);

// I(a) subset I(b), decided with the basis of b.
bool ideal_contains(const GroebnerBasis &gb, std::span<const Polynomial> gens);
bool same_ideal(std::span<const Polynomial> a, std::span<const Polynomial> b);
bool module_contains(const GroebnerBasis &gb, std::span<const ModuleVector> gens);

// Determinant by cofactor expansion; square matrices of polynomials.
Polynomial determinant(const std::vector<std::vector<Polynomial>> &m);

} // namespace hsinteg

#endif
