#ifndef HSINTEG_JET_HPP
#define HSINTEG_JET_HPP

#include <span>
#include <string>
#include <vector>

#include <hsinteg/poly.hpp>

namespace hsinteg
{

/// Element a_0 + a_1 t + ... + a_n t^n of R[t]/(t^{n+1}).
///
/// Stored densely in t; every coefficient is a Polynomial of the same
/// context. Levels are small in practice and capped by limits().max_level.
class TruncatedSeries
{
public:
    // The zero series of the given level.
    TruncatedSeries(ContextPtr ctx, unsigned level);
    // Level is coeffs.size() - 1; coeffs must be nonempty and share a context.
    explicit TruncatedSeries(std::vector<Polynomial> coeffs);

    static TruncatedSeries constant(const Polynomial &a0, unsigned level);
    // The series t itself (needs level >= 1 to be nonzero).
    static TruncatedSeries t(ContextPtr ctx, unsigned level);

    unsigned level() const noexcept
    {
        return static_cast<unsigned>(coeffs_.size() - 1);
    }
    const ContextPtr &context() const noexcept
    {
        return coeffs_.front().context();
    }
    const Polynomial &operator[](std::size_t i) const
    {
        return coeffs_.at(i);
    }
    const std::vector<Polynomial> &coeffs() const noexcept
    {
        return coeffs_;
    }
    bool is_zero() const noexcept;

    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    // Truncated product; terms beyond t^n are discarded.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    TruncatedSeries operator-() const;

    // Multiply every coefficient by a polynomial.
    TruncatedSeries scaled(const Polynomial &a) const;
    // pi_{n,m}: keep a_0..a_m. Throws UsageError if m > n.
    TruncatedSeries truncated(unsigned m) const;
    // Pad with zero coefficients up to level m >= n.
    TruncatedSeries extended(unsigned m) const;
    // u(t) -> u(a t), i.e. a_i -> a^i a_i.
    TruncatedSeries rescaled_t(const Polynomial &a) const;

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b);

    std::string to_string() const;

private:
    void check_compatible(const TruncatedSeries &other) const;

    std::vector<Polynomial> coeffs_;
};

// Evaluate f at x_r -> images[r] inside R[t]/(t^{level+1}). Horner scheme in
// each variable. Throws UsageError on a missing image or level mismatch.
TruncatedSeries substitute(const Polynomial &f, std::span<const TruncatedSeries> images, unsigned level);

// v with u * v = 1 at u's level. Requires a constant, unit a_0 (DomainError
// otherwise).
TruncatedSeries unit_inverse(const TruncatedSeries &u);

// Throws ResourceError when a level exceeds limits().max_level.
void check_level(unsigned level);

} // namespace hsinteg

#endif
