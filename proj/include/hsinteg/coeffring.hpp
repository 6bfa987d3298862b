#ifndef HSINTEG_COEFFRING_HPP
#define HSINTEG_COEFFRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hsinteg
{

// Raw coefficient storage. Every ring keeps its elements as reduced
// rationals: residues in [0, p) for F_p, integers for Z, fractions with
// positive denominator for Q. Only RingSpec may produce canonical values.
using Scalar = mpq_class;

enum class RingKind { prime_field, rationals, integers };

/// The base ring k: F_p, Q or Z.
///
/// Arithmetic is exposed on raw Scalars so that polynomial and Groebner code
/// can work on term lists without carrying a ring tag per coefficient; the
/// ring-tagged Coefficient below is the checked public face.
class RingSpec
{
public:
    // Throws UsageError unless p is prime.
    static RingSpec prime_field(std::uint64_t p);
    static RingSpec rationals();
    static RingSpec integers();
    // "F2", "F3", "Fp:<p>", "Q", "Z".
    static RingSpec parse(std::string_view text);

    RingKind kind() const noexcept
    {
        return kind_;
    }
    std::uint64_t modulus() const noexcept
    {
        return p_;
    }
    std::uint64_t characteristic() const noexcept
    {
        return kind_ == RingKind::prime_field ? p_ : 0;
    }
    bool is_field() const noexcept
    {
        return kind_ != RingKind::integers;
    }
    // Inverse of parse().
    std::string name() const;

    friend bool operator==(const RingSpec &, const RingSpec &) = default;

    // Canonical image of an integer or fraction. Fractions are accepted only
    // where they denote a ring element (Q always; F_p when the denominator is
    // invertible); otherwise DomainError.
    Scalar canonical(const mpq_class &v) const;
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class &v) const;
    bool is_canonical(const Scalar &v) const;

    Scalar add(const Scalar &a, const Scalar &b) const;
    Scalar sub(const Scalar &a, const Scalar &b) const;
    Scalar mul(const Scalar &a, const Scalar &b) const;
    Scalar neg(const Scalar &a) const;

    static bool is_zero(const Scalar &a)
    {
        return sgn(a) == 0;
    }
    static bool is_one(const Scalar &a)
    {
        return a == 1;
    }

    bool is_unit(const Scalar &a) const;
    // Throws DomainError on a non-unit.
    Scalar inverse(const Scalar &a) const;
    // q with q*b == a, if it exists. Throws DomainError when b == 0.
    std::optional<Scalar> try_divide(const Scalar &a, const Scalar &b) const;

    // Plain decimal ("3", "-2", "1/2"); F_p residues print non-negative.
    std::string format(const Scalar &a) const;

private:
    RingSpec(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    RingKind kind_;
    std::uint64_t p_;
};

/// A ring element tagged with its ring. Mixing rings is a UsageError.
class Coefficient
{
public:
    Coefficient(const RingSpec &ring, long v);
    Coefficient(const RingSpec &ring, const mpq_class &v);

    const RingSpec &ring() const noexcept
    {
        return ring_;
    }
    const Scalar &value() const noexcept
    {
        return value_;
    }
    bool is_zero() const noexcept
    {
        return RingSpec::is_zero(value_);
    }

    friend Coefficient operator+(const Coefficient &a, const Coefficient &b);
    friend Coefficient operator-(const Coefficient &a, const Coefficient &b);
    friend Coefficient operator*(const Coefficient &a, const Coefficient &b);
    Coefficient operator-() const;

    friend bool operator==(const Coefficient &a, const Coefficient &b)
    {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

    std::string to_string() const
    {
        return ring_.format(value_);
    }

private:
    struct raw_tag {
    };
    Coefficient(raw_tag, const RingSpec &ring, Scalar v) : ring_(ring), value_(std::move(v)) {}

    friend std::optional<Coefficient> try_exact_divide(const Coefficient &a, const Coefficient &b);

    RingSpec ring_;
    Scalar value_;
};

// Absent when b does not divide a in the ring (only possible over Z).
std::optional<Coefficient> try_exact_divide(const Coefficient &a, const Coefficient &b);

// Trial-division primality test; inputs are machine words.
bool is_prime(std::uint64_t n);

} // namespace hsinteg

#endif
