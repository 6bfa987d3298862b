#include <hsinteg/coeffring.hpp>

#include <charconv>
#include <utility>

#include <hsinteg/errors.hpp>

namespace hsinteg
{

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw UsageError("F_p requires a prime modulus, got " + std::to_string(p));
    }
    // Sum of two residues must not overflow 64 bits.
    if (p > (std::uint64_t{1} << 62)) {
        throw UsageError("prime modulus too large: " + std::to_string(p));
    }
    return RingSpec(RingKind::prime_field, p);
}

RingSpec RingSpec::rationals()
{
    return RingSpec(RingKind::rationals, 0);
}

RingSpec RingSpec::integers()
{
    return RingSpec(RingKind::integers, 0);
}

RingSpec RingSpec::parse(std::string_view text)
{
    if (text == "Q") {
        return rationals();
    }
    if (text == "Z") {
        return integers();
    }
    std::string_view digits;
    if (text.starts_with("Fp:")) {
        digits = text.substr(3);
    } else if (text.size() > 1 && text[0] == 'F') {
        digits = text.substr(1);
    } else {
        throw ParseError("unknown coefficient ring '" + std::string(text) + "'", 0);
    }
    std::uint64_t p = 0;
    const auto *first = digits.data();
    const auto *last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (digits.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("bad prime modulus in ring spec '" + std::string(text) + "'",
                         static_cast<std::size_t>(ptr - text.data()));
    }
    return prime_field(p);
}

std::string RingSpec::name() const
{
    switch (kind_) {
        case RingKind::rationals:
            return "Q";
        case RingKind::integers:
            return "Z";
        case RingKind::prime_field:
            if (p_ == 2 || p_ == 3) {
                return "F" + std::to_string(p_);
            }
            return "Fp:" + std::to_string(p_);
    }
    return {};
}

namespace
{

static_assert(sizeof(unsigned long) == 8, "F_p fast path assumes 64-bit unsigned long");

mpz_class modulus_mpz(std::uint64_t p)
{
    return mpz_class(static_cast<unsigned long>(p));
}

std::uint64_t residue(const Scalar &a)
{
    return mpz_get_ui(a.get_num_mpz_t());
}

Scalar from_residue(std::uint64_t r)
{
    return Scalar(static_cast<unsigned long>(r));
}

mpz_class reduce_mod(const mpz_class &v, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_mpz(p).get_mpz_t());
    return r;
}

} // namespace

Scalar RingSpec::canonical(const mpq_class &v) const
{
    mpq_class q(v);
    q.canonicalize();
    switch (kind_) {
        case RingKind::rationals:
            return q;
        case RingKind::integers:
            if (q.get_den() != 1) {
                throw DomainError("non-integral value " + q.get_str() + " in Z");
            }
            return q;
        case RingKind::prime_field: {
            const mpz_class m = modulus_mpz(p_);
            mpz_class num = reduce_mod(q.get_num(), p_);
            if (q.get_den() != 1) {
                mpz_class den = reduce_mod(q.get_den(), p_);
                mpz_class inv;
                if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
                    throw DomainError("denominator not invertible in " + name());
                }
                num = reduce_mod(num * inv, p_);
            }
            return Scalar(num);
        }
    }
    return q;
}

Scalar RingSpec::from_int(long v) const
{
    return canonical(mpq_class(v));
}

Scalar RingSpec::from_mpz(const mpz_class &v) const
{
    return canonical(mpq_class(v));
}

bool RingSpec::is_canonical(const Scalar &v) const
{
    if (v.get_den() <= 0) {
        return false;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    if (g != 1 && v.get_num() != 0) {
        return false;
    }
    switch (kind_) {
        case RingKind::rationals:
            return v.get_num() != 0 || v.get_den() == 1;
        case RingKind::integers:
            return v.get_den() == 1;
        case RingKind::prime_field:
            return v.get_den() == 1 && v.get_num() >= 0 && v.get_num() < modulus_mpz(p_);
    }
    return false;
}

Scalar RingSpec::add(const Scalar &a, const Scalar &b) const
{
    if (kind_ == RingKind::prime_field) {
        std::uint64_t s = residue(a) + residue(b);
        return from_residue(s >= p_ ? s - p_ : s);
    }
    return a + b;
}

Scalar RingSpec::sub(const Scalar &a, const Scalar &b) const
{
    if (kind_ == RingKind::prime_field) {
        const std::uint64_t x = residue(a);
        const std::uint64_t y = residue(b);
        return from_residue(x >= y ? x - y : x + p_ - y);
    }
    return a - b;
}

Scalar RingSpec::mul(const Scalar &a, const Scalar &b) const
{
    if (kind_ == RingKind::prime_field) {
        const unsigned __int128 prod = static_cast<unsigned __int128>(residue(a)) * residue(b);
        return from_residue(static_cast<std::uint64_t>(prod % p_));
    }
    return a * b;
}

Scalar RingSpec::neg(const Scalar &a) const
{
    if (kind_ == RingKind::prime_field) {
        if (is_zero(a)) {
            return a;
        }
        return from_residue(p_ - residue(a));
    }
    return -a;
}

bool RingSpec::is_unit(const Scalar &a) const
{
    if (is_zero(a)) {
        return false;
    }
    if (kind_ == RingKind::integers) {
        return abs(a) == 1;
    }
    return true;
}

Scalar RingSpec::inverse(const Scalar &a) const
{
    if (!is_unit(a)) {
        throw DomainError(format(a) + " is not a unit in " + name());
    }
    switch (kind_) {
        case RingKind::rationals:
            return 1 / a;
        case RingKind::integers:
            return a;
        case RingKind::prime_field: {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), modulus_mpz(p_).get_mpz_t());
            return Scalar(inv);
        }
    }
    return a;
}

std::optional<Scalar> RingSpec::try_divide(const Scalar &a, const Scalar &b) const
{
    if (is_zero(b)) {
        throw DomainError("division by zero");
    }
    switch (kind_) {
        case RingKind::rationals:
            return Scalar(a / b);
        case RingKind::prime_field:
            return mul(a, inverse(b));
        case RingKind::integers:
            if (!mpz_divisible_p(a.get_num().get_mpz_t(), b.get_num().get_mpz_t())) {
                return std::nullopt;
            }
            {
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
                return Scalar(q);
            }
    }
    return std::nullopt;
}

std::string RingSpec::format(const Scalar &a) const
{
    return a.get_str();
}

Coefficient::Coefficient(const RingSpec &ring, long v) : ring_(ring), value_(ring.from_int(v)) {}

Coefficient::Coefficient(const RingSpec &ring, const mpq_class &v) : ring_(ring), value_(ring.canonical(v)) {}

namespace
{

const RingSpec &common_ring(const Coefficient &a, const Coefficient &b)
{
    if (!(a.ring() == b.ring())) {
        throw UsageError("coefficients from different rings: " + a.ring().name() + " vs " + b.ring().name());
    }
    return a.ring();
}

} // namespace

Coefficient operator+(const Coefficient &a, const Coefficient &b)
{
    const auto &r = common_ring(a, b);
    return Coefficient(Coefficient::raw_tag{}, r, r.add(a.value_, b.value_));
}

Coefficient operator-(const Coefficient &a, const Coefficient &b)
{
    const auto &r = common_ring(a, b);
    return Coefficient(Coefficient::raw_tag{}, r, r.sub(a.value_, b.value_));
}

Coefficient operator*(const Coefficient &a, const Coefficient &b)
{
    const auto &r = common_ring(a, b);
    return Coefficient(Coefficient::raw_tag{}, r, r.mul(a.value_, b.value_));
}

Coefficient Coefficient::operator-() const
{
    return Coefficient(raw_tag{}, ring_, ring_.neg(value_));
}

std::optional<Coefficient> try_exact_divide(const Coefficient &a, const Coefficient &b)
{
    const auto &r = common_ring(a, b);
    auto q = r.try_divide(a.value_, b.value_);
    if (!q) {
        return std::nullopt;
    }
    return Coefficient(Coefficient::raw_tag{}, r, std::move(*q));
}

} // namespace hsinteg
