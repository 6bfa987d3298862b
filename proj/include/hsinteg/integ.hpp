#ifndef HSINTEG_INTEG_HPP
#define HSINTEG_INTEG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <hsinteg/gbase.hpp>
#include <hsinteg/hsd.hpp>

namespace hsinteg
{

enum class LiftMode { free, jacobian };
std::string to_string(LiftMode mode);
LiftMode parse_lift_mode(std::string_view text);

/// A = R/I with everything the integrability layer reuses precomputed.
/// Immutable after construction.
class Problem
{
public:
    // Zero generators are dropped. weights, when present, must have one
    // entry per variable.
    Problem(ContextPtr ctx, std::vector<Polynomial> ideal_gens, std::optional<std::vector<unsigned>> weights = {});

    const ContextPtr &context() const noexcept
    {
        return ctx_;
    }
    std::size_t nvars() const noexcept
    {
        return ctx_->vars.size();
    }
    const std::vector<Polynomial> &ideal() const noexcept
    {
        return gens_;
    }
    const std::optional<std::vector<unsigned>> &weights() const noexcept
    {
        return weights_;
    }
    const GroebnerBasis &ideal_basis() const noexcept
    {
        return ideal_gb_;
    }
    // 1 in I: A is the zero ring.
    bool trivial_ring() const noexcept
    {
        return trivial_;
    }
    const JacobianData &jacobian() const noexcept
    {
        return jac_;
    }
    bool in_ideal(const Polynomial &f) const;
    // f in J^0_c + I.
    bool in_jacobian_ideal(const Polynomial &f) const;

    // Submodule of R^p used by the one-step extension. Free mode: the d
    // Jacobian columns (df_1/dx_r, ..., df_p/dx_r) followed by the p^2
    // vectors f_t e_s. Jacobian mode: g * column r for every generator g of
    // J^0_c (g outer, r inner), then the same f_t e_s block.
    const GroebnerBasis &extension_module(LiftMode mode) const;

private:
    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::optional<std::vector<unsigned>> weights_;
    GroebnerBasis ideal_gb_;
    bool trivial_;
    JacobianData jac_;
    GroebnerBasis jac_gb_;
    GroebnerBasis free_module_;
    std::optional<GroebnerBasis> jacobian_module_;
};

/// delta = sum_r a_r d/dx_r with delta(I) in I.
class LogDerivation
{
public:
    // Throws DomainError if some sum_r a_r df_l/dx_r is outside I.
    LogDerivation(const Problem &problem, std::vector<Polynomial> coeffs);
    // "a_1,...,a_d" in the problem's variables.
    static LogDerivation parse(const Problem &problem, std::string_view text);

    const std::vector<Polynomial> &coeffs() const noexcept
    {
        return coeffs_;
    }
    // Comma-separated coefficients, the inverse of parse().
    std::string to_string() const;

    friend bool operator==(const LogDerivation &a, const LogDerivation &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Polynomial> coeffs_;
};

// Generators of Der_k(log I), as a reduced basis of a submodule of R^d.
std::vector<LogDerivation> log_derivations(const Problem &problem);

/// A failed membership: target vector and its nonzero normal form.
struct MembershipEvidence {
    ModuleVector target;
    ModuleVector normal_form;
    LiftMode mode;
    // The length of the HS derivation that failed to extend.
    unsigned from_level;
};

struct StepResult {
    std::optional<HSDerivation> extended;
    std::optional<MembershipEvidence> evidence;
};

// Extend a logarithmic D of length n to length n + 1, or report why the
// canonical lift does not exist. Throws DomainError when D is not
// logarithmic or jacobian mode is asked for with Jacobian rank 0.
StepResult extend_one_step(const HSDerivation &d, const Problem &problem, LiftMode mode);

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

struct Certificate {
    std::size_t generator;
    HSDerivation integral;
    // Mode of each extension step 1 -> 2, 2 -> 3, ...
    std::vector<LiftMode> modes;
};

struct Witness {
    std::size_t generator;
    MembershipEvidence evidence;
};

struct LevelEntry {
    unsigned level;
    Verdict verdict;
    std::optional<Witness> witness;
    std::vector<Certificate> certificates;
};

struct IntegrabilityReport {
    std::vector<LogDerivation> generators;
    std::vector<LevelEntry> levels;
    // Levels j with Ider(A; j) = Der(A) established, ascending.
    std::vector<unsigned> ledger;
    bool trivial_ring = false;
    // Set when a resource guard stopped the run; levels then hold only what
    // was finished and nothing after them is a verdict.
    bool aborted = false;
    std::string abort_reason;
};

// Level-by-level decision of Der(A) = Ider(A; N) for N = 1..max_level,
// stopping at the first FALSE. Resource errors are caught and reported
// through `aborted`.
IntegrabilityReport check_equality(const Problem &problem, unsigned max_level);

// Whether Ider(A; j) = Der(A) follows from the ledger.
bool ledger_establishes(const std::vector<unsigned> &ledger, unsigned j);

enum class IntegrationStatus { yes, no, inconclusive };
std::string to_string(IntegrationStatus s);

struct IntegrationResult {
    IntegrationStatus status;
    // Longest integral built; the full certificate on YES.
    HSDerivation integral;
    std::vector<LiftMode> modes;
    std::optional<MembershipEvidence> evidence;
    // Ledger consulted (or computed) for the refutation decision.
    std::vector<unsigned> ledger;
    std::string reason;
};

// Greedy integration of delta up to target_level. Without a ledger one is
// computed on demand when a refutation needs it.
IntegrationResult integrate_derivation(const LogDerivation &delta, const Problem &problem, unsigned target_level,
                                       LiftMode mode, const std::vector<unsigned> *ledger = nullptr);

// Every generator is quasi-homogeneous for the weights; returns
// x_r -> x_r (1 - t)^{-w_r} at the given level. DomainError names a
// monomial pair of different weighted degrees.
HSDerivation euler_integral(const std::vector<unsigned> &weights, const Problem &problem, unsigned level);

// (n + 1) / 2 for odd n, floor((n + 1) / 3) for even n. n >= 1.
unsigned rho(unsigned n);

// Certificate re-verification: logarithmic and component 1 equal to delta.
bool verify_certificate(const HSDerivation &integral, const std::vector<Polynomial> &delta, const Problem &problem);

} // namespace hsinteg

#endif
