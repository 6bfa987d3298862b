#ifndef HSINTEG_LIMITS_HPP
#define HSINTEG_LIMITS_HPP

#include <chrono>
#include <cstddef>
#include <optional>

namespace hsinteg
{

// Process-wide resource guards. Set once (normally by the CLI) before any
// computation starts; read-only afterwards.
struct Limits {
    // Total degree cap for any polynomial that gets constructed.
    unsigned max_degree = 64;
    // Term count cap for any polynomial.
    std::size_t max_terms = 100000;
    // Truncation level cap for series and HS derivations.
    unsigned max_level = 64;
    // Number of critical pairs a single Groebner completion may process.
    std::size_t max_pairs = 200000;
    // Wall-clock deadline, checked inside the Groebner loop.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

Limits &limits();

// Throws ResourceError when the configured deadline has passed.
void check_deadline();

} // namespace hsinteg

#endif
