#ifndef HSINTEG_TESTS_ORACLES_HPP
#define HSINTEG_TESTS_ORACLES_HPP

#include <span>
#include <vector>

#include <hsinteg/hsd.hpp>

namespace hsinteg::testing
{

// Monomials of total degree <= max_deg in d variables, graded.
std::vector<Monomial> monomials_up_to(std::size_t d, unsigned max_deg);

// Exact membership of f in (gens) + m^N over F_2, with m the ideal of the
// variables: linear algebra in the finite F_2-space R / m^N.
bool f2_member_mod_power(const Polynomial &f, std::span<const Polynomial> gens, unsigned N);

// Whether f lies in the Z-span of { m * g : g in gens, deg m <= mult_deg }.
// Integer row echelon form with gcd elimination.
bool integer_lattice_member(const Polynomial &f, std::span<const Polynomial> gens, unsigned mult_deg);

// f(images) by expanding every monomial as a product of series powers.
TruncatedSeries naive_substitute(const Polynomial &f, std::span<const TruncatedSeries> images, unsigned level);

// (D o E)_l(f) = sum_{i+j=l} D_i(E_j(f)) straight from the components.
Polynomial composed_component(const HSDerivation &d, const HSDerivation &e, unsigned l, const Polynomial &f);

// Delta^(alpha)(f) from the binomial formula term by term.
Polynomial naive_taylor_coefficient(const Polynomial &f, const Monomial &alpha);

} // namespace hsinteg::testing

#endif
