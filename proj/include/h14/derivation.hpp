#pragma once

#include <cstddef>
#include <vector>

#include "h14/laurent.hpp"

namespace h14 {

/// E = Σ_i ∂/∂Y_i over all variables of f.
LaurentPoly apply_e(const LaurentPoly& f);

/// f ∈ K[Y]^E, i.e. E(f) = 0.
bool kernel_check(const LaurentPoly& f);

/// Basis of {f ∈ K[Y_1..Y_nvars] : deg f ≤ d, E(f) = 0}, found degree by
/// degree as the null space of E on the monomial coefficients.
/// PreconditionError over a prime field.
std::vector<LaurentPoly> kernel_degree_basis(std::size_t d, std::size_t nvars = 4,
                                             const Field& field = Field::rationals());

/// All exponent vectors of total degree exactly d in nvars variables, sorted.
std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, std::size_t d);

/// For every (a_1..a_4) in Supp(f) with a_4 > 0, a_1 + a_2 + a_3 > 0.
/// The last variable plays the role of a_4. PreconditionError unless f is a
/// polynomial.
bool support_property_check(const LaurentPoly& f);

}  // namespace h14
