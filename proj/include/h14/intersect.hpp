#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "h14/kuroda.hpp"
#include "h14/laurent.hpp"

namespace h14 {

struct DegreeSlice {
  std::int64_t degree = 0;
  std::size_t dim_a = 0;  ///< dimension of the first algebra in this degree
  std::size_t dim_b = 0;  ///< dimension of the second algebra in this degree
  std::vector<LaurentPoly> basis;  ///< canonical basis of the intersection
  std::size_t new_generators = 0;
};

/// Per-degree intersection of two graded algebras, up to a degree bound.
struct GradedIntersectionReport {
  Field field = Field::rationals();
  std::size_t nvars = 0;
  std::vector<mpq_class> weights;  ///< every basis element is homogeneous under these
  std::string grading;
  std::vector<DegreeSlice> slices;  ///< degrees 0..bound
  std::vector<std::pair<std::int64_t, std::size_t>> generator_degrees;

  std::int64_t bound() const { return slices.empty() ? -1 : slices.back().degree; }
  std::size_t dim(std::int64_t degree) const;
  /// f lies in the computed intersection (f homogeneous, degree within bound).
  bool contains(const LaurentPoly& f) const;
};

/// For each degree d ≤ dmax: span of all products of generators of weight d
/// on each side, intersected exactly. Generators must be weighted-homogeneous
/// of positive degree (GradingError naming the generator otherwise).
GradedIntersectionReport graded_intersection(const std::vector<LaurentPoly>& gens_a,
                                             const std::vector<LaurentPoly>& gens_b,
                                             std::span<const std::int64_t> weights, std::int64_t dmax);

/// Bases of {f ∈ K[π] : π-degree ≤ bound, f ∈ K[X]} for an n ≥ 4 instance.
/// Works in Y-coordinates: a π-monomial combination is in K[X] iff its
/// coefficients on Y-monomials with a negative X-exponent cancel.
/// PreconditionError if det T = 0.
GradedIntersectionReport kuroda_intersection_basis(const KurodaInstance& inst, std::int64_t bound,
                                                   unsigned jobs = 1);

/// For each degree, how many basis elements are not polynomial combinations
/// of lower-degree intersection elements. Only pairs with a positive count in
/// degrees ≥ 1 are returned. Exact up to the report's own bound.
std::vector<std::pair<std::int64_t, std::size_t>> minimal_generator_degrees(const GradedIntersectionReport& report,
                                                                             unsigned jobs = 1);

/// Runs minimal_generator_degrees and stores the counts in the report.
void annotate_generators(GradedIntersectionReport& report, unsigned jobs = 1);

struct CosetCheck {
  bool ok = false;
  std::size_t checked = 0;   ///< vectors in the box
  std::size_t distinct = 0;  ///< distinct representatives seen
  mpz_class index;           ///< [Z^n : H], zero if infinite
};

/// Every v ∈ [−B, B]^n splits uniquely as rep(v) + h with h ∈ H.
CosetCheck freeness_coset_check(const std::vector<ExponentVector>& generators, std::size_t n, std::int64_t box);

/// H = <(rows of T, 0), e_n> for the instance. PreconditionError if det T = 0.
CosetCheck freeness_coset_check(const KurodaInstance& inst, std::int64_t box);

/// Does some degree 1..dmax slice of the algebra generated by `gens` contain
/// a single monomial?
bool spans_contain_monomial(const std::vector<LaurentPoly>& gens, std::span<const std::int64_t> weights,
                            std::int64_t dmax);

/// No nonconstant monomial lies in K[π] up to π-degree dmax.
bool no_monomial_units_check(const KurodaInstance& inst, std::int64_t dmax);

/// The two algebras of the four-variable intersection with variables
/// (a, b, c, x): A = K[ab, bc, ca, x], B = K[x − a², x − b², x − c²].
struct TestAlgebras {
  std::vector<LaurentPoly> a;
  std::vector<LaurentPoly> b;
  std::vector<std::int64_t> weights;
  std::vector<std::string> names;
};
TestAlgebras abc_algebras(const Field& field);

/// (bc)² − (ac)² − (ab)² + x² in the (a, b, c, x) variables.
LaurentPoly characteristic_two_witness(const Field& field);

}  // namespace h14
