#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "h14/laurent.hpp"

namespace h14 {

/// Incremental row-echelon form over sparse vectors. Rows are LaurentPolys
/// whose terms are the coordinates; the pivot of a row is its
/// lexicographically largest exponent. Stored rows are monic at the pivot.
class Echelon {
 public:
  Echelon(std::size_t n, Field field) : n_(n), field_(field) {}

  /// Reduces v against the stored rows (every pivot coordinate eliminated).
  LaurentPoly reduce(LaurentPoly v) const;

  /// Adds v to the span; returns false if it was already dependent.
  bool insert(const LaurentPoly& v);

  bool contains(const LaurentPoly& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }

  /// Reduced row-echelon basis, sorted by descending pivot.
  std::vector<LaurentPoly> reduced_basis() const;

  /// Stored rows keyed by pivot.
  const std::map<ExponentVector, LaurentPoly>& rows() const { return rows_; }

 private:
  std::size_t n_;
  Field field_;
  std::map<ExponentVector, LaurentPoly> rows_;
};

/// Canonical basis (reduced row-echelon form, lexicographic pivots) of the span.
std::vector<LaurentPoly> canonical_basis(const std::vector<LaurentPoly>& vectors, std::size_t n,
                                         const Field& field);

/// Basis of span(u) ∩ span(w), canonicalized. Zassenhaus: rows (u|u) and
/// (w|0) are echelonized with the left block leading; rows whose pivot falls
/// in the right block carry the intersection.
std::vector<LaurentPoly> intersect_spans(const std::vector<LaurentPoly>& u, const std::vector<LaurentPoly>& w,
                                         std::size_t n, const Field& field);

/// Given pairs (constraint_i, payload_i), returns a basis of
/// { Σ c_i payload_i : Σ c_i constraint_i = 0 }, canonicalized.
std::vector<LaurentPoly> constrained_span(const std::vector<LaurentPoly>& constraints,
                                          const std::vector<LaurentPoly>& payloads, std::size_t constraint_n,
                                          std::size_t payload_n, const Field& field);

}  // namespace h14
