#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "h14/errors.hpp"
#include "h14/lattice.hpp"

namespace h14 {

/// Monomials M_1..M_t in n variables, given by their exponent rows.
/// These rows form the t×n matrix U.
class SubalgebraGens {
 public:
  /// ShapeError on a wrong-length row, ValidationError on duplicates.
  SubalgebraGens(std::size_t n, std::vector<ExponentVector> monomials);

  std::size_t ambient() const { return n_; }
  std::size_t count() const { return monomials_.size(); }
  const std::vector<ExponentVector>& monomials() const { return monomials_; }
  IntMatrix matrix() const { return IntMatrix::from_rows(monomials_, n_); }

 private:
  std::size_t n_;
  std::vector<ExponentVector> monomials_;
};

/// Minimal generating set of S = {β ∈ Z^t : βU ≥ 0}, sorted lexicographically.
struct HilbertBasis {
  IntMatrix u;
  std::vector<ExponentVector> elements;
};

/// Raised by hilbert_basis when {β : βU ≥ 0} contains a line.
class ConeLinealityError : public LinealityError {
 public:
  explicit ConeLinealityError(ExponentVector direction);
  const ExponentVector& direction() const { return direction_; }

 private:
  ExponentVector direction_;
};

/// True iff every coordinate of βU is ≥ 0. ShapeError if β has the wrong length.
bool cone_membership(const IntMatrix& u, const ExponentVector& beta);

/// Primitive extreme rays of the pointed cone {β ∈ R^t : βU ≥ 0}, sorted.
std::vector<ExponentVector> extreme_rays(const IntMatrix& u);

/// Hilbert basis by extreme rays → lattice points of each simplicial
/// parallelepiped → irreducibility sieve. `jobs` splits the parallelepiped
/// enumeration across threads; the output does not depend on it.
HilbertBasis hilbert_basis(const IntMatrix& u, unsigned jobs = 1);

struct MembershipResult {
  std::optional<ExponentVector> witness;  ///< β ≥ 0 with βU = target
  std::int64_t bound;                     ///< per-coordinate search bound used
  /// True when the bound is provably sufficient (all generators nonnegative
  /// and nonzero, so a total-degree argument caps every β_i).
  bool exhaustive;
};

/// Searches β ∈ [0, bound]^t with βU = target, where bound is
/// Σ|target_j| · max|U_ij|.
MembershipResult monomial_membership(const SubalgebraGens& gens, const ExponentVector& target);

/// a^i b^j c^k ∈ K[ab, bc, ca]  ⇔  i+j+k even and the triangle inequalities hold.
bool triangle_criterion(std::int64_t i, std::int64_t j, std::int64_t k);

/// True iff rank U = t over Q.
bool alg_independence(const SubalgebraGens& gens);

/// Exponents X^{βU} for β in the Hilbert basis of U: monomial generators of
/// K(M_1..M_t) ∩ K[X]. IndependenceError if rank U < t.
std::vector<ExponentVector> intersection_generators(const SubalgebraGens& gens, unsigned jobs = 1);

}  // namespace h14
