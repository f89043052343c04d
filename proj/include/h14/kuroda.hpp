#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "h14/laurent.hpp"
#include "h14/lattice.hpp"

namespace h14 {

/// Entry magnitudes δ_ij (signs are implied by position).
///   n = 3: a 2×2 matrix; π1 = X1^δ21 X2^-δ22 − X1^-δ11 X2^δ12,
///          π2 = X3^γ − X1^-δ11 X2^δ12, π3 = 2 X1^(δ21−δ11) X2^(δ12−δ22) − X1^-2δ11 X2^2δ12.
///   n ≥ 4: an (n−1)×(n−1) or (n−1)×n matrix; π_i = X_n^γ − M_i X_n^δ_in with
///          M_i = X_1^δ_i1 ⋯ X_i^-δ_ii ⋯ X_{n−1}^δ_i(n−1). A missing last column means δ_in = 0.
using DeltaMatrix = std::vector<std::vector<std::int64_t>>;

struct KurodaInstance {
  std::size_t n = 0;
  std::int64_t gamma = 1;
  DeltaMatrix delta;        ///< normalized: 2×2 for n = 3, (n−1)×n otherwise
  Field field = Field::rationals();
  IntMatrix t;              ///< signed (n−1)×(n−1) matrix, negative diagonal
  std::vector<mpq_class> xi;  ///< n ≥ 4 only
  std::vector<LaurentPoly> monomials;  ///< M_1..M_{n−1} (no X_n part)
  /// Images of the change of variables. n ≥ 4: Y_i = M_i X_n^δ_in, Y_n = X_n^γ.
  /// n = 3: (X1^-δ11 X2^δ12, X1^δ21 X2^-δ22, X3^γ).
  std::vector<LaurentPoly> y_images;
  std::vector<LaurentPoly> pis;
};

/// ValidationError naming the offending entry when γ < 1, a δ_ij (j < n) is
/// < 1 or a δ_in is < 0, or the shape is wrong.
KurodaInstance build_instance(std::size_t n, std::int64_t gamma, const DeltaMatrix& delta,
                              const Field& field = Field::rationals());

struct ConditionValue {
  mpq_class value;
  bool holds;
};

/// Σ δ_ii / (δ_ii + min_{k≠i} δ_ki) and whether it is < 1. UsageError unless n = 4.
ConditionValue check_star(const KurodaInstance& inst);

/// δ11/(δ11+δ21) + δ22/(δ22+δ12) and whether it is < 1/2. UsageError unless n = 3.
ConditionValue check_starstar(const KurodaInstance& inst);

struct ScanReport {
  std::size_t n = 0;
  std::int64_t bound = 0;
  std::size_t instances = 0;
  std::size_t condition_holds = 0;
  std::size_t singular = 0;
  std::vector<DeltaMatrix> violations;          ///< condition holds but det T = 0
  std::vector<DeltaMatrix> converse_witnesses;  ///< det T ≠ 0 but condition fails
};

/// Exhaustive scan of every δ with entries in [1, bound] (n = 3: 2×2; n = 4:
/// 3×3 with δ_i4 = 0), checking condition ⟹ det T ≠ 0. Work is split across
/// `jobs` threads; the report lists instances in enumeration order.
ScanReport implication_scan(std::size_t n, std::int64_t bound, unsigned jobs = 1);

struct LemmaP {
  std::int64_t p;
  std::array<std::int64_t, 3> parts;
};

/// Least p with p(1 − Σξ) ≥ 3, p_i = max(1, ⌈pξ_i⌉) for i = 1, 2 and the
/// remainder in p_3. ConditionError if Σξ ≥ 1 or some ξ_i ∉ (0, 1).
LemmaP lemma31_find_p(std::span<const mpq_class> xi);

struct Certificate {
  LaurentPoly poly;
  bool holds;  ///< build_f0: is_polynomial; build_g: X2, X3 exponents ≥ 0
};

/// f0 = (Y3−Y2)^p1 (Y3−Y1)^p2 (Y2−Y1)^p3 in the X variables (n = 4).
Certificate build_f0(const KurodaInstance& inst, std::int64_t p1, std::int64_t p2, std::int64_t p3);

/// G = (Y3−Y2)^s (Y3−Y1)^pbar2 (Y2−Y1)^pbar3 (Y4−Y1)^e in the X variables (n = 4).
Certificate build_g(const KurodaInstance& inst, std::int64_t s, std::int64_t pbar2, std::int64_t pbar3,
                    std::int64_t e);

/// Splits d = pbar2 + pbar3 with pbar2 > pbar·ξ2 and pbar3 > pbar·ξ3 (strict),
/// taking pbar2 = ⌊pbar·ξ2⌋ + 1. ConditionError if infeasible.
std::array<std::int64_t, 2> split_for_g(std::span<const mpq_class> xi, std::int64_t pbar, std::int64_t d);

/// The three identities behind the integrality of X3^γ over K[π] (n = 3):
///   π2 − π1 + X1^δ21 X2^-δ22 = X3^γ,
///   π1² + π3 = X1^2δ21 X2^-2δ22,
///   X3^2γ + 2(π1−π2) X3^γ + (π1−π2)² − (π1² + π3) = 0.
bool verify_t214(const KurodaInstance& inst);

struct UnitWitness {
  std::size_t index;
  UnitRowSolution solution;
  bool verified;  ///< Π M_j^{s_j} = X_i^m checked by substitution
};

/// For each i, the least m_i and integer row s with s·T = m_i e_i, and the
/// monomial identity it implies. SingularMatrixError if det T = 0.
std::vector<UnitWitness> unit_witnesses(const KurodaInstance& inst);

/// π-degree monomial Y-polynomials g_i = Y_n − Y_i (n ≥ 4) over n Y-variables.
std::vector<LaurentPoly> pi_in_y(const KurodaInstance& inst);

}  // namespace h14
