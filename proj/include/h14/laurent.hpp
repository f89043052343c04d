#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "h14/lattice.hpp"
#include "h14/scalar.hpp"

namespace h14 {

/// Sparse Laurent polynomial in n variables over a fixed Field.
///
/// Terms are kept in a map keyed by exponent vector (lexicographic order) and
/// never hold a zero coefficient, so the key set is exactly the support.
/// Operands of every binary operation must share n and the field.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Scalar>;

  LaurentPoly(std::size_t n, Field field) : n_(n), field_(field) {}

  static LaurentPoly constant(std::size_t n, const Scalar& c);
  static LaurentPoly constant(std::size_t n, const Field& field, long c);
  static LaurentPoly monomial(ExponentVector e, const Scalar& c);
  static LaurentPoly monomial(ExponentVector e, const Field& field, long c = 1);
  static LaurentPoly variable(std::size_t n, std::size_t i, const Field& field);

  std::size_t nvars() const { return n_; }
  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  Scalar coefficient(const ExponentVector& e) const;
  /// Lexicographically largest term; UsageError on the zero polynomial.
  const Terms::value_type& leading_term() const;

  /// Adds c·X^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Scalar& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// f^k for k ≥ 0; monomials also accept k < 0.
  LaurentPoly pow(std::int64_t k) const;

  /// Reinterprets integer/rational coefficients in another field.
  LaurentPoly to_field(const Field& target) const;

 private:
  void check_compatible(const LaurentPoly& o) const;

  std::size_t n_;
  Field field_;
  Terms terms_;
};

std::set<ExponentVector> support(const LaurentPoly& f);

/// True iff every support vector is componentwise nonnegative.
bool is_polynomial(const LaurentPoly& f);

/// Image of f under the monomial map Y_j ↦ images[j]. Each image must be a
/// single term; f may carry negative exponents since monomials are units.
LaurentPoly substitute(const LaurentPoly& f, std::span<const LaurentPoly> images);

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t i);

/// Splits f into weighted-homogeneous parts keyed by weighted degree.
std::map<std::int64_t, LaurentPoly> grade_by(const LaurentPoly& f, std::span<const std::int64_t> weights);

/// Weighted degree under rational weights.
mpq_class weighted_degree(const ExponentVector& e, std::span<const mpq_class> weights);

/// True iff every term of f has weighted degree `degree`.
bool is_homogeneous(const LaurentPoly& f, std::span<const mpq_class> weights, const mpq_class& degree);

/// Canonical text form: terms `coef * X1^e1 ... Xn^en` in descending
/// lexicographic order joined by " + "; "0" for the zero polynomial.
std::string to_text(const LaurentPoly& f);

/// Inverse of to_text. Terms may appear in any order; ValidationError on
/// malformed input.
LaurentPoly parse_text(std::string_view text, std::size_t n, const Field& field);

/// Human-oriented rendering, e.g. "X4 - X1^-1*X2*X3". `names` defaults to X1..Xn.
std::string to_pretty(const LaurentPoly& f, std::span<const std::string> names = {});

}  // namespace h14
