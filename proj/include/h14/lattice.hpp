#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace h14 {

/// Integer exponent tuple of a Laurent monomial. Entries may be negative.
/// Ordered lexicographically; that order is the canonical term order.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> e) : e_(std::move(e)) {}
  ExponentVector(std::initializer_list<std::int64_t> e) : e_(e) {}

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::int64_t> entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_zero() const;
  bool is_nonnegative() const;
  std::int64_t total() const;

  /// Componentwise sum/difference/scaling; throw ShapeError on length mismatch
  /// and UsageError on 64-bit overflow.
  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  ExponentVector operator-() const;
  ExponentVector scaled(std::int64_t k) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> e_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

/// Dense integer matrix, arbitrary precision, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<ExponentVector>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix transposed() const;
  std::vector<mpz_class> row(std::size_t r) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Row vector times matrix: (v·m)_j = Σ_i v_i m_ij.
std::vector<mpz_class> row_times(std::span<const mpz_class> v, const IntMatrix& m);
std::vector<mpz_class> row_times(const ExponentVector& v, const IntMatrix& m);

/// Exact determinant (Bareiss fraction-free elimination). ShapeError if not square.
mpz_class det(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Integer basis of the left kernel {β : β·m = 0}, each vector primitive with
/// a positive leading nonzero entry.
std::vector<std::vector<mpz_class>> left_kernel(const IntMatrix& m);

/// Some rational λ with λ·m = x, or nullopt if x is outside the row space.
/// Unique when m has full row rank.
std::optional<std::vector<mpq_class>> solve_left(const IntMatrix& m, std::span<const mpz_class> x);

struct UnitRowSolution {
  mpz_class multiplier;          ///< least m > 0
  std::vector<mpz_class> row;    ///< s with s·t = m·e_i
};

/// Solves s·t = m·e_i over the integers with the least positive m.
/// SingularMatrixError if det(t) = 0; ShapeError if t is not square.
UnitRowSolution solve_unit_row(const IntMatrix& t, std::size_t i);

/// Smith form P·A·Q = D of a k×n integer matrix; P, Q unimodular.
struct SmithForm {
  IntMatrix p;
  IntMatrix q;
  IntMatrix q_inverse;
  std::vector<mpz_class> diagonal;  ///< nonzero invariant factors d_1 | d_2 | ... (length = rank)
};

SmithForm smith_form(const IntMatrix& a);

/// The subgroup H ⊂ Z^n generated by a list of vectors, with canonical coset
/// representatives: w = v·Q is reduced modulo the invariant factors on the
/// first rank coordinates and mapped back through Q⁻¹.
class CosetDecomposition {
 public:
  CosetDecomposition(const std::vector<ExponentVector>& generators, std::size_t n);

  std::size_t ambient_rank() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  const SmithForm& smith() const { return smith_; }

  bool contains(const ExponentVector& v) const;
  ExponentVector representative(const ExponentVector& v) const;

  /// Index [Z^n : H] when finite (rank n), zero otherwise.
  mpz_class index() const;

 private:
  std::vector<mpz_class> to_smith_coords(const ExponentVector& v) const;

  std::size_t n_;
  std::vector<ExponentVector> gens_;
  SmithForm smith_;
};

CosetDecomposition coset_decomposition(const std::vector<ExponentVector>& generators, std::size_t n);

/// Narrowing helper for exponents that came out of big-integer arithmetic.
std::int64_t to_int64(const mpz_class& z);

}  // namespace h14
