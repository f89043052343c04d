#include "h14/lattice.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "h14/errors.hpp"

namespace h14 {

// ---------------------------------------------------------------- ExponentVector

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector v(n);
  v.e_.at(i) = 1;
  return v;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t x) { return x == 0; });
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t ExponentVector::total() const {
  std::int64_t s = 0;
  for (auto x : e_) {
    if (__builtin_add_overflow(s, x, &s)) throw UsageError("exponent overflow");
  }
  return s;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.size() != size()) throw ShapeError("exponent vectors of different length");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (__builtin_add_overflow(e_[i], o.e_[i], &e_[i])) throw UsageError("exponent overflow");
  }
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.size() != size()) throw ShapeError("exponent vectors of different length");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (__builtin_sub_overflow(e_[i], o.e_[i], &e_[i])) throw UsageError("exponent overflow");
  }
  return *this;
}

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  ExponentVector out(*this);
  for (auto& x : out.e_) {
    if (__builtin_mul_overflow(x, k, &x)) throw UsageError("exponent overflow");
  }
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) os << ',';
    os << v[i];
  }
  return os << ')';
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw UsageError("integer " + z.get_str() + " does not fit an exponent");
  return z.get_si();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ExponentVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != 0) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) os << ',';
      os << m(r, c).get_str();
    }
    os << ']';
  }
  return os << ']';
}

std::vector<mpz_class> row_times(std::span<const mpz_class> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw ShapeError("vector/matrix shape mismatch");
  std::vector<mpz_class> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

std::vector<mpz_class> row_times(const ExponentVector& v, const IntMatrix& m) {
  std::vector<mpz_class> big;
  big.reserve(v.size());
  for (auto x : v) big.emplace_back(static_cast<long>(x));
  return row_times(big, m);
}

// ---------------------------------------------------------------- determinants, rank

mpz_class det(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && sgn(a[sel][col]) == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const mpq_class inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<mpz_class> primitive_integer(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    out.emplace_back(x.get_num() * (l / x.get_den()));
    g = gcd(g, out.back());
  }
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  auto lead = std::find_if(out.begin(), out.end(), [](const mpz_class& x) { return x != 0; });
  if (lead != out.end() && *lead < 0)
    for (auto& x : out) x = -x;
  return out;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  auto a = to_rational(m);
  return rref(a, m.cols()).size();
}

std::vector<std::vector<mpz_class>> left_kernel(const IntMatrix& m) {
  // {β : β·m = 0} is the right kernel of mᵀ.
  const IntMatrix t = m.transposed();
  auto a = to_rational(t);
  const auto pivots = rref(a, t.cols());
  std::vector<bool> is_pivot(t.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(t.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::optional<std::vector<mpq_class>> solve_left(const IntMatrix& m, std::span<const mpz_class> x) {
  if (x.size() != m.cols()) throw ShapeError("right-hand side has the wrong length");
  // λ·m = x  ⇔  mᵀ·λᵀ = xᵀ.
  const std::size_t unknowns = m.rows();
  RationalMatrix a(m.cols(), std::vector<mpq_class>(unknowns + 1));
  for (std::size_t r = 0; r < m.cols(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) a[r][c] = m(c, r);
    a[r][unknowns] = x[r];
  }
  const auto pivots = rref(a, unknowns + 1);
  std::vector<mpq_class> lambda(unknowns);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == unknowns) return std::nullopt;
    lambda[pivots[r]] = a[r][unknowns];
  }
  return lambda;
}

UnitRowSolution solve_unit_row(const IntMatrix& t, std::size_t i) {
  if (!t.is_square()) throw ShapeError("solve_unit_row needs a square matrix");
  const std::size_t n = t.rows();
  if (i >= n) throw UsageError("unit index out of range");
  if (det(t) == 0) throw SingularMatrixError("matrix is singular; no row solves f·T = e_i");
  // f·t = e_i  ⇔  tᵀ·fᵀ = e_iᵀ; solve on the augmented system.
  RationalMatrix a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = t(c, r);
    a[r][n] = r == i ? 1 : 0;
  }
  rref(a, n);
  mpz_class m = 1;
  for (std::size_t r = 0; r < n; ++r) m = lcm(m, a[r][n].get_den());
  UnitRowSolution sol{m, {}};
  for (std::size_t r = 0; r < n; ++r) sol.row.emplace_back(a[r][n].get_num() * (m / a[r][n].get_den()));
  return sol;
}

// ---------------------------------------------------------------- Smith form

namespace {

// new r1 = a·r1 + b·r2, new r2 = c·r1 + d·r2
void combine_rows(IntMatrix& m, std::size_t r1, std::size_t r2, const mpz_class& a, const mpz_class& b,
                  const mpz_class& c, const mpz_class& d) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_class x = m(r1, j), y = m(r2, j);
    m(r1, j) = a * x + b * y;
    m(r2, j) = c * x + d * y;
  }
}

void combine_cols(IntMatrix& m, std::size_t c1, std::size_t c2, const mpz_class& a, const mpz_class& b,
                  const mpz_class& c, const mpz_class& d) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class x = m(i, c1), y = m(i, c2);
    m(i, c1) = a * x + b * y;
    m(i, c2) = c * x + d * y;
  }
}

// Bezout coefficients with x·a + y·b = g. When a already divides b the step
// is a plain subtraction, so the pivot row is never swapped out for another
// row (the source of cycling in the elimination loop).
void bezout(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& x, mpz_class& y) {
  if (b % a == 0) {
    g = a;
    x = 1;
    y = 0;
    return;
  }
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

struct SmithState {
  IntMatrix d, p, q, qinv;

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    combine_rows(d, r1, r2, 0, 1, 1, 0);
    combine_rows(p, r1, r2, 0, 1, 1, 0);
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    combine_cols(d, c1, c2, 0, 1, 1, 0);
    combine_cols(q, c1, c2, 0, 1, 1, 0);
    combine_rows(qinv, c1, c2, 0, 1, 1, 0);
  }
  // Zero d(i, t) against the pivot d(t, t) with a unimodular 2×2 row step.
  void clear_row_entry(std::size_t t, std::size_t i) {
    mpz_class a = d(t, t), b = d(i, t), g, x, y;
    bezout(a, b, g, x, y);
    mpz_class ag = a / g, bg = b / g;
    combine_rows(d, t, i, x, y, -bg, ag);
    combine_rows(p, t, i, x, y, -bg, ag);
  }
  void clear_col_entry(std::size_t t, std::size_t j) {
    mpz_class a = d(t, t), b = d(t, j), g, x, y;
    bezout(a, b, g, x, y);
    mpz_class ag = a / g, bg = b / g;
    combine_cols(d, t, j, x, y, -bg, ag);
    combine_cols(q, t, j, x, y, -bg, ag);
    combine_rows(qinv, t, j, ag, bg, -y, x);
  }
};

}  // namespace

SmithForm smith_form(const IntMatrix& a) {
  const std::size_t k = a.rows(), n = a.cols();
  SmithState s{a, IntMatrix::identity(k), IntMatrix::identity(n), IntMatrix::identity(n)};
  std::vector<mpz_class> diagonal;
  for (std::size_t t = 0; t < std::min(k, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t br = t, bc = t;
    for (std::size_t i = t; i < k; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (s.d(i, j) == 0) continue;
        if (!found || abs(s.d(i, j)) < abs(s.d(br, bc))) {
          br = i;
          bc = j;
          found = true;
        }
      }
    if (!found) break;
    s.swap_rows(t, br);
    s.swap_cols(t, bc);
    for (;;) {
      for (std::size_t i = t + 1; i < k; ++i)
        if (s.d(i, t) != 0) s.clear_row_entry(t, i);
      for (std::size_t j = t + 1; j < n; ++j)
        if (s.d(t, j) != 0) s.clear_col_entry(t, j);
      bool clean = true;
      for (std::size_t i = t + 1; i < k && clean; ++i)
        if (s.d(i, t) != 0) clean = false;
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and repeat.
      std::size_t bad = k;
      for (std::size_t i = t + 1; i < k && bad == k; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == k) break;
      combine_rows(s.d, t, bad, 1, 1, 0, 1);
      combine_rows(s.p, t, bad, 1, 1, 0, 1);
    }
    if (s.d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s.d(t, j) = -s.d(t, j);
      for (std::size_t j = 0; j < k; ++j) s.p(t, j) = -s.p(t, j);
    }
    diagonal.push_back(s.d(t, t));
  }
  return SmithForm{std::move(s.p), std::move(s.q), std::move(s.qinv), std::move(diagonal)};
}

// ---------------------------------------------------------------- cosets

CosetDecomposition::CosetDecomposition(const std::vector<ExponentVector>& generators, std::size_t n)
    : n_(n), gens_(generators) {
  for (const auto& g : gens_)
    if (g.size() != n) throw ShapeError("subgroup generator " + g.to_string() + " has wrong length");
  smith_ = smith_form(IntMatrix::from_rows(gens_, n));
}

std::vector<mpz_class> CosetDecomposition::to_smith_coords(const ExponentVector& v) const {
  if (v.size() != n_) throw ShapeError("vector " + v.to_string() + " has wrong length");
  return row_times(v, smith_.q);
}

bool CosetDecomposition::contains(const ExponentVector& v) const {
  const auto w = to_smith_coords(v);
  const std::size_t r = smith_.diagonal.size();
  for (std::size_t j = 0; j < n_; ++j) {
    if (j < r ? w[j] % smith_.diagonal[j] != 0 : w[j] != 0) return false;
  }
  return true;
}

ExponentVector CosetDecomposition::representative(const ExponentVector& v) const {
  auto w = to_smith_coords(v);
  for (std::size_t j = 0; j < smith_.diagonal.size(); ++j) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), w[j].get_mpz_t(), smith_.diagonal[j].get_mpz_t());
    w[j] = r;
  }
  const auto back = row_times(w, smith_.q_inverse);
  ExponentVector out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = to_int64(back[j]);
  return out;
}

mpz_class CosetDecomposition::index() const {
  if (smith_.diagonal.size() != n_) return 0;
  mpz_class prod = 1;
  for (const auto& d : smith_.diagonal) prod *= d;
  return prod;
}

CosetDecomposition coset_decomposition(const std::vector<ExponentVector>& generators, std::size_t n) {
  return CosetDecomposition(generators, n);
}

}  // namespace h14
