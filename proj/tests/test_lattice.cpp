#include "doctest.h"

#include <random>

#include "h14/errors.hpp"
#include "h14/lattice.hpp"

using namespace h14;

namespace {

// Cofactor expansion along the first row; independent of the Bareiss path.
mpz_class cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  mpz_class sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    sum += (c % 2 == 0 ? 1 : -1) * m(0, c) * cofactor_det(minor);
  }
  return sum;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("det on worked examples") {
  CHECK(det(IntMatrix{{-1, 1}, {1, -1}}) == 0);
  CHECK(det(IntMatrix{{-3, 1}, {1, -1}}) == 2);
  CHECK(det(IntMatrix{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}) == 4);
  CHECK(det(IntMatrix{{-1, 3, 3}, {3, -1, 3}, {3, 3, -1}}) == 80);
  CHECK_THROWS_AS(det(IntMatrix{{1, 2, 3}}), ShapeError);
}

TEST_CASE("det agrees with cofactor expansion and is multiplicative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IntMatrix a = random_matrix(rng, n, n, -4, 4);
    const IntMatrix b = random_matrix(rng, n, n, -4, 4);
    CHECK(det(a) == cofactor_det(a));
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("solve_unit_row examples") {
  auto sol = solve_unit_row(IntMatrix{{-3, 1}, {1, -1}}, 0);
  CHECK(sol.multiplier == 2);
  CHECK(sol.row == std::vector<mpz_class>{-1, -1});

  sol = solve_unit_row(IntMatrix::identity(2), 0);
  CHECK(sol.multiplier == 1);
  CHECK(sol.row == std::vector<mpz_class>{1, 0});

  CHECK_THROWS_AS(solve_unit_row(IntMatrix{{-1, 1}, {1, -1}}, 0), SingularMatrixError);
}

TEST_CASE("solve_unit_row returns the least multiplier") {
  std::mt19937_64 rng(11);
  int solved = 0;
  while (solved < 100) {
    const std::size_t n = 2 + solved % 3;
    const IntMatrix t = random_matrix(rng, n, n, -5, 5);
    if (det(t) == 0) continue;
    ++solved;
    const std::size_t i = solved % n;
    const auto sol = solve_unit_row(t, i);
    const auto prod = row_times(sol.row, t);
    for (std::size_t j = 0; j < n; ++j) CHECK(prod[j] == (j == i ? sol.multiplier : mpz_class(0)));
    // Brute force: no smaller m' makes m'·(s/m) integral.
    for (mpz_class m = 1; m < sol.multiplier; ++m) {
      bool integral = true;
      for (const auto& s : sol.row) integral = integral && (m * s) % sol.multiplier == 0;
      CHECK_FALSE(integral);
    }
  }
}

TEST_CASE("smith form is a unimodular diagonalization") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix a = random_matrix(rng, r, c, -6, 6);
    const SmithForm s = smith_form(a);
    const IntMatrix d = s.p * a * s.q;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const mpz_class want = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : mpz_class(0);
        CHECK(d(i, j) == want);
      }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    CHECK(s.q * s.q_inverse == IntMatrix::identity(c));
    CHECK(abs(det(s.p)) == 1);
    CHECK(s.diagonal.size() == rank(a));
  }
}

TEST_CASE("coset decomposition examples") {
  const auto h = coset_decomposition({{1, 1}, {1, -1}}, 2);
  CHECK(h.contains({2, 0}));
  CHECK_FALSE(h.contains({1, 0}));
  CHECK(h.index() == 2);

  const auto full = coset_decomposition({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  for (const ExponentVector v : {ExponentVector{3, -2, 7}, ExponentVector{0, 0, 0}, ExponentVector{-1, 5, 2}}) {
    CHECK(full.contains(v));
    CHECK(full.representative(v).is_zero());
  }

  // Rows of T for δ ≡ 1, n = 4, extended by 0, plus e_4.
  const auto k = coset_decomposition({{-1, 1, 1, 0}, {1, -1, 1, 0}, {1, 1, -1, 0}, {0, 0, 0, 1}}, 4);
  CHECK(k.contains({-1, 1, 1, 0}));
  CHECK(k.index() == 4);

  const auto trivial = coset_decomposition({}, 2);
  CHECK(trivial.contains({0, 0}));
  CHECK_FALSE(trivial.contains({0, 1}));
  CHECK(trivial.representative({4, -1}) == ExponentVector{4, -1});
}

TEST_CASE("coset representatives are canonical") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<ExponentVector> gens;
    for (std::size_t g = 0; g < 1 + trial % 4; ++g) {
      ExponentVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = e(rng);
      gens.push_back(v);
    }
    const auto cd = coset_decomposition(gens, n);
    for (int s = 0; s < 20; ++s) {
      ExponentVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = e(rng);
      const auto rep = cd.representative(v);
      CHECK(cd.representative(rep) == rep);
      CHECK(cd.contains(v - rep));
      for (const auto& g : gens) {
        CHECK(cd.representative(v + g) == rep);
        CHECK(cd.representative(g).is_zero());
      }
    }
  }
}

TEST_CASE("left kernel and rank") {
  CHECK(rank(IntMatrix{{1, 1}, {1, -1}}) == 2);
  CHECK(rank(IntMatrix{{1, 0}, {2, 0}}) == 1);
  const auto k = left_kernel(IntMatrix{{1, 0}, {2, 0}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<mpz_class>{2, -1});
}
