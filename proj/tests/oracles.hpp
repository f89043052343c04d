// Independent reference computations shared by the unit and acceptance tests.
// Everything here is deliberately naive: plain enumeration, no Smith forms,
// no echelon machinery.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "h14/lattice.hpp"

namespace oracle {

using h14::ExponentVector;
using h14::IntMatrix;

inline std::vector<std::int64_t> times(const ExponentVector& beta, const IntMatrix& u) {
  std::vector<std::int64_t> out(u.cols(), 0);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) out[j] += beta[i] * u(i, j).get_si();
  return out;
}

inline bool in_cone(const ExponentVector& beta, const IntMatrix& u) {
  for (auto v : times(beta, u))
    if (v < 0) return false;
  return true;
}

// Σ_j (βU)_j; strictly positive on nonzero points of a pointed cone.
inline std::int64_t grading(const ExponentVector& beta, const IntMatrix& u) {
  std::int64_t s = 0;
  for (auto v : times(beta, u)) s += v;
  return s;
}

// All β ∈ Z^t with ‖β‖∞ ≤ bound and βU ≥ 0.
inline std::vector<ExponentVector> cone_points(const IntMatrix& u, std::int64_t bound) {
  const std::size_t t = u.rows();
  std::vector<ExponentVector> out;
  ExponentVector beta(t);
  for (std::size_t i = 0; i < t; ++i) beta[i] = -bound;
  for (;;) {
    if (in_cone(beta, u)) out.push_back(beta);
    std::size_t i = 0;
    while (i < t && beta[i] == bound) beta[i++] = -bound;
    if (i == t) break;
    ++beta[i];
  }
  return out;
}

// Is β a nonnegative integer combination of `gens`? Recursion on the grading,
// which strictly drops at each step because every generator has positive grade.
class Representability {
 public:
  Representability(const IntMatrix& u, std::vector<ExponentVector> gens) : u_(u), gens_(std::move(gens)) {}

  bool operator()(const ExponentVector& beta) {
    if (beta.is_zero()) return true;
    if (!in_cone(beta, u_)) return false;
    if (auto it = memo_.find(beta); it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens_) {
      if (grading(g, u_) <= 0) continue;
      const auto rest = beta - g;
      if (in_cone(rest, u_) && (*this)(rest)) {
        ok = true;
        break;
      }
    }
    memo_[beta] = ok;
    return ok;
  }

 private:
  const IntMatrix& u_;
  std::vector<ExponentVector> gens_;
  std::map<ExponentVector, bool> memo_;
};

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Bounded exhaustive search for β ≥ 0 with βU = target, coordinates ≤ cap.
inline bool monomial_search(const IntMatrix& u, const ExponentVector& target, std::int64_t cap) {
  const std::size_t t = u.rows();
  ExponentVector beta(t);
  for (;;) {
    if (times(beta, u) == std::vector<std::int64_t>(target.begin(), target.end())) return true;
    std::size_t i = 0;
    while (i < t && beta[i] == cap) beta[i++] = 0;
    if (i == t) return false;
    ++beta[i];
  }
}

}  // namespace oracle
