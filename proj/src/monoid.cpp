#include "h14/monoid.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace h14 {

SubalgebraGens::SubalgebraGens(std::size_t n, std::vector<ExponentVector> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  std::set<ExponentVector> seen;
  for (const auto& m : monomials_) {
    if (m.size() != n_) throw ShapeError("monomial " + m.to_string() + " is not over " + std::to_string(n_) + " variables");
    if (!seen.insert(m).second) throw ValidationError("duplicate generator " + m.to_string());
  }
}

ConeLinealityError::ConeLinealityError(ExponentVector direction)
    : LinealityError("cone {b : bU >= 0} is not pointed; it contains the line through " + direction.to_string()),
      direction_(std::move(direction)) {}

bool cone_membership(const IntMatrix& u, const ExponentVector& beta) {
  if (beta.size() != u.rows()) throw ShapeError("beta has length " + std::to_string(beta.size()) + ", U has " + std::to_string(u.rows()) + " rows");
  const auto prod = row_times(beta, u);
  return std::all_of(prod.begin(), prod.end(), [](const mpz_class& x) { return x >= 0; });
}

namespace {

ExponentVector to_exponents(const std::vector<mpz_class>& v) {
  ExponentVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(v[i]);
  return out;
}

void require_pointed(const IntMatrix& u) {
  const auto kernel = left_kernel(u);
  if (!kernel.empty()) throw ConeLinealityError(to_exponents(kernel.front()));
}

// Positive on S \ {0} for a pointed cone: the coordinate sum of βU.
mpz_class grading(const IntMatrix& u, const ExponentVector& beta) {
  mpz_class s = 0;
  for (const auto& x : row_times(beta, u)) s += x;
  return s;
}

IntMatrix column_subset(const IntMatrix& u, const std::vector<std::size_t>& cols) {
  IntMatrix out(u.rows(), cols.size());
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = u(r, cols[c]);
  return out;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Lattice points of the half-open parallelepiped spanned by linearly
// independent rays, within the saturated lattice of their span.
std::vector<ExponentVector> parallelepiped_points(const std::vector<ExponentVector>& rays, std::size_t t) {
  const IntMatrix r = IntMatrix::from_rows(rays, t);
  const SmithForm snf = smith_form(r);
  const std::size_t k = snf.diagonal.size();
  std::vector<ExponentVector> out;
  std::vector<mpz_class> w(t);
  // Cosets of <rays> inside span ∩ Z^t: w = (c_1..c_k, 0..0) with 0 ≤ c_i < d_i.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == k) {
      const auto x = row_times(w, snf.q_inverse);
      const auto lambda = solve_left(r, x);
      std::vector<mpz_class> y = x;
      for (std::size_t j = 0; j < k; ++j) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), (*lambda)[j].get_num_mpz_t(), (*lambda)[j].get_den_mpz_t());
        for (std::size_t c = 0; c < t; ++c) y[c] -= fl * r(j, c);
      }
      out.push_back(to_exponents(y));
      return;
    }
    for (mpz_class c = 0; c < snf.diagonal[i]; ++c) {
      w[i] = c;
      walk(i + 1);
    }
    w[i] = 0;
  };
  walk(0);
  return out;
}

}  // namespace

std::vector<ExponentVector> extreme_rays(const IntMatrix& u) {
  require_pointed(u);
  const std::size_t t = u.rows(), n = u.cols();
  std::set<ExponentVector> rays;
  if (t == 0) return {};
  for_each_subset(n, t - 1, [&](const std::vector<std::size_t>& cols) {
    const IntMatrix sub = column_subset(u, cols);
    const auto kernel = left_kernel(sub);
    if (kernel.size() != 1) return;
    ExponentVector dir = to_exponents(kernel.front());
    if (cone_membership(u, dir)) {
      rays.insert(dir);
    } else if (cone_membership(u, -dir)) {
      rays.insert(-dir);
    }
  });
  return {rays.begin(), rays.end()};
}

HilbertBasis hilbert_basis(const IntMatrix& u, unsigned jobs) {
  const std::vector<ExponentVector> rays = extreme_rays(u);
  const std::size_t t = u.rows();
  HilbertBasis hb{u, {}};
  if (rays.empty()) return hb;
  const std::size_t dim = rank(IntMatrix::from_rows(rays, t));

  std::vector<std::vector<std::size_t>> simplices;
  for_each_subset(rays.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<ExponentVector> sub;
    for (auto i : idx) sub.push_back(rays[i]);
    if (rank(IntMatrix::from_rows(sub, t)) == dim) simplices.push_back(idx);
  });

  jobs = std::max(1U, jobs);
  std::vector<std::future<std::set<ExponentVector>>> parts;
  for (unsigned w = 0; w < jobs; ++w) {
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [&, w] {
      std::set<ExponentVector> local;
      for (std::size_t s = w; s < simplices.size(); s += jobs) {
        std::vector<ExponentVector> sub;
        for (auto i : simplices[s]) sub.push_back(rays[i]);
        for (auto& p : parallelepiped_points(sub, t))
          if (!p.is_zero()) local.insert(std::move(p));
      }
      return local;
    }));
  }
  std::set<ExponentVector> candidates(rays.begin(), rays.end());
  for (auto& f : parts) candidates.merge(f.get());

  std::vector<std::pair<mpz_class, ExponentVector>> ordered;
  for (const auto& c : candidates) ordered.emplace_back(grading(u, c), c);
  std::sort(ordered.begin(), ordered.end());
  std::vector<ExponentVector> irreducible;
  for (const auto& [deg, x] : ordered) {
    const bool reducible = std::any_of(irreducible.begin(), irreducible.end(), [&](const ExponentVector& h) {
      return grading(u, h) < deg && cone_membership(u, x - h);
    });
    if (!reducible) irreducible.push_back(x);
  }
  std::sort(irreducible.begin(), irreducible.end());
  hb.elements = std::move(irreducible);
  return hb;
}

MembershipResult monomial_membership(const SubalgebraGens& gens, const ExponentVector& target) {
  if (target.size() != gens.ambient()) throw ShapeError("target " + target.to_string() + " has the wrong length");
  const auto& rows = gens.monomials();
  std::int64_t max_entry = 0;
  bool nonnegative = true;
  for (const auto& r : rows) {
    for (auto x : r) max_entry = std::max<std::int64_t>(max_entry, x < 0 ? -x : x);
    nonnegative = nonnegative && r.is_nonnegative() && !r.is_zero();
  }
  std::int64_t target_sum = 0;
  for (auto x : target) target_sum += x < 0 ? -x : x;
  MembershipResult result{std::nullopt, target_sum * max_entry, nonnegative};
  if (target.is_zero()) {
    result.witness = ExponentVector(rows.size());
    return result;
  }
  if (rows.empty()) return result;

  ExponentVector beta(rows.size());
  std::function<bool(std::size_t, const ExponentVector&)> search = [&](std::size_t i, const ExponentVector& rest) {
    if (nonnegative && !rest.is_nonnegative()) return false;
    const auto& g = rows[i];
    if (i + 1 == rows.size()) {
      // rest must be an exact multiple k·g with 0 ≤ k ≤ bound.
      if (g.is_zero()) {
        beta[i] = 0;
        return rest.is_zero();
      }
      std::size_t lead = 0;
      while (g[lead] == 0) ++lead;
      if (rest[lead] % g[lead] != 0) return false;
      const std::int64_t k = rest[lead] / g[lead];
      if (k < 0 || k > result.bound || g.scaled(k) != rest) return false;
      beta[i] = k;
      return true;
    }
    ExponentVector r = rest;
    for (std::int64_t k = 0; k <= result.bound; ++k) {
      beta[i] = k;
      if (search(i + 1, r)) return true;
      r -= g;
      if (nonnegative && !r.is_nonnegative()) break;
    }
    return false;
  };
  if (search(0, target)) result.witness = beta;
  return result;
}

bool triangle_criterion(std::int64_t i, std::int64_t j, std::int64_t k) {
  return (i + j + k) % 2 == 0 && i + j >= k && j + k >= i && i + k >= j;
}

bool alg_independence(const SubalgebraGens& gens) { return rank(gens.matrix()) == gens.count(); }

std::vector<ExponentVector> intersection_generators(const SubalgebraGens& gens, unsigned jobs) {
  if (!alg_independence(gens)) {
    throw IndependenceError("monomials are algebraically dependent (rank U < " + std::to_string(gens.count()) + ")");
  }
  const IntMatrix u = gens.matrix();
  const HilbertBasis hb = hilbert_basis(u, jobs);
  std::vector<ExponentVector> out;
  for (const auto& beta : hb.elements) out.push_back(to_exponents(row_times(beta, u)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace h14
