#include "h14/kuroda.hpp"

#include <algorithm>
#include <future>

#include "h14/errors.hpp"

namespace h14 {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "delta[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

IntMatrix signed_matrix(const DeltaMatrix& delta, std::size_t k) {
  IntMatrix t(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t(i, j) = i == j ? -delta[i][j] : delta[i][j];
  return t;
}

// ξ_i = δ_ii / (δ_ii + min_{k≠i} δ_ki)
std::vector<mpq_class> xi_values(const DeltaMatrix& delta, std::size_t k) {
  std::vector<mpq_class> xi;
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t m = -1;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == i) continue;
      m = m < 0 ? delta[r][i] : std::min(m, delta[r][i]);
    }
    mpq_class q(static_cast<long>(delta[i][i]), static_cast<long>(delta[i][i] + m));
    q.canonicalize();
    xi.push_back(q);
  }
  return xi;
}

mpq_class starstar_value(const DeltaMatrix& d) {
  mpq_class a(static_cast<long>(d[0][0]), static_cast<long>(d[0][0] + d[1][0]));
  mpq_class b(static_cast<long>(d[1][1]), static_cast<long>(d[1][1] + d[0][1]));
  a.canonicalize();
  b.canonicalize();
  return a + b;
}

LaurentPoly mono(std::size_t n, const Field& f, std::vector<std::int64_t> e, long c = 1) {
  e.resize(n, 0);
  return LaurentPoly::monomial(ExponentVector(std::move(e)), f, c);
}

}  // namespace

KurodaInstance build_instance(std::size_t n, std::int64_t gamma, const DeltaMatrix& delta, const Field& field) {
  if (n < 3) throw ValidationError("n must be at least 3");
  if (gamma < 1) throw ValidationError("gamma must be >= 1, got " + std::to_string(gamma));
  const std::size_t k = n - 1;
  if (delta.size() != (n == 3 ? 2 : k)) {
    throw ValidationError("delta must have " + std::to_string(n == 3 ? 2 : k) + " rows");
  }
  KurodaInstance inst;
  inst.n = n;
  inst.gamma = gamma;
  inst.field = field;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto& row = delta[i];
    const bool ok_len = n == 3 ? row.size() == 2 : (row.size() == k || row.size() == n);
    if (!ok_len) throw ValidationError("delta row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool last = n > 3 && j == k;
      if (row[j] < (last ? 0 : 1)) {
        throw ValidationError(entry_name(i, j) + " must be " + (last ? ">= 0" : ">= 1") + ", got " +
                              std::to_string(row[j]));
      }
    }
    auto normalized = row;
    if (n > 3) normalized.resize(n, 0);
    inst.delta.push_back(std::move(normalized));
  }
  const auto& d = inst.delta;
  inst.t = signed_matrix(d, n == 3 ? 2 : k);

  if (n == 3) {
    const LaurentPoly m1 = mono(3, field, {-d[0][0], d[0][1]});
    const LaurentPoly m2 = mono(3, field, {d[1][0], -d[1][1]});
    const LaurentPoly x3 = mono(3, field, {0, 0, gamma});
    inst.monomials = {m1, m2};
    inst.y_images = {m1, m2, x3};
    inst.pis = {m2 - m1, x3 - m1, mono(3, field, {d[1][0] - d[0][0], d[0][1] - d[1][1]}, 2) - m1 * m1};
    return inst;
  }

  inst.xi = xi_values(d, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> e(n, 0);
    for (std::size_t j = 0; j < k; ++j) e[j] = i == j ? -d[i][j] : d[i][j];
    inst.monomials.push_back(mono(n, field, e));
    e[k] = d[i][k];
    inst.y_images.push_back(mono(n, field, e));
  }
  std::vector<std::int64_t> top(n, 0);
  top[k] = gamma;
  inst.y_images.push_back(mono(n, field, top));
  for (std::size_t i = 0; i < k; ++i) inst.pis.push_back(inst.y_images[k] - inst.y_images[i]);
  return inst;
}

ConditionValue check_star(const KurodaInstance& inst) {
  if (inst.n != 4) throw UsageError("condition (*) is defined for n = 4 instances");
  mpq_class sum = 0;
  for (const auto& x : inst.xi) sum += x;
  return {sum, sum < 1};
}

ConditionValue check_starstar(const KurodaInstance& inst) {
  if (inst.n != 3) throw UsageError("condition (**) is defined for n = 3 instances");
  const mpq_class v = starstar_value(inst.delta);
  return {v, v < mpq_class(1, 2)};
}

ScanReport implication_scan(std::size_t n, std::int64_t bound, unsigned jobs) {
  if (n != 3 && n != 4) throw UsageError("implication scan supports n = 3 and n = 4");
  if (bound < 1) throw UsageError("scan bound must be >= 1");
  const std::size_t k = n == 3 ? 2 : 3;
  const std::size_t entries = k * k;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < entries; ++i) total *= static_cast<std::uint64_t>(bound);

  struct Chunk {
    std::size_t holds = 0, singular = 0;
    std::vector<DeltaMatrix> violations, witnesses;
  };
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    Chunk c;
    DeltaMatrix d(k, std::vector<std::int64_t>(k));
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t e = entries; e-- > 0;) {
        d[e / k][e % k] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(bound)) + 1;
        rest /= static_cast<std::uint64_t>(bound);
      }
      bool holds = false;
      if (n == 3) {
        holds = starstar_value(d) < mpq_class(1, 2);
      } else {
        mpq_class s = 0;
        for (const auto& x : xi_values(d, k)) s += x;
        holds = s < 1;
      }
      const bool singular = det(signed_matrix(d, k)) == 0;
      c.holds += holds ? 1 : 0;
      c.singular += singular ? 1 : 0;
      if (holds && singular) c.violations.push_back(d);
      if (!holds && !singular) c.witnesses.push_back(d);
    }
    return c;
  };

  jobs = std::max(1U, jobs);
  std::vector<std::future<Chunk>> parts;
  const std::uint64_t step = (total + jobs - 1) / jobs;
  for (std::uint64_t lo = 0; lo < total; lo += step) {
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run, lo,
                               std::min(total, lo + step)));
  }
  ScanReport report;
  report.n = n;
  report.bound = bound;
  report.instances = total;
  for (auto& f : parts) {
    Chunk c = f.get();
    report.condition_holds += c.holds;
    report.singular += c.singular;
    for (auto& v : c.violations) report.violations.push_back(std::move(v));
    for (auto& w : c.witnesses) report.converse_witnesses.push_back(std::move(w));
  }
  return report;
}

LemmaP lemma31_find_p(std::span<const mpq_class> xi) {
  if (xi.size() != 3) throw UsageError("expected three xi values");
  mpq_class sum = 0;
  for (const auto& x : xi) {
    if (x <= 0 || x >= 1) throw ConditionError("xi value " + x.get_str() + " outside (0, 1)");
    sum += x;
  }
  if (sum >= 1) throw ConditionError("xi1 + xi2 + xi3 = " + sum.get_str() + " is not < 1");
  const mpq_class slack = 1 - sum;
  // least p with p·slack ≥ 3
  mpz_class p;
  const mpq_class need = 3 / slack;
  mpz_cdiv_q(p.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
  auto ceil_times = [&](const mpq_class& x) {
    const mpq_class v = x * p;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return std::max<std::int64_t>(1, to_int64(c));
  };
  LemmaP out{to_int64(p), {ceil_times(xi[0]), ceil_times(xi[1]), 0}};
  out.parts[2] = out.p - out.parts[0] - out.parts[1];
  if (out.parts[2] < 1 || mpq_class(static_cast<long>(out.parts[2])) < xi[2] * p) {
    throw ConditionError("no admissible split of p = " + std::to_string(out.p));
  }
  return out;
}

namespace {

void require_four(const KurodaInstance& inst) {
  if (inst.n != 4) throw UsageError("this construction is defined for n = 4 instances");
}

// Y_a − Y_b in the four Y variables.
LaurentPoly y_diff(const Field& f, std::size_t a, std::size_t b) {
  return LaurentPoly::variable(4, a, f) - LaurentPoly::variable(4, b, f);
}

void require_nonnegative(std::initializer_list<std::int64_t> xs) {
  for (auto x : xs)
    if (x < 0) throw UsageError("exponents must be nonnegative");
}

}  // namespace

Certificate build_f0(const KurodaInstance& inst, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
  require_four(inst);
  require_nonnegative({p1, p2, p3});
  const Field& f = inst.field;
  const LaurentPoly in_y = y_diff(f, 2, 1).pow(p1) * y_diff(f, 2, 0).pow(p2) * y_diff(f, 1, 0).pow(p3);
  LaurentPoly x = substitute(in_y, inst.y_images);
  const bool poly = is_polynomial(x);
  return {std::move(x), poly};
}

Certificate build_g(const KurodaInstance& inst, std::int64_t s, std::int64_t pbar2, std::int64_t pbar3,
                    std::int64_t e) {
  require_four(inst);
  require_nonnegative({s, pbar2, pbar3, e});
  const Field& f = inst.field;
  const LaurentPoly in_y =
      y_diff(f, 2, 1).pow(s) * y_diff(f, 2, 0).pow(pbar2) * y_diff(f, 1, 0).pow(pbar3) * y_diff(f, 3, 0).pow(e);
  LaurentPoly x = substitute(in_y, inst.y_images);
  const bool ok = std::all_of(x.terms().begin(), x.terms().end(),
                              [](const auto& t) { return t.first[1] >= 0 && t.first[2] >= 0; });
  return {std::move(x), ok};
}

std::array<std::int64_t, 2> split_for_g(std::span<const mpq_class> xi, std::int64_t pbar, std::int64_t d) {
  if (xi.size() != 3) throw UsageError("expected three xi values");
  const mpq_class b2 = xi[1] * static_cast<long>(pbar);
  const mpq_class b3 = xi[2] * static_cast<long>(pbar);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), b2.get_num_mpz_t(), b2.get_den_mpz_t());
  const std::int64_t p2 = to_int64(fl) + 1;
  const std::int64_t p3 = d - p2;
  if (mpq_class(static_cast<long>(p3)) <= b3) {
    throw ConditionError("d = " + std::to_string(d) + " cannot be split with pbar2 > pbar*xi2, pbar3 > pbar*xi3");
  }
  return {p2, p3};
}

bool verify_t214(const KurodaInstance& inst) {
  if (inst.n != 3 || inst.pis.size() != 3) throw UsageError("Theorem 2.14 data needs an n = 3 instance");
  const Field& f = inst.field;
  const auto& d = inst.delta;
  const LaurentPoly& pi1 = inst.pis[0];
  const LaurentPoly& pi2 = inst.pis[1];
  const LaurentPoly& pi3 = inst.pis[2];
  const LaurentPoly x3g = mono(3, f, {0, 0, inst.gamma});
  const LaurentPoly n = mono(3, f, {d[1][0], -d[1][1]});
  const LaurentPoly two = LaurentPoly::constant(3, f, 2);
  const bool first = (pi2 - pi1 + n - x3g).is_zero();
  const bool second = (pi1 * pi1 + pi3 - n * n).is_zero();
  const LaurentPoly diff = pi1 - pi2;
  const bool third = (x3g * x3g + two * diff * x3g + diff * diff - (pi1 * pi1 + pi3)).is_zero();
  return first && second && third;
}

std::vector<UnitWitness> unit_witnesses(const KurodaInstance& inst) {
  const std::size_t k = inst.t.rows();
  std::vector<UnitWitness> out;
  for (std::size_t i = 0; i < k; ++i) {
    UnitRowSolution sol = solve_unit_row(inst.t, i);
    std::vector<std::int64_t> s;
    for (const auto& x : sol.row) s.push_back(to_int64(x));
    const LaurentPoly y_mono = LaurentPoly::monomial(ExponentVector(s), inst.field);
    const LaurentPoly image = substitute(y_mono, inst.monomials);
    ExponentVector target(inst.n);
    target[i] = to_int64(sol.multiplier);
    const bool ok = image == LaurentPoly::monomial(target, inst.field);
    out.push_back({i, std::move(sol), ok});
  }
  return out;
}

std::vector<LaurentPoly> pi_in_y(const KurodaInstance& inst) {
  if (inst.n < 4) throw UsageError("Y-coordinates are defined for n >= 4 instances");
  std::vector<LaurentPoly> out;
  const LaurentPoly top = LaurentPoly::variable(inst.n, inst.n - 1, inst.field);
  for (std::size_t i = 0; i + 1 < inst.n; ++i) out.push_back(top - LaurentPoly::variable(inst.n, i, inst.field));
  return out;
}

}  // namespace h14
