#include "h14/intersect.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "h14/derivation.hpp"
#include "h14/echelon.hpp"
#include "h14/errors.hpp"

namespace h14 {

namespace {

template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += jobs) out[i] = fn(i);
    }));
  }
  for (auto& f : workers) f.get();
  return out;
}

std::int64_t generator_degree(const LaurentPoly& g, std::span<const std::int64_t> weights, char side,
                              std::size_t idx) {
  const std::string label = std::string("generator ") + side + std::to_string(idx + 1) + " (" + to_pretty(g) + ")";
  if (g.is_zero()) throw GradingError(label + " is zero");
  const auto parts = grade_by(g, weights);
  if (parts.size() != 1) throw GradingError(label + " is not weighted-homogeneous");
  const std::int64_t deg = parts.begin()->first;
  if (deg < 1) throw GradingError(label + " has non-positive weighted degree " + std::to_string(deg));
  return deg;
}

// Canonical bases of the degree-d parts (d = 0..dmax) of the algebra generated by gens.
std::vector<std::vector<LaurentPoly>> graded_spans(const std::vector<LaurentPoly>& gens,
                                                   std::span<const std::int64_t> weights, std::int64_t dmax,
                                                   std::size_t n, const Field& field, char side) {
  std::vector<std::int64_t> degs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].nvars() != n || gens[i].field() != field) {
      throw UsageError(std::string("generator ") + side + std::to_string(i + 1) + " has the wrong ring");
    }
    degs.push_back(generator_degree(gens[i], weights, side, i));
  }
  std::vector<std::vector<LaurentPoly>> spans(static_cast<std::size_t>(dmax) + 1);
  spans[0] = {LaurentPoly::constant(n, field, 1)};
  for (std::int64_t d = 1; d <= dmax; ++d) {
    Echelon ech(n, field);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (degs[i] > d) continue;
      for (const auto& s : spans[static_cast<std::size_t>(d - degs[i])]) ech.insert(gens[i] * s);
    }
    spans[static_cast<std::size_t>(d)] = ech.reduced_basis();
  }
  return spans;
}

std::vector<mpq_class> to_rational_weights(std::span<const std::int64_t> w) {
  std::vector<mpq_class> out;
  for (auto x : w) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

std::size_t GradedIntersectionReport::dim(std::int64_t degree) const {
  if (degree < 0 || degree > bound()) throw UsageError("degree outside the report");
  return slices[static_cast<std::size_t>(degree)].basis.size();
}

bool GradedIntersectionReport::contains(const LaurentPoly& f) const {
  if (f.is_zero()) return true;
  const mpq_class deg = weighted_degree(f.leading_term().first, weights);
  if (deg.get_den() != 1 || !is_homogeneous(f, weights, deg)) return false;
  const mpz_class d = deg.get_num();
  if (d < 0 || d > bound()) return false;
  Echelon ech(nvars, field);
  for (const auto& b : slices[d.get_ui()].basis) ech.insert(b);
  return ech.contains(f);
}

GradedIntersectionReport graded_intersection(const std::vector<LaurentPoly>& gens_a,
                                             const std::vector<LaurentPoly>& gens_b,
                                             std::span<const std::int64_t> weights, std::int64_t dmax) {
  if (dmax < 0) throw UsageError("degree bound must be nonnegative");
  if (gens_a.empty() && gens_b.empty()) throw UsageError("no generators");
  const LaurentPoly& ref = gens_a.empty() ? gens_b.front() : gens_a.front();
  const std::size_t n = ref.nvars();
  const Field field = ref.field();
  if (weights.size() != n) throw ShapeError("weight vector length differs from variable count");
  const auto spans_a = graded_spans(gens_a, weights, dmax, n, field, 'A');
  const auto spans_b = graded_spans(gens_b, weights, dmax, n, field, 'B');

  GradedIntersectionReport report;
  report.field = field;
  report.nvars = n;
  report.weights = to_rational_weights(weights);
  report.grading = "weighted degree";
  for (std::int64_t d = 0; d <= dmax; ++d) {
    const auto i = static_cast<std::size_t>(d);
    DegreeSlice s;
    s.degree = d;
    s.dim_a = spans_a[i].size();
    s.dim_b = spans_b[i].size();
    s.basis = intersect_spans(spans_a[i], spans_b[i], n, field);
    report.slices.push_back(std::move(s));
  }
  annotate_generators(report);
  return report;
}

GradedIntersectionReport kuroda_intersection_basis(const KurodaInstance& inst, std::int64_t bound, unsigned jobs) {
  if (inst.n < 4) throw UsageError("the pi-intersection engine needs an n >= 4 instance");
  if (det(inst.t) == 0) throw PreconditionError("det T = 0: the pi_i are not algebraically independent");
  if (bound < 0) throw UsageError("degree bound must be nonnegative");
  const std::size_t n = inst.n;
  const Field& field = inst.field;
  const auto gs = pi_in_y(inst);

  std::vector<ExponentVector> image_rows;
  for (const auto& y : inst.y_images) image_rows.push_back(y.terms().begin()->first);
  const IntMatrix images = IntMatrix::from_rows(image_rows, n);
  auto x_exponent_ok = [&](const ExponentVector& u) {
    const auto v = row_times(u, images);
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x >= 0; });
  };

  auto slice_at = [&](std::size_t d) {
    DegreeSlice s;
    s.degree = static_cast<std::int64_t>(d);
    std::vector<LaurentPoly> constraints, payloads;
    for (const auto& alpha : monomials_of_degree(n - 1, d)) {
      LaurentPoly p = LaurentPoly::constant(n, field, 1);
      for (std::size_t i = 0; i < alpha.size(); ++i) p *= gs[i].pow(alpha[i]);
      LaurentPoly bad(n, field);
      for (const auto& [u, c] : p.terms())
        if (!x_exponent_ok(u)) bad.add_term(u, c);
      constraints.push_back(std::move(bad));
      payloads.push_back(std::move(p));
    }
    s.dim_a = payloads.size();
    for (const auto& u : monomials_of_degree(n, d)) s.dim_b += x_exponent_ok(u) ? 1 : 0;
    std::vector<LaurentPoly> in_x;
    for (const auto& f : constrained_span(constraints, payloads, n, n, field)) {
      in_x.push_back(substitute(f, inst.y_images));
    }
    s.basis = canonical_basis(in_x, n, field);
    return s;
  };

  GradedIntersectionReport report;
  report.field = field;
  report.nvars = n;
  report.grading = "pi-degree";
  // Weights on X giving every Y_i image degree 1.
  std::vector<mpz_class> ones(n, 1);
  const auto w = solve_left(images.transposed(), ones);
  report.weights = *w;
  report.slices = parallel_map(static_cast<std::size_t>(bound) + 1, jobs, slice_at);
  annotate_generators(report, jobs);
  return report;
}

std::vector<std::pair<std::int64_t, std::size_t>> minimal_generator_degrees(const GradedIntersectionReport& report,
                                                                             unsigned jobs) {
  const std::size_t top = report.slices.size();
  auto count_at = [&](std::size_t d) -> std::size_t {
    if (d == 0) return 0;
    const auto& here = report.slices[d].basis;
    if (here.empty()) return 0;
    Echelon products(report.nvars, report.field);
    for (std::size_t d1 = 1; 2 * d1 <= d; ++d1) {
      for (const auto& x : report.slices[d1].basis)
        for (const auto& y : report.slices[d - d1].basis) products.insert(x * y);
    }
    std::size_t fresh = 0;
    for (const auto& b : here)
      if (products.insert(b)) ++fresh;
    return fresh;
  };
  const auto counts = parallel_map(top, jobs, count_at);
  std::vector<std::pair<std::int64_t, std::size_t>> out;
  for (std::size_t d = 1; d < top; ++d)
    if (counts[d] > 0) out.emplace_back(report.slices[d].degree, counts[d]);
  return out;
}

void annotate_generators(GradedIntersectionReport& report, unsigned jobs) {
  report.generator_degrees = minimal_generator_degrees(report, jobs);
  for (auto& s : report.slices) s.new_generators = 0;
  for (const auto& [d, c] : report.generator_degrees) report.slices[static_cast<std::size_t>(d)].new_generators = c;
}

CosetCheck freeness_coset_check(const std::vector<ExponentVector>& generators, std::size_t n, std::int64_t box) {
  if (box < 0) throw UsageError("box bound must be nonnegative");
  const CosetDecomposition cd(generators, n);
  const IntMatrix gen_matrix = IntMatrix::from_rows(generators, n);
  CosetCheck result;
  result.index = cd.index();
  result.ok = true;
  std::set<ExponentVector> reps;
  ExponentVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -box;
  for (;;) {
    ++result.checked;
    const ExponentVector rep = cd.representative(v);
    const ExponentVector h = v - rep;
    // h must be an integer combination of the generators.
    std::vector<mpz_class> hb;
    for (auto x : h) hb.emplace_back(static_cast<long>(x));
    bool in_h = cd.contains(h);
    if (!generators.empty() && rank(gen_matrix) == generators.size()) {
      const auto lambda = solve_left(gen_matrix, hb);
      in_h = in_h && lambda && std::all_of(lambda->begin(), lambda->end(),
                                           [](const mpq_class& q) { return q.get_den() == 1; });
    }
    bool unique = in_h && cd.representative(rep) == rep && cd.contains(rep) == rep.is_zero();
    for (const auto& g : generators) unique = unique && cd.representative(v + g) == rep;
    if (!unique) result.ok = false;
    reps.insert(rep);
    std::size_t i = 0;
    while (i < n && v[i] == box) v[i++] = -box;
    if (i == n) break;
    ++v[i];
  }
  result.distinct = reps.size();
  if (result.index != 0 && mpz_class(static_cast<unsigned long>(result.distinct)) > result.index) result.ok = false;
  return result;
}

CosetCheck freeness_coset_check(const KurodaInstance& inst, std::int64_t box) {
  if (det(inst.t) == 0) throw PreconditionError("det T = 0");
  const std::size_t k = inst.t.rows();
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < k; ++i) {
    ExponentVector g(inst.n);
    for (std::size_t j = 0; j < k; ++j) g[j] = to_int64(inst.t(i, j));
    gens.push_back(g);
  }
  gens.push_back(ExponentVector::unit(inst.n, inst.n - 1));
  return freeness_coset_check(gens, inst.n, box);
}

bool spans_contain_monomial(const std::vector<LaurentPoly>& gens, std::span<const std::int64_t> weights,
                            std::int64_t dmax) {
  if (gens.empty()) return false;
  const std::size_t n = gens.front().nvars();
  const Field field = gens.front().field();
  const auto spans = graded_spans(gens, weights, dmax, n, field, 'A');
  for (std::int64_t d = 1; d <= dmax; ++d) {
    Echelon ech(n, field);
    std::set<ExponentVector> keys;
    for (const auto& b : spans[static_cast<std::size_t>(d)]) {
      ech.insert(b);
      for (const auto& [e, c] : b.terms()) keys.insert(e);
    }
    for (const auto& e : keys)
      if (ech.contains(LaurentPoly::monomial(e, field))) return true;
  }
  return false;
}

bool no_monomial_units_check(const KurodaInstance& inst, std::int64_t dmax) {
  if (det(inst.t) == 0) throw PreconditionError("det T = 0");
  const std::vector<std::int64_t> ones(inst.n, 1);
  return !spans_contain_monomial(pi_in_y(inst), ones, dmax);
}

TestAlgebras abc_algebras(const Field& field) {
  auto m = [&](std::initializer_list<std::int64_t> e) { return LaurentPoly::monomial(ExponentVector(e), field); };
  TestAlgebras t;
  t.a = {m({1, 1, 0, 0}), m({0, 1, 1, 0}), m({1, 0, 1, 0}), m({0, 0, 0, 1})};
  t.b = {m({0, 0, 0, 1}) - m({2, 0, 0, 0}), m({0, 0, 0, 1}) - m({0, 2, 0, 0}), m({0, 0, 0, 1}) - m({0, 0, 2, 0})};
  t.weights = {1, 1, 1, 2};
  t.names = {"a", "b", "c", "x"};
  return t;
}

LaurentPoly characteristic_two_witness(const Field& field) {
  auto m = [&](std::initializer_list<std::int64_t> e) { return LaurentPoly::monomial(ExponentVector(e), field); };
  return m({0, 2, 2, 0}) - m({2, 0, 2, 0}) - m({2, 2, 0, 0}) + m({0, 0, 0, 2});
}

}  // namespace h14
