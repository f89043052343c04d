#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "h14/derivation.hpp"
#include "h14/errors.hpp"
#include "h14/intersect.hpp"
#include "h14/kuroda.hpp"
#include "h14/monoid.hpp"

namespace h14::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string verify_id;
  std::string config_path;
  std::optional<std::int64_t> dmax;
  std::optional<std::string> field;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string out_path;
  std::optional<std::size_t> scan_n;
  std::optional<std::int64_t> bound;
};

// ------------------------------------------------------------------ config

struct Config {
  std::optional<json> raw;
  std::optional<std::size_t> n;
  std::int64_t gamma = 1;
  std::optional<DeltaMatrix> delta;
  std::optional<std::string> field;
  std::optional<std::vector<std::vector<long>>> u;
};

template <class T>
T config_value(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  static const std::vector<std::string> known{"n", "gamma", "delta", "field", "U"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw UsageError("unknown config key '" + key + "' (allowed: n, gamma, delta, field, U)");
  if (j.contains("n")) {
    const auto n = config_value<std::int64_t>(j, "n");
    if (n < 3) throw ValidationError("config 'n' must be at least 3");
    c.n = static_cast<std::size_t>(n);
  }
  if (j.contains("gamma")) c.gamma = config_value<std::int64_t>(j, "gamma");
  if (j.contains("delta")) c.delta = config_value<DeltaMatrix>(j, "delta");
  if (j.contains("field")) c.field = config_value<std::string>(j, "field");
  if (j.contains("U")) c.u = config_value<std::vector<std::vector<long>>>(j, "U");
  c.raw = std::move(j);
  return c;
}

Field resolve_field(const Options& o, const Config& c, const char* fallback) {
  if (o.field) return Field::parse(*o.field);
  if (c.field) return Field::parse(*c.field);
  return Field::parse(fallback);
}

const DeltaMatrix kDiagOneOffThree{{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};

// Instance from the config, or the given default when no config was passed.
KurodaInstance instance_from(const Config& c, const Field& field, std::optional<DeltaMatrix> fallback = {}) {
  if (!c.raw) {
    if (!fallback) throw UsageError("this command needs --config with n and delta");
    return build_instance(fallback->size() + 1, 1, *fallback, field);
  }
  if (!c.n || !c.delta) throw UsageError("config needs both 'n' and 'delta'");
  return build_instance(*c.n, c.gamma, *c.delta, field);
}

// ------------------------------------------------------------------ formatting

std::string fmt(const DeltaMatrix& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < d[i].size(); ++j) s += (j ? "," : "") + std::to_string(d[i][j]);
    s += "]";
  }
  return s + "]";
}

std::string fmt(const std::vector<mpq_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string fmt(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string fmt(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string monomial_text(const ExponentVector& e) {
  return to_pretty(LaurentPoly::monomial(e, Field::rationals()));
}

/// Collects pass/fail lines for one verification.
class Checks {
 public:
  explicit Checks(std::ostream& out) : out_(out) {}
  bool expect(bool cond, const std::string& label) {
    out_ << (cond ? "ok    " : "FAIL  ") << label << '\n';
    ok_ = ok_ && cond;
    return cond;
  }
  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

void header(std::ostream& out, const Options& o, const Config& c, const std::string& field,
            const std::string& bounds) {
  out << "# h14 " << kVersion << '\n';
  out << "# command: " << o.command << (o.verify_id.empty() ? "" : " " + o.verify_id) << '\n';
  out << "# config: " << (c.raw ? c.raw->dump() : std::string("(built-in default)")) << '\n';
  out << "# field: " << field << '\n';
  out << "# bounds: " << bounds << '\n';
  out << "# seed: " << o.seed << '\n';
}

int finish(std::ostream& out, bool ok) {
  out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kPass : kAssertion;
}

void describe(std::ostream& out, const KurodaInstance& inst) {
  out << "instance: n=" << inst.n << " gamma=" << inst.gamma << " delta=" << fmt(inst.delta) << '\n';
  out << "T = " << fmt(inst.t) << "  det T = " << det(inst.t).get_str() << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  return f;
}

const char* kTsvHeader = "degree\tambient-dim-A\tambient-dim-B\tintersection-dim\tnew-generators\n";

void write_tsv(std::ostream& os, const GradedIntersectionReport& r) {
  os << kTsvHeader;
  for (const auto& s : r.slices)
    os << s.degree << '\t' << s.dim_a << '\t' << s.dim_b << '\t' << s.basis.size() << '\t' << s.new_generators
       << '\n';
}

void write_basis(std::ostream& os, const GradedIntersectionReport& r) {
  os << "# field " << r.field.to_string() << ", " << r.nvars << " variables, grading " << r.grading << '\n';
  for (const auto& s : r.slices) {
    os << "# degree " << s.degree << '\n';
    for (const auto& f : s.basis) os << to_text(f) << '\n';
  }
}

void emit_table(std::ostream& out, const Options& o, const GradedIntersectionReport& r, bool with_basis) {
  write_tsv(out, r);
  if (o.out_path.empty()) return;
  auto tsv = open_out(o.out_path);
  write_tsv(tsv, r);
  if (with_basis) {
    auto basis = open_out(o.out_path + ".basis");
    write_basis(basis, r);
  }
}

// ------------------------------------------------------------------ check-conditions

int cmd_check_conditions(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  if (!c.raw) throw UsageError("check-conditions needs --config");
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field);
  header(out, o, c, field.to_string(), "none");
  describe(out, inst);
  if (inst.n == 3) {
    const auto v = check_starstar(inst);
    out << "condition (**) = " << v.value.get_str() << " holds=" << (v.holds ? "true" : "false") << '\n';
  } else {
    out << "xi = " << fmt(inst.xi) << '\n';
    if (inst.n == 4) {
      const auto v = check_star(inst);
      out << "condition (*) = " << v.value.get_str() << " holds=" << (v.holds ? "true" : "false") << '\n';
    } else {
      out << "condition: none defined for n=" << inst.n << '\n';
    }
  }
  return kPass;
}

// ------------------------------------------------------------------ verify

int verify_unit_witnesses(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field, kDiagOneOffThree);
  header(out, o, c, field.to_string(), "none");
  describe(out, inst);
  Checks checks(out);
  for (const auto& w : unit_witnesses(inst)) {
    std::ostringstream label;
    label << "i=" << w.index + 1 << " m=" << w.solution.multiplier.get_str() << " s=" << fmt(w.solution.row)
          << ": prod M_j^s_j = X" << w.index + 1 << "^" << w.solution.multiplier.get_str();
    checks.expect(w.verified, label.str());
  }
  return finish(out, checks.ok());
}

int verify_freeness(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field, kDiagOneOffThree);
  const std::int64_t box = o.dmax.value_or(5);
  header(out, o, c, field.to_string(), "box=" + std::to_string(box));
  describe(out, inst);
  const auto r = freeness_coset_check(inst, box);
  out << "index [Z^n : H] = " << r.index.get_str() << '\n';
  out << "vectors checked = " << r.checked << ", distinct representatives = " << r.distinct << '\n';
  Checks checks(out);
  checks.expect(r.ok, "every vector in the box splits uniquely as rep + h");
  return finish(out, checks.ok());
}

int verify_units(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field, kDiagOneOffThree);
  const std::int64_t d = o.dmax.value_or(4);
  header(out, o, c, field.to_string(), "dmax=" + std::to_string(d));
  describe(out, inst);
  Checks checks(out);
  checks.expect(no_monomial_units_check(inst, d), "no nonconstant monomial in K[pi] up to pi-degree " +
                                                       std::to_string(d));
  return finish(out, checks.ok());
}

std::vector<std::vector<long>> matrix_from(const Config& c) {
  if (c.u) return *c.u;
  return {{1, 1}, {1, -1}};
}

int verify_hilbert(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const auto rows = matrix_from(c);
  const std::int64_t box = o.dmax.value_or(4);
  header(out, o, c, "n/a", "box=" + std::to_string(box));
  const IntMatrix u = IntMatrix::from_rows(rows);
  const std::size_t n = u.cols();
  std::vector<ExponentVector> monomials;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    ExponentVector e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = to_int64(u(i, j));
    monomials.push_back(e);
  }
  const SubalgebraGens gens(n, monomials);
  const auto hb = hilbert_basis(u, o.jobs);
  const auto products = intersection_generators(gens, o.jobs);
  out << "U = " << fmt(u) << '\n';
  out << "hilbert basis:";
  for (const auto& b : hb.elements) out << ' ' << b.to_string();
  out << "\ngenerators:";
  for (const auto& e : products) out << ' ' << monomial_text(e);
  out << '\n';

  Checks checks(out);
  bool nonneg = true;
  for (const auto& e : products) nonneg = nonneg && e.is_nonnegative();
  checks.expect(nonneg, "every generator is a polynomial monomial");

  // Every cone point in the box maps into the monoid spanned by the generators.
  bool covered = true;
  std::size_t points = 0;
  const std::size_t t = u.rows();
  ExponentVector beta(t);
  for (std::size_t i = 0; i < t; ++i) beta[i] = -box;
  for (;;) {
    if (cone_membership(u, beta)) {
      ++points;
      const auto image = row_times(beta, u);
      ExponentVector target(n);
      for (std::size_t j = 0; j < n; ++j) target[j] = to_int64(image[j]);
      if (products.empty()) {
        covered = covered && target.is_zero();
      } else {
        covered = covered && monomial_membership(SubalgebraGens(n, products), target).witness.has_value();
      }
    }
    std::size_t i = 0;
    while (i < t && beta[i] == box) beta[i++] = -box;
    if (i == t) break;
    ++beta[i];
  }
  checks.expect(covered, std::to_string(points) + " cone points in the box are products of generators");
  return finish(out, checks.ok());
}

int verify_t214_cmd(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  header(out, o, c, field.to_string(), "random instances=50 entries<=5");
  Checks checks(out);
  if (c.raw) {
    const auto inst = instance_from(c, field);
    if (inst.n != 3) throw UsageError("t2.14 needs an n = 3 instance");
    describe(out, inst);
    checks.expect(verify_t214(inst), "identities hold for the configured instance");
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> entry(1, 5);
  std::size_t held = 0;
  std::optional<KurodaInstance> first;
  for (int k = 0; k < 50; ++k) {
    const DeltaMatrix d{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    const auto inst = build_instance(3, entry(rng), d, field);
    if (verify_t214(inst)) ++held;
    if (!first) first = inst;
  }
  checks.expect(held == 50, std::to_string(held) + "/50 random instances satisfy the identities");
  auto mutated = *first;
  mutated.pis[2] = mutated.pis[2] + LaurentPoly::monomial({first->delta[1][0] - first->delta[0][0],
                                                           first->delta[0][1] - first->delta[1][1], 0},
                                                          field);
  checks.expect(!verify_t214(mutated), "mutated pi3 (leading coefficient 3) is rejected");
  return finish(out, checks.ok());
}

int verify_abc(const Options& o, std::ostream& out, bool char_two) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, char_two ? "Fp:2" : "Q");
  const std::int64_t dmax = o.dmax.value_or(char_two ? 4 : 16);
  const auto p = field.characteristic();
  if (char_two && p != 2) throw PreconditionError("r2.16 concerns characteristic 2; pass --field Fp:2");
  if (!char_two && p == 2) throw PreconditionError("l2.15 needs characteristic != 2; see r2.16 for F2");
  if (char_two && dmax < 4) throw UsageError("r2.16 needs --dmax >= 4");
  header(out, o, c, field.to_string(), "dmax=" + std::to_string(dmax));
  const auto alg = abc_algebras(field);
  out << "A = K[ab, bc, ca, x], B = K[x - a^2, x - b^2, x - c^2], weights (a,b,c,x) = (1,1,1,2)\n";
  const auto r = graded_intersection(alg.a, alg.b, alg.weights, dmax);
  emit_table(out, o, r, true);
  Checks checks(out);
  if (char_two) {
    checks.expect(r.dim(4) >= 1, "degree 4 intersection is nonzero");
    checks.expect(r.contains(characteristic_two_witness(field)),
                  "(bc)^2 - (ac)^2 - (ab)^2 + x^2 lies in the degree 4 intersection");
    return finish(out, checks.ok());
  }
  bool zero = true;
  for (std::int64_t d = 1; d <= dmax; ++d) zero = zero && r.dim(d) == 0;
  if (p == 3) {
    out << "note: characteristic 3 is outside the proven range; table reported without a claim\n";
    out << "all degrees 1.." << dmax << " trivial: " << (zero ? "yes" : "no") << '\n';
    return finish(out, true);
  }
  checks.expect(zero, "intersection is K in degrees 1.." + std::to_string(dmax));
  return finish(out, checks.ok());
}

int verify_certificates(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field, kDiagOneOffThree);
  if (inst.n != 4) throw UsageError("l3.1 needs an n = 4 instance");
  header(out, o, c, field.to_string(), "none");
  describe(out, inst);
  const auto star = check_star(inst);
  out << "xi = " << fmt(inst.xi) << "  condition (*) = " << star.value.get_str() << '\n';
  const auto lp = lemma31_find_p(inst.xi);
  out << "p = " << lp.p << "  (p1, p2, p3) = (" << lp.parts[0] << ", " << lp.parts[1] << ", " << lp.parts[2]
      << ")\n";
  Checks checks(out);
  const auto f0 = build_f0(inst, lp.parts[0], lp.parts[1], lp.parts[2]);
  checks.expect(f0.holds, "f0 is a polynomial (" + std::to_string(f0.poly.size()) + " terms)");
  const auto g = build_g(inst, lp.parts[0], lp.parts[1], lp.parts[2], 1);
  checks.expect(g.holds, "G with e = 1 has nonnegative X2 and X3 exponents");
  const auto split = split_for_g(inst.xi, lp.p, lp.parts[1] + lp.parts[2] + 1);
  out << "strict split of " << lp.parts[1] + lp.parts[2] + 1 << ": (" << split[0] << ", " << split[1] << ")\n";
  return finish(out, checks.ok());
}

int verify_support(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field, kDiagOneOffThree);
  if (inst.n != 4) throw UsageError("l3.2 needs an n = 4 instance");
  const std::int64_t d = o.dmax.value_or(6);
  header(out, o, c, field.to_string(), "dmax=" + std::to_string(d));
  describe(out, inst);
  auto r = kuroda_intersection_basis(inst, d, o.jobs);
  emit_table(out, o, r, true);
  Checks checks(out);
  std::size_t elements = 0;
  bool ok = true;
  for (const auto& s : r.slices)
    for (const auto& f : s.basis) {
      if (f.is_constant()) continue;
      ++elements;
      ok = ok && is_polynomial(f) && support_property_check(f);
    }
  checks.expect(ok, std::to_string(elements) + " nonconstant basis elements satisfy the support property");
  return finish(out, checks.ok());
}

const std::vector<std::string> kVerifyIds{"t2.5i", "t2.5ii", "p2.6", "t2.8", "l2.13", "t2.14",
                                          "l2.15", "r2.16", "l3.1", "l3.2"};

int cmd_verify(const Options& o, std::ostream& out) {
  const auto& id = o.verify_id;
  if (id == "t2.5i") return verify_unit_witnesses(o, out);
  if (id == "t2.5ii") return verify_freeness(o, out);
  if (id == "p2.6") return verify_units(o, out);
  if (id == "t2.8") return verify_hilbert(o, out);
  if (id == "l2.13" || id == "t2.14") return verify_t214_cmd(o, out);
  if (id == "l2.15") return verify_abc(o, out, false);
  if (id == "r2.16") return verify_abc(o, out, true);
  if (id == "l3.1") return verify_certificates(o, out);
  if (id == "l3.2") return verify_support(o, out);
  std::string ids;
  for (const auto& k : kVerifyIds) ids += (ids.empty() ? "" : ", ") + k;
  throw UsageError("unknown verification id '" + id + "' (valid: " + ids + ")");
}

// ------------------------------------------------------------------ hilbert / intersect

int cmd_hilbert(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  if (!c.u) throw UsageError("hilbert needs a config with 'U'");
  header(out, o, c, "n/a", "none");
  const IntMatrix u = IntMatrix::from_rows(*c.u);
  std::vector<ExponentVector> monomials;
  for (const auto& row : *c.u) monomials.emplace_back(std::vector<std::int64_t>(row.begin(), row.end()));
  const SubalgebraGens gens(u.cols(), monomials);
  const auto hb = hilbert_basis(u, o.jobs);
  const auto products = intersection_generators(gens, o.jobs);
  out << "U = " << fmt(u) << '\n';
  out << "hilbert basis:";
  for (const auto& b : hb.elements) out << ' ' << b.to_string();
  out << "\ngenerators:";
  for (const auto& e : products) out << ' ' << monomial_text(e);
  out << '\n';
  return kPass;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const Field field = resolve_field(o, c, "Q");
  const auto inst = instance_from(c, field);
  const std::int64_t d = o.dmax.value_or(8);
  header(out, o, c, field.to_string(), "dmax=" + std::to_string(d));
  describe(out, inst);
  out << "# new-generators counts elements not generated by lower degrees, exact only up to dmax\n";
  auto r = kuroda_intersection_basis(inst, d, o.jobs);
  annotate_generators(r, o.jobs);
  emit_table(out, o, r, true);
  out << "generator degrees:";
  for (const auto& [deg, count] : r.generator_degrees) out << ' ' << deg << 'x' << count;
  out << '\n';
  return kPass;
}

// ------------------------------------------------------------------ scan

bool mutant_is_polynomial(const KurodaInstance& inst, const LemmaP& lp) {
  // Push p1 just below p·ξ1 and hand the difference to p3.
  mpz_class need;
  const mpq_class target = lp.p * inst.xi[0];
  mpz_cdiv_q(need.get_mpz_t(), target.get_num_mpz_t(), target.get_den_mpz_t());
  const std::int64_t p1 = need.get_si() - 1;
  if (p1 < 0) return true;
  const std::int64_t p3 = lp.p - p1 - lp.parts[1];
  return build_f0(inst, p1, lp.parts[1], p3).holds;
}

struct SweepRow {
  DeltaMatrix delta;
  std::int64_t p = 0;
  bool f0_ok = false;
  bool mutant_polynomial = true;
};

std::vector<SweepRow> certificate_sweep(std::int64_t bound, unsigned jobs) {
  std::vector<DeltaMatrix> all;
  std::int64_t total = 1;
  for (int k = 0; k < 9; ++k) total *= bound;
  for (std::int64_t code = 0; code < total; ++code) {
    DeltaMatrix d(3, std::vector<std::int64_t>(3));
    std::int64_t rest = code;
    for (auto& row : d)
      for (auto& v : row) {
        v = 1 + rest % bound;
        rest /= bound;
      }
    if (check_star(build_instance(4, 1, d)).holds) all.push_back(d);
  }
  std::vector<SweepRow> rows(all.size());
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < all.size(); i += jobs) {
      const auto inst = build_instance(4, 1, all[i]);
      const auto lp = lemma31_find_p(inst.xi);
      rows[i] = {all[i], lp.p, build_f0(inst, lp.parts[0], lp.parts[1], lp.parts[2]).holds,
                 mutant_is_polynomial(inst, lp)};
    }
  };
  std::vector<std::future<void>> tasks;
  for (unsigned j = 0; j < jobs; ++j) tasks.push_back(std::async(std::launch::async, work, j));
  for (auto& t : tasks) t.get();
  return rows;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Config c = load_config(o.config_path);
  const std::size_t n = o.scan_n.value_or(c.n.value_or(3));
  if (n != 3 && n != 4) throw UsageError("scan supports n = 3 or n = 4");
  const std::int64_t bound = o.bound.value_or(n == 3 ? 4 : 2);
  const std::int64_t limit = n == 3 ? 8 : 4;
  if (bound < 1 || bound > limit)
    throw UsageError("scan bound must lie in [1, " + std::to_string(limit) + "] for n = " + std::to_string(n));
  header(out, o, c, "Q", "entries in [1," + std::to_string(bound) + "]");
  const auto r = implication_scan(n, bound, o.jobs);
  const char* cond = n == 3 ? "(**)" : "(*)";
  out << "n = " << n << ", instances = " << r.instances << ", condition " << cond
      << " holds = " << r.condition_holds << ", det T = 0: " << r.singular << '\n';
  out << "converse witnesses (det T != 0, condition fails): " << r.converse_witnesses.size() << '\n';
  for (const auto& d : r.converse_witnesses) out << "  " << fmt(d) << '\n';
  Checks checks(out);
  for (const auto& d : r.violations) out << "violation: " << fmt(d) << '\n';
  checks.expect(r.violations.empty(), std::string("condition ") + cond + " implies det T != 0");
  if (n == 4) {
    const auto rows = certificate_sweep(bound, o.jobs);
    std::int64_t max_p = 0;
    std::size_t good = 0, caught = 0;
    for (const auto& row : rows) {
      max_p = std::max(max_p, row.p);
      good += row.f0_ok ? 1 : 0;
      caught += row.mutant_polynomial ? 0 : 1;
    }
    out << "f0 certificate sweep: " << rows.size() << " instances with (*), largest p = " << max_p << '\n';
    checks.expect(good == rows.size(), std::to_string(good) + "/" + std::to_string(rows.size()) +
                                           " f0 certificates are polynomials");
    if (!rows.empty())
      checks.expect(caught >= 1, "lowering p1 below p*xi1 breaks polynomiality on " + std::to_string(caught) +
                                     " instance(s)");
  }
  return finish(out, checks.ok());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for monomial and Kuroda-type subalgebra intersections", "h14"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--config", o.config_path, "JSON instance config {n, gamma, delta, field, U}");
  app.add_option("--dmax", o.dmax, "degree or box bound")->check(CLI::NonNegativeNumber);
  app.add_option("--field", o.field, "Q or Fp:<p>");
  app.add_option("--seed", o.seed, "seed for random instances");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out_path, "write the TSV table here (basis to <path>.basis)");

  auto* check = app.add_subcommand("check-conditions", "print conditions, det T and xi for an instance");
  auto* verify = app.add_subcommand("verify", "run the checks behind one result");
  verify->add_option("id", o.verify_id, "t2.5i t2.5ii p2.6 t2.8 l2.13 t2.14 l2.15 r2.16 l3.1 l3.2")->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis and intersection generators for U");
  auto* intersect = app.add_subcommand("intersect", "bounded-degree K[pi] intersect K[X]");
  auto* scan = app.add_subcommand("scan", "exhaustive implication scan over a delta box");
  scan->add_option("--n", o.scan_n, "3 or 4");
  scan->add_option("--bound", o.bound, "largest delta entry");
  for (auto* sub : {check, verify, hilbert, intersect, scan}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (check->parsed()) {
      o.command = "check-conditions";
      return cmd_check_conditions(o, out);
    }
    if (verify->parsed()) {
      o.command = "verify";
      return cmd_verify(o, out);
    }
    if (hilbert->parsed()) {
      o.command = "hilbert";
      return cmd_hilbert(o, out);
    }
    if (intersect->parsed()) {
      o.command = "intersect";
      return cmd_intersect(o, out);
    }
    o.command = "scan";
    return cmd_scan(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kAssertion;
  }
}

}  // namespace h14::cli
