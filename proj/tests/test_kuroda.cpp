#include "doctest.h"

#include <random>

#include "h14/errors.hpp"
#include "h14/kuroda.hpp"

using namespace h14;

namespace {

const Field Q = Field::rationals();

DeltaMatrix delta4(std::int64_t diag, std::int64_t off) {
  return {{diag, off, off}, {off, diag, off}, {off, off, diag}};
}

// ξ computed straight from the definition, without the library helper.
std::vector<mpq_class> xi_by_hand(const DeltaMatrix& d) {
  std::vector<mpq_class> out;
  for (std::size_t i = 0; i < 3; ++i) {
    std::int64_t m = INT64_MAX;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != i) m = std::min(m, d[k][i]);
    out.emplace_back(mpq_class(d[i][i], d[i][i] + m));
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("instance construction") {
  const auto inst = build_instance(4, 1, delta4(1, 1));
  CHECK(inst.pis.size() == 3);
  CHECK(inst.pis[0] == LaurentPoly::variable(4, 3, Q) - LaurentPoly::monomial({-1, 1, 1, 0}, Q));
  CHECK(det(inst.t) == 4);
  CHECK(inst.t == IntMatrix{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}});

  const auto n3 = build_instance(3, 1, {{1, 1}, {1, 1}});
  CHECK(n3.pis[2] == LaurentPoly::constant(3, Q, 2) - LaurentPoly::monomial({-2, 2, 0}, Q));

  // π_i is the image of Y_n − Y_i under the change of variables.
  const auto y = pi_in_y(inst);
  for (std::size_t i = 0; i < 3; ++i) CHECK(substitute(y[i], inst.y_images) == inst.pis[i]);

  CHECK_THROWS_WITH_AS(build_instance(4, 1, {{0, 1, 1}, {1, 1, 1}, {1, 1, 1}}), doctest::Contains("delta[1][1]"),
                       ValidationError);
  CHECK_THROWS_AS(build_instance(4, 0, delta4(1, 1)), ValidationError);
  CHECK_THROWS_AS(build_instance(4, 1, {{1, 1}, {1, 1}}), ValidationError);
  // A fourth column carries the X4 exponents; negative values are rejected.
  CHECK_NOTHROW(build_instance(4, 2, {{1, 3, 3, 1}, {3, 1, 3, 0}, {3, 3, 1, 2}}));
  CHECK_THROWS_AS(build_instance(4, 2, {{1, 3, 3, -1}, {3, 1, 3, 0}, {3, 3, 1, 2}}), ValidationError);
}

TEST_CASE("conditions") {
  auto c = check_star(build_instance(4, 1, delta4(1, 1)));
  CHECK(c.value == mpq_class(3, 2));
  CHECK_FALSE(c.holds);
  c = check_star(build_instance(4, 1, delta4(1, 3)));
  CHECK(c.value == mpq_class(3, 4));
  CHECK(c.holds);
  c = check_star(build_instance(4, 1, delta4(1, 2)));
  CHECK(c.value == 1);
  CHECK_FALSE(c.holds);

  auto s = check_starstar(build_instance(3, 1, {{3, 1}, {1, 1}}));
  CHECK(s.value == mpq_class(5, 4));
  CHECK_FALSE(s.holds);
  CHECK(det(build_instance(3, 1, {{3, 1}, {1, 1}}).t) == 2);
  s = check_starstar(build_instance(3, 1, {{1, 9}, {9, 1}}));
  CHECK(s.value == mpq_class(1, 5));
  CHECK(s.holds);
  CHECK_THROWS_AS(check_star(build_instance(3, 1, {{1, 1}, {1, 1}})), UsageError);
  CHECK_THROWS_AS(check_starstar(build_instance(4, 1, delta4(1, 1))), UsageError);
}

TEST_CASE("xi reproduces condition (*)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    DeltaMatrix d(3, std::vector<std::int64_t>(3));
    for (auto& row : d)
      for (auto& v : row) v = e(rng);
    const auto inst = build_instance(4, 1, d);
    const auto want = xi_by_hand(d);
    CHECK(inst.xi == want);
    CHECK(check_star(inst).value == want[0] + want[1] + want[2]);
  }
}

TEST_CASE("implication scans") {
  const auto one = implication_scan(3, 1);
  CHECK(one.instances == 1);
  CHECK(one.violations.empty());
  CHECK(one.converse_witnesses.empty());

  const auto three = implication_scan(3, 3, 2);
  CHECK(three.violations.empty());
  const DeltaMatrix witness{{3, 1}, {1, 1}};
  CHECK(std::find(three.converse_witnesses.begin(), three.converse_witnesses.end(), witness) !=
        three.converse_witnesses.end());

  const auto four = implication_scan(4, 2, 3);
  CHECK(four.instances == 512);
  CHECK(four.violations.empty());
  // Partitioning does not change the report.
  const auto serial = implication_scan(4, 2, 1);
  CHECK(serial.converse_witnesses == four.converse_witnesses);
}

TEST_CASE("p selection for the f0 certificate") {
  const std::vector<mpq_class> quarter{mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 4)};
  auto lp = lemma31_find_p(quarter);
  CHECK(lp.p == 12);
  CHECK(lp.parts == std::array<std::int64_t, 3>{3, 3, 6});

  const std::vector<mpq_class> eighth{mpq_class(1, 8), mpq_class(1, 8), mpq_class(1, 8)};
  lp = lemma31_find_p(eighth);
  CHECK(lp.p == 5);
  CHECK(lp.parts == std::array<std::int64_t, 3>{1, 1, 3});

  const std::vector<mpq_class> bad{mpq_class(1, 2), mpq_class(1, 4), mpq_class(1, 4)};
  CHECK_THROWS_AS(lemma31_find_p(bad), ConditionError);

  // Postconditions on random admissible ξ.
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> num(1, 9), den(10, 40);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpq_class> xi;
    for (int i = 0; i < 3; ++i) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      xi.push_back(q);
    }
    if (xi[0] + xi[1] + xi[2] >= 1) continue;
    const auto r = lemma31_find_p(xi);
    CHECK(r.p * (1 - xi[0] - xi[1] - xi[2]) >= 3);
    CHECK((r.p - 1) * (1 - xi[0] - xi[1] - xi[2]) < 3);
    CHECK(r.parts[0] + r.parts[1] + r.parts[2] == r.p);
    for (int i = 0; i < 3; ++i) {
      CHECK(r.parts[i] >= 1);
      CHECK(r.parts[i] >= r.p * xi[i]);
    }
  }
}

TEST_CASE("certificates f0 and G") {
  const auto good = build_instance(4, 1, delta4(1, 3));
  auto f0 = build_f0(good, 3, 3, 6);
  CHECK(f0.holds);
  CHECK(is_polynomial(f0.poly));
  for (const auto& e : support(f0.poly)) CHECK(e[0] >= 0);

  CHECK(build_f0(good, 0, 0, 0).poly == LaurentPoly::constant(4, Q, 1));
  const auto bad = build_instance(4, 1, delta4(1, 1));
  CHECK_FALSE(build_f0(bad, 1, 1, 1).holds);

  CHECK(build_g(good, 3, 3, 6, 0).poly == f0.poly);
  CHECK(build_g(good, 3, 3, 6, 1).holds);
  CHECK(build_g(good, 0, 0, 0, 0).poly == LaurentPoly::constant(4, Q, 1));

  const auto split = split_for_g(good.xi, 12, 9);
  CHECK(split[0] + split[1] == 9);
  CHECK(split[0] > 12 * good.xi[1]);
  CHECK(split[1] > 12 * good.xi[2]);
  CHECK_THROWS_AS(split_for_g(good.xi, 12, 6), ConditionError);
}

TEST_CASE("pi3 identities") {
  CHECK(verify_t214(build_instance(3, 1, {{1, 1}, {1, 1}})));
  CHECK(verify_t214(build_instance(3, 2, {{2, 1}, {1, 3}})));
  auto mutated = build_instance(3, 1, {{1, 1}, {1, 1}});
  mutated.pis[2] = LaurentPoly::constant(3, Q, 3) - LaurentPoly::monomial({-2, 2, 0}, Q);
  CHECK_FALSE(verify_t214(mutated));
}

TEST_CASE("unit witnesses") {
  const auto inst = build_instance(4, 1, delta4(1, 3));
  const auto w = unit_witnesses(inst);
  REQUIRE(w.size() == 3);
  for (const auto& u : w) {
    CHECK(u.verified);
    // Independent check: Π M_j^{s_j} equals X_i^m.
    LaurentPoly prod = LaurentPoly::constant(4, Q, 1);
    for (std::size_t j = 0; j < 3; ++j) prod *= inst.monomials[j].pow(u.solution.row[j].get_si());
    ExponentVector target(4);
    target[u.index] = u.solution.multiplier.get_si();
    CHECK(prod == LaurentPoly::monomial(target, Q));
  }
  CHECK_THROWS_AS(unit_witnesses(build_instance(3, 1, {{1, 1}, {1, 1}})), SingularMatrixError);
}
