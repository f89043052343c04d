#include "h14/derivation.hpp"

#include <algorithm>
#include <functional>

#include "h14/echelon.hpp"
#include "h14/errors.hpp"

namespace h14 {

LaurentPoly apply_e(const LaurentPoly& f) {
  LaurentPoly out(f.nvars(), f.field());
  for (std::size_t i = 0; i < f.nvars(); ++i) out += partial_derivative(f, i);
  return out;
}

bool kernel_check(const LaurentPoly& f) { return apply_e(f).is_zero(); }

std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, std::size_t d) {
  std::vector<ExponentVector> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  ExponentVector e(nvars);
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      e[i] = k;
      fill(i + 1, left - k);
    }
  };
  fill(0, static_cast<std::int64_t>(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LaurentPoly> kernel_degree_basis(std::size_t d, std::size_t nvars, const Field& field) {
  if (!field.is_rational()) {
    throw PreconditionError("kernel dimensions are only meaningful in characteristic 0 (got " +
                            field.to_string() + ")");
  }
  std::vector<LaurentPoly> basis;
  // E lowers degree by one, so the kernel splits by homogeneous degree.
  for (std::size_t deg = 0; deg <= d; ++deg) {
    std::vector<LaurentPoly> images, monos;
    for (const auto& e : monomials_of_degree(nvars, deg)) {
      LaurentPoly m = LaurentPoly::monomial(e, field);
      images.push_back(apply_e(m));
      monos.push_back(std::move(m));
    }
    for (auto& b : constrained_span(images, monos, nvars, nvars, field)) basis.push_back(std::move(b));
  }
  return basis;
}

bool support_property_check(const LaurentPoly& f) {
  if (!is_polynomial(f)) throw PreconditionError("support property concerns polynomials; input has negative exponents");
  if (f.nvars() == 0) return true;
  const std::size_t last = f.nvars() - 1;
  for (const auto& [e, c] : f.terms()) {
    if (e[last] <= 0) continue;
    std::int64_t rest = 0;
    for (std::size_t i = 0; i < last; ++i) rest += e[i];
    if (rest <= 0) return false;
  }
  return true;
}

}  // namespace h14
