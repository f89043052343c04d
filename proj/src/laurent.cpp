#include "h14/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "h14/errors.hpp"

namespace h14 {

LaurentPoly LaurentPoly::constant(std::size_t n, const Scalar& c) {
  return monomial(ExponentVector(n), c);
}

LaurentPoly LaurentPoly::constant(std::size_t n, const Field& field, long c) {
  return constant(n, Scalar(field, c));
}

LaurentPoly LaurentPoly::monomial(ExponentVector e, const Scalar& c) {
  LaurentPoly f(e.size(), c.field());
  if (!c.is_zero()) f.terms_.emplace(std::move(e), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(ExponentVector e, const Field& field, long c) {
  return monomial(std::move(e), Scalar(field, c));
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t i, const Field& field) {
  if (i >= n) throw UsageError("variable index out of range");
  return monomial(ExponentVector::unit(n, i), field);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Scalar LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const LaurentPoly::Terms::value_type& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const ExponentVector& e, const Scalar& c) {
  if (e.size() != n_) throw ShapeError("term " + e.to_string() + " has wrong arity");
  if (c.field() != field_) throw FieldMismatchError("coefficient field differs from polynomial field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (o.n_ != n_) {
    throw ShapeError("polynomials over " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                     " variables");
  }
  if (o.field_ != field_) {
    throw FieldMismatchError("polynomials over " + field_.to_string() + " and " + o.field_.to_string());
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly out(a.n_, a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    if (c.field() != field_) throw FieldMismatchError("scalar field differs from polynomial field");
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(std::int64_t k) const {
  if (k < 0) {
    if (!is_monomial()) throw UsageError("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Scalar coef = Scalar::one(field_);
    const Scalar inv = c.inverse();
    for (std::int64_t i = 0; i < -k; ++i) coef *= inv;
    return monomial(e.scaled(k), coef);
  }
  LaurentPoly result = constant(n_, field_, 1);
  LaurentPoly base = *this;
  for (auto e = static_cast<std::uint64_t>(k); e > 0; e >>= 1U) {
    if (e & 1U) result *= base;
    if (e > 1) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::to_field(const Field& target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw FieldMismatchError("only rational polynomials can change field");
  LaurentPoly out(n_, target);
  for (const auto& [e, c] : terms_) out.add_term(e, Scalar(target, c.rational()));
  return out;
}

std::set<ExponentVector> support(const LaurentPoly& f) {
  std::set<ExponentVector> s;
  for (const auto& [e, c] : f.terms()) s.insert(e);
  return s;
}

bool is_polynomial(const LaurentPoly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return t.first.is_nonnegative(); });
}

LaurentPoly substitute(const LaurentPoly& f, std::span<const LaurentPoly> images) {
  if (images.size() != f.nvars()) {
    throw UsageError("substitution needs " + std::to_string(f.nvars()) + " images, got " +
                     std::to_string(images.size()));
  }
  if (images.empty()) throw UsageError("substitution with no images");
  const std::size_t m = images.front().nvars();
  std::vector<ExponentVector> exps;
  std::vector<Scalar> coefs;
  for (std::size_t j = 0; j < images.size(); ++j) {
    const auto& img = images[j];
    if (!img.is_monomial()) {
      throw UsageError("image of variable " + std::to_string(j + 1) + " is not a single monomial");
    }
    if (img.nvars() != m) throw ShapeError("substitution images over different variable counts");
    if (img.field() != f.field()) throw FieldMismatchError("substitution image over a different field");
    exps.push_back(img.terms().begin()->first);
    coefs.push_back(img.terms().begin()->second);
  }
  LaurentPoly out(m, f.field());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector target(m);
    Scalar coef = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      target += exps[j].scaled(e[j]);
      if (!coefs[j].is_one()) {
        const Scalar base = e[j] > 0 ? coefs[j] : coefs[j].inverse();
        for (std::int64_t k = 0; k < (e[j] > 0 ? e[j] : -e[j]); ++k) coef *= base;
      }
    }
    out.add_term(target, coef);
  }
  return out;
}

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t i) {
  if (i >= f.nvars()) throw UsageError("variable index out of range");
  LaurentPoly out(f.nvars(), f.field());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    ExponentVector d = e;
    d[i] -= 1;
    out.add_term(d, c * Scalar(f.field(), static_cast<long>(e[i])));
  }
  return out;
}

std::map<std::int64_t, LaurentPoly> grade_by(const LaurentPoly& f, std::span<const std::int64_t> weights) {
  if (weights.size() != f.nvars()) throw ShapeError("weight vector length differs from variable count");
  std::map<std::int64_t, LaurentPoly> parts;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * weights[i];
    parts.try_emplace(deg, f.nvars(), f.field()).first->second.add_term(e, c);
  }
  return parts;
}

mpq_class weighted_degree(const ExponentVector& e, std::span<const mpq_class> weights) {
  if (weights.size() != e.size()) throw ShapeError("weight vector length differs from variable count");
  mpq_class deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) deg += weights[i] * static_cast<long>(e[i]);
  return deg;
}

bool is_homogeneous(const LaurentPoly& f, std::span<const mpq_class> weights, const mpq_class& degree) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return weighted_degree(t.first, weights) == degree; });
}

// ---------------------------------------------------------------- text forms

std::string to_text(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.to_string();
    if (f.nvars() > 0) out += " *";
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      out += " X" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
    }
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("malformed integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

Scalar parse_coefficient(std::string_view s, const Field& field, std::string_view context) {
  mpq_class q;
  if (s.empty() || q.set_str(std::string(s), 10) != 0) {
    throw ValidationError("malformed coefficient '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  q.canonicalize();
  if (q.get_str() != s) {
    throw ValidationError("coefficient '" + std::string(s) + "' is not in canonical p/q form");
  }
  if (!field.is_rational() && (q.get_den() != 1 || q < 0 || q >= field.characteristic())) {
    throw ValidationError("residue '" + std::string(s) + "' outside [0, p)");
  }
  return Scalar(field, q);
}

}  // namespace

LaurentPoly parse_text(std::string_view text, std::size_t n, const Field& field) {
  LaurentPoly f(n, field);
  if (text == "0") return f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos ? text.npos : next - pos);
    std::istringstream in{std::string(term)};
    std::string coef;
    in >> coef;
    ExponentVector e(n);
    if (n > 0) {
      std::string star;
      in >> star;
      if (star != "*") throw ValidationError("expected '*' after coefficient in '" + std::string(term) + "'");
      for (std::size_t i = 0; i < n; ++i) {
        std::string tok;
        if (!(in >> tok)) throw ValidationError("missing variable in '" + std::string(term) + "'");
        const std::string want = "X" + std::to_string(i + 1) + "^";
        if (!tok.starts_with(want)) {
          throw ValidationError("expected " + want + "<e> in '" + std::string(term) + "'");
        }
        e[i] = parse_int(std::string_view(tok).substr(want.size()), term);
      }
    }
    std::string extra;
    if (in >> extra) throw ValidationError("trailing token '" + extra + "' in '" + std::string(term) + "'");
    const Scalar c = parse_coefficient(coef, field, term);
    if (c.is_zero()) throw ValidationError("zero coefficient in '" + std::string(term) + "'");
    if (f.terms().contains(e)) throw ValidationError("repeated monomial in '" + std::string(text) + "'");
    f.add_term(e, c);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return f;
}

std::string to_pretty(const LaurentPoly& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "X" + std::to_string(i + 1); };
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef = c.to_string();
    bool negative = !coef.empty() && coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

}  // namespace h14
