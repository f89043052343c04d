#include "h14/echelon.hpp"

#include "h14/errors.hpp"

namespace h14 {

LaurentPoly Echelon::reduce(LaurentPoly v) const {
  if (v.nvars() != n_ || v.field() != field_) throw UsageError("echelon row has the wrong shape or field");
  if (rows_.empty()) return v;
  // Walk v's support downwards; subtracting a row only touches smaller keys.
  auto it = v.terms().rbegin();
  while (it != v.terms().rend()) {
    const ExponentVector key = it->first;
    auto row = rows_.find(key);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Scalar c = it->second;
    for (const auto& [e, rc] : row->second.terms()) v.add_term(e, -(c * rc));
    // Restart strictly below the eliminated key.
    auto below = v.terms().lower_bound(key);
    it = std::make_reverse_iterator(below);
  }
  return v;
}

bool Echelon::insert(const LaurentPoly& v) {
  LaurentPoly r = reduce(v);
  if (r.is_zero()) return false;
  const auto [pivot, lead] = r.leading_term();
  r *= lead.inverse();
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<LaurentPoly> Echelon::reduced_basis() const {
  Echelon full(n_, field_);
  // Ascending pivots: each row only needs reducing by rows with smaller pivots.
  for (const auto& [pivot, row] : rows_) {
    LaurentPoly r(n_, field_);
    const Scalar lead = row.coefficient(pivot);
    LaurentPoly tail = row;
    tail.add_term(pivot, -lead);
    r = full.reduce(tail);
    r.add_term(pivot, lead);
    full.rows_.emplace(pivot, std::move(r));
  }
  std::vector<LaurentPoly> out;
  out.reserve(full.rows_.size());
  for (auto it = full.rows_.rbegin(); it != full.rows_.rend(); ++it) out.push_back(it->second);
  return out;
}

std::vector<LaurentPoly> canonical_basis(const std::vector<LaurentPoly>& vectors, std::size_t n,
                                         const Field& field) {
  Echelon ech(n, field);
  for (const auto& v : vectors) ech.insert(v);
  return ech.reduced_basis();
}

namespace {

// Embeds v into n+1 coordinates with a leading block tag.
LaurentPoly tagged(const LaurentPoly& v, std::size_t n_out, std::int64_t tag) {
  LaurentPoly out(n_out + 1, v.field());
  for (const auto& [e, c] : v.terms()) {
    ExponentVector x(n_out + 1);
    x[0] = tag;
    for (std::size_t i = 0; i < e.size(); ++i) x[i + 1] = e[i];
    out.add_term(x, c);
  }
  return out;
}

// Pads v (over k variables) with zeros up to width.
LaurentPoly widen(const LaurentPoly& v, std::size_t width) {
  LaurentPoly out(width, v.field());
  for (const auto& [e, c] : v.terms()) {
    ExponentVector x(width);
    for (std::size_t i = 0; i < e.size(); ++i) x[i] = e[i];
    out.add_term(x, c);
  }
  return out;
}

LaurentPoly untag(const LaurentPoly& v, std::size_t n) {
  LaurentPoly out(n, v.field());
  for (const auto& [e, c] : v.terms()) {
    ExponentVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e[i + 1];
    out.add_term(x, c);
  }
  return out;
}

}  // namespace

std::vector<LaurentPoly> constrained_span(const std::vector<LaurentPoly>& constraints,
                                          const std::vector<LaurentPoly>& payloads, std::size_t constraint_n,
                                          std::size_t payload_n, const Field& field) {
  if (constraints.size() != payloads.size()) throw UsageError("constraint/payload count mismatch");
  const std::size_t width = std::max(constraint_n, payload_n);
  Echelon ech(width + 1, field);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    LaurentPoly row = tagged(widen(constraints[i], width), width, 1);
    row += tagged(widen(payloads[i], width), width, 0);
    ech.insert(row);
  }
  std::vector<LaurentPoly> kernel;
  for (const auto& [pivot, row] : ech.rows()) {
    if (pivot[0] != 0) continue;
    LaurentPoly p = untag(row, width);
    LaurentPoly narrow(payload_n, field);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector x(payload_n);
      for (std::size_t i = 0; i < payload_n; ++i) x[i] = e[i];
      narrow.add_term(x, c);
    }
    kernel.push_back(std::move(narrow));
  }
  return canonical_basis(kernel, payload_n, field);
}

std::vector<LaurentPoly> intersect_spans(const std::vector<LaurentPoly>& u, const std::vector<LaurentPoly>& w,
                                         std::size_t n, const Field& field) {
  std::vector<LaurentPoly> constraints, payloads;
  for (const auto& x : u) {
    constraints.push_back(x);
    payloads.push_back(x);
  }
  for (const auto& x : w) {
    constraints.push_back(x);
    payloads.push_back(LaurentPoly(n, field));
  }
  // Rows (u|u), (w|0): a combination vanishing on the left has right part in
  // span(u) that equals a combination of w.
  return constrained_span(constraints, payloads, n, n, field);
}

}  // namespace h14
