#include "invop/sparse_poly.hh"

#include "invop/format.hh"

namespace invop {

SparsePoly SparsePoly::constant(std::size_t nvars, Rational c) {
  SparsePoly p(nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

SparsePoly SparsePoly::monomial(MultiIndex alpha, Rational c) {
  SparsePoly p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t i) {
  return monomial(MultiIndex::unit(nvars, i), Rational(1));
}

void SparsePoly::check_same_nvars(const SparsePoly& o) const {
  if (nvars_ != o.nvars_)
    throw usage_error("polynomial variable-count mismatch");
}

std::optional<unsigned long> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

std::optional<unsigned long> SparsePoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned long d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Rational SparsePoly::constant_term() const {
  auto it = terms_.find(MultiIndex(nvars_));
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != nvars_)
    throw usage_error("monomial variable-count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_nvars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_nvars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_nvars(b);
  SparsePoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

SparsePoly SparsePoly::pow(unsigned long k) const {
  SparsePoly r = constant(nvars_, Rational(1));
  for (unsigned long i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string SparsePoly::str(const std::vector<std::string>& var_names) const {
  auto name = [&](std::size_t i) {
    if (i < var_names.size()) return var_names[i];
    return "x" + std::to_string(i + 1);
  };
  std::vector<std::pair<Rational, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const MultiIndex& m = it->first;
    std::string body;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += name(i);
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    parts.emplace_back(it->second, body);
  }
  return join_terms(parts);
}

}  // namespace invop
