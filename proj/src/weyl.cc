#include "invop/weyl.hh"

#include <functional>

#include "invop/format.hh"

namespace invop {

WeylOp WeylOp::constant(std::size_t nvars, Rational c) {
  WeylOp d(nvars);
  d.add_term(MultiIndex(nvars), MultiIndex(nvars), c);
  return d;
}

WeylOp WeylOp::coordinate(std::size_t nvars, std::size_t i) {
  WeylOp d(nvars);
  d.add_term(MultiIndex::unit(nvars, i), MultiIndex(nvars), Rational(1));
  return d;
}

WeylOp WeylOp::partial(std::size_t nvars, std::size_t i) {
  WeylOp d(nvars);
  d.add_term(MultiIndex(nvars), MultiIndex::unit(nvars, i), Rational(1));
  return d;
}

WeylOp WeylOp::mult_by(const SparsePoly& p) {
  WeylOp d(p.nvars());
  for (const auto& [m, c] : p.terms()) d.add_term(m, MultiIndex(p.nvars()), c);
  return d;
}

WeylOp WeylOp::constant_coeff(const SparsePoly& p) {
  WeylOp d(p.nvars());
  for (const auto& [m, c] : p.terms()) d.add_term(MultiIndex(p.nvars()), m, c);
  return d;
}

WeylOp WeylOp::euler(std::size_t nvars) {
  WeylOp d(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    d.add_term(MultiIndex::unit(nvars, i), MultiIndex::unit(nvars, i), Rational(1));
  return d;
}

void WeylOp::check_same_nvars(const WeylOp& o) const {
  if (nvars_ != o.nvars_) throw usage_error("operator variable-count mismatch");
}

void WeylOp::add_term(const MultiIndex& alpha, const MultiIndex& beta, const Rational& c) {
  if (alpha.size() != nvars_ || beta.size() != nvars_)
    throw usage_error("operator term variable-count mismatch");
  if (c.is_zero()) return;
  Key key{alpha, beta};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOp WeylOp::operator-() const {
  WeylOp r(nvars_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  check_same_nvars(o);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  check_same_nvars(o);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

namespace {

// Enumerates every k <= bound (componentwise) over the support of bound,
// calling fn(k, coefficient) with coefficient = prod C(beta_i,k_i) *
// falling(gamma_i, k_i) for the Leibniz exchange of d^beta past x^gamma.
void for_each_exchange(const MultiIndex& beta, const MultiIndex& gamma,
                       const std::function<void(const MultiIndex&, const Rational&)>& fn) {
  const std::size_t n = beta.size();
  MultiIndex bound = beta.min(gamma);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] > 0) support.push_back(i);

  MultiIndex k(n);
  std::vector<Rational> partial(support.size() + 1, Rational(1));
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == support.size()) {
      fn(k, partial[pos]);
      return;
    }
    std::size_t i = support[pos];
    for (std::uint32_t ki = 0; ki <= bound[i]; ++ki) {
      k.set(i, ki);
      partial[pos + 1] = partial[pos] * rational_binomial(beta[i], ki) *
                         rational_falling(gamma[i], ki);
      rec(pos + 1);
    }
    k.set(i, 0);
  };
  rec(0);
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  a.check_same_nvars(b);
  WeylOp r(a.nvars_);
  for (const auto& [ka, ca] : a.terms_) {
    const auto& [alpha1, beta1] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto& [alpha2, beta2] = kb;
      Rational c = ca * cb;
      for_each_exchange(beta1, alpha2, [&](const MultiIndex& k, const Rational& coeff) {
        r.add_term(alpha1 + *alpha2.minus(k), *beta1.minus(k) + beta2, c * coeff);
      });
    }
  }
  return r;
}

WeylOp WeylOp::scaled(const Rational& c) const {
  WeylOp r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [k, coeff] : terms_) r.terms_.emplace(k, coeff * c);
  return r;
}

SparsePoly WeylOp::apply(const SparsePoly& p) const {
  if (p.nvars() != nvars_) throw usage_error("operator/polynomial variable-count mismatch");
  SparsePoly r(nvars_);
  for (const auto& [k, c] : terms_) {
    const auto& [alpha, beta] = k;
    for (const auto& [gamma, cm] : p.terms()) {
      auto rest = gamma.minus(beta);
      if (!rest) continue;
      Rational coeff = c * cm;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (beta[i] > 0) coeff *= rational_falling(gamma[i], beta[i]);
      r.add_term(alpha + *rest, coeff);
    }
  }
  return r;
}

std::string WeylOp::str(const std::vector<std::string>& var_names) const {
  auto name = [&](std::size_t i) {
    if (i < var_names.size()) return var_names[i];
    return "x" + std::to_string(i + 1);
  };
  std::vector<std::pair<Rational, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, beta] = it->first;
    std::string body;
    auto append = [&](const MultiIndex& m, bool deriv) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += deriv ? "dx_" + name(i) : name(i);
        if (m[i] > 1) body += "^" + std::to_string(m[i]);
      }
    };
    append(alpha, false);
    append(beta, true);
    parts.emplace_back(it->second, body);
  }
  return join_terms(parts);
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

std::optional<long> graded_degree(const WeylOp& d, const WeylOp& euler) {
  if (d.is_zero()) return 0;
  WeylOp bracket = commutator(euler, d);
  if (bracket.is_zero()) return 0;
  auto it = bracket.terms().begin();
  auto in_d = d.terms().find(it->first);
  if (in_d == d.terms().end()) return std::nullopt;
  Rational ratio = it->second / in_d->second;
  if (!ratio.is_integer()) return std::nullopt;
  if (bracket != d.scaled(ratio)) return std::nullopt;
  return ratio.to_long();
}

std::map<long, WeylOp> split_by_euler_grade(const WeylOp& d) {
  std::map<long, WeylOp> parts;
  for (const auto& [k, c] : d.terms()) {
    long grade = static_cast<long>(k.first.degree()) - static_cast<long>(k.second.degree());
    auto [it, inserted] = parts.emplace(grade, WeylOp(d.nvars()));
    it->second.add_term(k.first, k.second, c);
  }
  return parts;
}

}  // namespace invop
