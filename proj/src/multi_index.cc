#include "invop/multi_index.hh"

#include <algorithm>

namespace invop {

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i) {
  MultiIndex m(nvars);
  m.e_.at(i) = 1;
  return m;
}

unsigned long MultiIndex::degree() const {
  unsigned long d = 0;
  for (auto v : e_) d += v;
  return d;
}

void MultiIndex::check_same_size(const MultiIndex& o) const {
  if (e_.size() != o.e_.size())
    throw usage_error("multi-index variable-count mismatch");
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  check_same_size(o);
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
  check_same_size(o);
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) return std::nullopt;
    r.e_[i] -= o.e_[i];
  }
  return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
  check_same_size(o);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

MultiIndex MultiIndex::min(const MultiIndex& o) const {
  check_same_size(o);
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  return r;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  check_same_size(o);
  unsigned long da = degree(), db = o.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
  return false;
}

}  // namespace invop
