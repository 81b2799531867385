#include "invop/lie_closure.hh"

namespace invop {

bool WeylSpan::insert(WeylOp v) {
  while (!v.is_zero()) {
    const auto pivot = v.terms().begin()->first;
    auto it = rows_.find(pivot);
    if (it == rows_.end()) {
      Rational lead = v.terms().begin()->second;
      rows_.emplace(pivot, v.scaled(Rational(1) / lead));
      return true;
    }
    v -= it->second.scaled(v.terms().begin()->second);
  }
  return false;
}

std::vector<WeylOp> WeylSpan::rows() const {
  std::vector<WeylOp> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> lie_closure_dims(const std::vector<WeylOp>& generators, int depth) {
  if (depth < 1) throw usage_error("closure depth must be >= 1");
  if (generators.empty()) return std::vector<std::size_t>(depth, 0);

  WeylSpan span;
  for (const WeylOp& g : generators) span.insert(g);

  std::vector<std::size_t> dims{span.rank()};
  for (int d = 2; d <= depth; ++d) {
    const std::vector<WeylOp> snapshot = span.rows();
    for (const WeylOp& row : snapshot)
      for (const WeylOp& g : generators) span.insert(commutator(row, g));
    dims.push_back(span.rank());
  }
  return dims;
}

}  // namespace invop
