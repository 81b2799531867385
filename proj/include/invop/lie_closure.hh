#ifndef INVOP_LIE_CLOSURE_HH
#define INVOP_LIE_CLOSURE_HH

#include <vector>

#include "invop/weyl.hh"

namespace invop {

// Echelonized Q-span of operators, keyed by pivot term. Insertion reduces
// against the existing rows with exact arithmetic; rank is the row count.
class WeylSpan {
 public:
  // Returns true when v was independent of the current span.
  bool insert(WeylOp v);
  std::size_t rank() const { return rows_.size(); }
  std::vector<WeylOp> rows() const;

 private:
  std::map<WeylOp::Key, WeylOp> rows_;
};

// dims[i] = dim of the span of the generators together with all nested
// commutators of bracket length <= i+1 (left-normed brackets suffice to
// span each homogeneous Lie component).
std::vector<std::size_t> lie_closure_dims(const std::vector<WeylOp>& generators, int depth);

}  // namespace invop

#endif
