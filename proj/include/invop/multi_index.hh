#ifndef INVOP_MULTI_INDEX_HH
#define INVOP_MULTI_INDEX_HH

#include <cstdint>
#include <optional>
#include <vector>

#include "invop/errors.hh"

namespace invop {

// Exponent vector of a monomial x^alpha. Length is fixed by the ambient
// variable count; entries are non-negative. Ordered by graded lexicographic
// comparison (total degree first, then leftmost-largest entry wins).
class MultiIndex {
 public:
  explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
  static MultiIndex unit(std::size_t nvars, std::size_t i);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint32_t v) { e_[i] = v; }
  unsigned long degree() const;

  MultiIndex operator+(const MultiIndex& o) const;
  // Componentwise subtraction; empty when any entry would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& o) const;
  bool leq(const MultiIndex& o) const;  // componentwise
  MultiIndex min(const MultiIndex& o) const;

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }
  bool operator<(const MultiIndex& o) const;  // grlex

 private:
  void check_same_size(const MultiIndex& o) const;
  std::vector<std::uint32_t> e_;
};

}  // namespace invop

#endif
