#ifndef INVOP_INTERPOLATE_HH
#define INVOP_INTERPOLATE_HH

#include <utility>
#include <vector>

#include "invop/unipoly.hh"

namespace invop {

// Exact Lagrange interpolation: the unique polynomial of degree < #points
// through all (x, y) pairs. Abscissae must be pairwise distinct.
inline UniPolyQ interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw usage_error("interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw usage_error("duplicate interpolation abscissa " + points[i].first.str());

  Rational q0(0);
  UniPolyQ result = UniPolyQ::zero(q0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPolyQ basis = UniPolyQ::one(q0);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis *= UniPolyQ::from_coeffs({-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    result += basis.scaled(points[i].second / denom);
  }
  return result;
}

}  // namespace invop

#endif
