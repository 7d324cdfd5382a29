#pragma once

// Face enumeration for small convex polytopes given by their vertex points,
// in exact arithmetic. Points are the columns of a matrix; subsets are
// sorted column indices.

#include "cellres/rational.hpp"

#include <set>
#include <vector>

namespace cellres {

using PointSubset = std::vector<int>;

RationalMatrix select_columns(const RationalMatrix& points, const PointSubset& subset);

/// Vertex subsets of the facets of conv(points[subset]). A 0-dimensional
/// polytope has the single facet {} (the empty face).
std::vector<PointSubset> polytope_facets(const RationalMatrix& points, const PointSubset& subset);

/// Every nonempty face of conv(points[subset]), the polytope itself included.
std::set<PointSubset> polytope_faces(const RationalMatrix& points, const PointSubset& subset);

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace cellres
