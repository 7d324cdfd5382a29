#include "cellres/polytope.hpp"

#include "cellres/linalg.hpp"

namespace cellres {

RationalMatrix select_columns(const RationalMatrix& points, const PointSubset& subset) {
  RationalMatrix out(points.rows(), static_cast<Eigen::Index>(subset.size()));
  for (std::size_t j = 0; j < subset.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = points.col(subset[j]);
  return out;
}

std::vector<PointSubset> polytope_facets(const RationalMatrix& points, const PointSubset& subset) {
  const RationalMatrix local = select_columns(points, subset);
  const RationalMatrix span = affine_span_basis(local);
  const Eigen::Index dim = span.cols();
  if (dim == 0) return {PointSubset{}};

  std::set<PointSubset> found;
  const int m = static_cast<int>(subset.size());
  for_each_combination(m, static_cast<int>(dim), [&](const std::vector<int>& choice) {
    PointSubset chosen;
    for (int c : choice) chosen.push_back(subset[static_cast<std::size_t>(c)]);
    const RationalMatrix hyper_points = select_columns(points, chosen);
    const RationalMatrix hyper = affine_span_basis(hyper_points);
    if (hyper.cols() != dim - 1) return;
    RationalVector normal;
    for (Eigen::Index j = 0; j < dim; ++j) {
      RationalVector candidate = project_orthogonal<Rational>(span.col(j), hyper);
      if (!candidate.isZero()) {
        normal = std::move(candidate);
        break;
      }
    }
    const RationalVector base = hyper_points.col(0);
    bool any_positive = false;
    bool any_negative = false;
    PointSubset on_plane;
    for (int p : subset) {
      const Rational value = normal.dot(RationalVector(points.col(p) - base));
      if (value > 0) any_positive = true;
      if (value < 0) any_negative = true;
      if (value == 0) on_plane.push_back(p);
    }
    if (any_positive && any_negative) return;
    found.insert(on_plane);
  });
  return {found.begin(), found.end()};
}

std::set<PointSubset> polytope_faces(const RationalMatrix& points, const PointSubset& subset) {
  std::set<PointSubset> faces;
  std::vector<PointSubset> pending{subset};
  while (!pending.empty()) {
    PointSubset current = std::move(pending.back());
    pending.pop_back();
    if (current.empty() || !faces.insert(current).second) continue;
    for (auto& facet : polytope_facets(points, current)) pending.push_back(std::move(facet));
  }
  return faces;
}

}  // namespace cellres
