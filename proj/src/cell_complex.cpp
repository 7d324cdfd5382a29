#include "cellres/cell_complex.hpp"

#include "cellres/error.hpp"
#include "cellres/linalg.hpp"

#include <algorithm>
#include <set>

namespace cellres {

namespace {

bool is_subset(const FaceKey& small, const FaceKey& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string key_string(const FaceKey& key) {
  std::string out = "{";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(key[i]);
  }
  return out + "}";
}

RationalMatrix points_of(const std::vector<Vertex>& vertices, const FaceKey& key, std::size_t ambient) {
  RationalMatrix out(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(key.size()));
  for (std::size_t j = 0; j < key.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = vertices[key[j]].coords;
  return out;
}

// The vertices of `sigma` on the far side of a supporting hyperplane through
// `tau` inside aff(sigma): returns true iff tau is cut out by it.
bool is_geometric_facet(const RationalMatrix& sigma_points, const FaceKey& sigma, const FaceKey& tau,
                        const RationalMatrix& tau_points) {
  const RationalMatrix sigma_span = affine_span_basis(sigma_points);
  const RationalMatrix tau_span = affine_span_basis(tau_points);
  if (tau_span.cols() + 1 != sigma_span.cols()) return false;
  RationalVector normal;
  for (Eigen::Index j = 0; j < sigma_span.cols(); ++j) {
    RationalVector candidate = project_orthogonal<Rational>(sigma_span.col(j), tau_span);
    if (!candidate.isZero()) {
      normal = std::move(candidate);
      break;
    }
  }
  if (normal.size() == 0) return false;
  const RationalVector base = tau_points.col(0);
  int side = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const Rational value = normal.dot(RationalVector(sigma_points.col(static_cast<Eigen::Index>(j)) - base));
    const bool in_tau = std::binary_search(tau.begin(), tau.end(), sigma[j]);
    if (value == 0) {
      if (!in_tau) return false;
      continue;
    }
    if (in_tau) return false;
    const int s = sign_of(value);
    if (side != 0 && s != side) return false;
    side = s;
  }
  return true;
}

}  // namespace

RationalMatrix default_orientation(const std::vector<Vertex>& vertices, const FaceKey& key) {
  const std::size_t ambient = vertices.empty() ? 0 : static_cast<std::size_t>(vertices.front().coords.size());
  const RationalMatrix points = points_of(vertices, key, ambient);
  const auto chosen = affinely_independent_subset(points);
  const Eigen::Index k = chosen.empty() ? 0 : static_cast<Eigen::Index>(chosen.size()) - 1;
  RationalMatrix basis(static_cast<Eigen::Index>(ambient), k);
  for (Eigen::Index i = 0; i < k; ++i) basis.col(i) = points.col(chosen[i]) - points.col(chosen[k]);
  return basis;
}

RationalMatrix opposite_orientation(const RationalMatrix& basis) {
  RationalMatrix out = basis;
  if (out.cols() > 0) out.col(0) = -out.col(0);
  return out;
}

LabeledCellComplex LabeledCellComplex::generate(std::size_t ambient, std::vector<Vertex> vertices,
                                                const std::vector<CellSpec>& cells) {
  const FaceKey all = [&] {
    FaceKey k(vertices.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<int>(i);
    return k;
  }();
  for (const auto& v : vertices) {
    if (static_cast<std::size_t>(v.coords.size()) != ambient) {
      throw PreconditionError("coordinates in ambient dimension", "vertex " + std::to_string(v.id));
    }
  }
  const RationalMatrix points = points_of(vertices, all, ambient);
  std::set<FaceKey> keys;
  std::map<FaceKey, RationalMatrix> prescribed;
  for (const auto& cell : cells) {
    for (int v : cell.vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices.size()) {
        throw PreconditionError("known vertices", "cell " + key_string(cell.vertices));
      }
    }
    FaceKey key = cell.vertices;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    for (auto& f : polytope_faces(points, key)) keys.insert(f);
    if (cell.orientation_basis) prescribed[key] = *cell.orientation_basis;
  }
  std::vector<Face> faces;
  for (const auto& key : keys) {
    Face f;
    f.vertices = key;
    if (auto it = prescribed.find(key); it != prescribed.end()) f.orientation_basis = it->second;
    faces.push_back(std::move(f));
  }
  return from_faces(ambient, std::move(vertices), std::move(faces));
}

LabeledCellComplex LabeledCellComplex::from_faces(std::size_t ambient, std::vector<Vertex> vertices,
                                                  std::vector<Face> faces) {
  LabeledCellComplex x;
  x.ambient_ = ambient;
  x.nvars_ = vertices.empty() ? 0 : vertices.front().label.size();
  for (const auto& v : vertices) {
    if (static_cast<std::size_t>(v.coords.size()) != ambient) {
      throw PreconditionError("coordinates in ambient dimension", "vertex " + std::to_string(v.id));
    }
    if (v.label.size() != x.nvars_) {
      throw PreconditionError("labels of equal length", "vertex " + std::to_string(v.id));
    }
  }
  x.vertices_ = std::move(vertices);

  std::map<FaceKey, Face> by_key;
  for (auto& f : faces) {
    for (int v : f.vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= x.vertices_.size()) {
        throw PreconditionError("known vertices", "face " + key_string(f.vertices));
      }
    }
    std::sort(f.vertices.begin(), f.vertices.end());
    if (std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end()) {
      throw PreconditionError("distinct face vertices", "face " + key_string(f.vertices));
    }
    FaceKey key = f.vertices;
    by_key[key] = std::move(f);
  }
  by_key.try_emplace(FaceKey{}, Face{});

  for (auto& [key, f] : by_key) {
    const RationalMatrix points = points_of(x.vertices_, key, ambient);
    f.dim = key.empty() ? -1 : static_cast<int>(affine_dimension(points));
    f.label = ExponentVector(x.nvars_);
    for (int v : key) f.label = lcm(f.label, x.vertices_[v].label);
    if (f.dim <= 0) {
      f.orientation_basis = RationalMatrix(static_cast<Eigen::Index>(ambient), 0);
      continue;
    }
    if (f.orientation_basis.cols() == 0) {
      f.orientation_basis = default_orientation(x.vertices_, key);
      continue;
    }
    const RationalMatrix& basis = f.orientation_basis;
    if (basis.rows() != static_cast<Eigen::Index>(ambient) || basis.cols() != f.dim ||
        exact_rank(basis) != f.dim) {
      throw PreconditionError("orientation basis spans the face", "face " + key_string(key));
    }
    const RationalMatrix span = affine_span_basis(points);
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      if (!coordinates_in_basis<Rational>(span, basis.col(j))) {
        throw PreconditionError("orientation basis spans the face", "face " + key_string(key));
      }
    }
  }

  for (const auto& [key, f] : by_key) {
    for (int v : key) {
      if (!by_key.contains(FaceKey{v})) {
        throw PreconditionError("closed under faces", "vertex " + std::to_string(v) + " of face " +
                                                          key_string(key) + " is not a 0-face");
      }
    }
  }
  for (auto a = by_key.begin(); a != by_key.end(); ++a) {
    for (auto b = std::next(a); b != by_key.end(); ++b) {
      FaceKey meet;
      std::set_intersection(a->first.begin(), a->first.end(), b->first.begin(), b->first.end(),
                            std::back_inserter(meet));
      if (!by_key.contains(meet)) {
        throw PreconditionError("faces intersect in faces",
                                key_string(a->first) + " and " + key_string(b->first));
      }
    }
  }

  for (auto& [key, f] : by_key) x.faces_.push_back(std::move(f));
  x.index();

  for (FaceIndex i = 0; i < x.faces_.size(); ++i) {
    const Face& sigma = x.faces_[i];
    if (sigma.dim < 1) continue;
    // The facets of a polytope form a closed pseudomanifold: two endpoints
    // for an edge, and every ridge shared by exactly two facets otherwise.
    const auto& own = x.facets_[i];
    bool closed = sigma.dim > 1 || own.size() == 2;
    for (std::size_t a = 0; closed && sigma.dim > 1 && a < own.size(); ++a) {
      for (FaceIndex ridge : x.facets_[own[a]]) {
        const auto around = std::count_if(own.begin(), own.end(), [&](FaceIndex f) {
          const auto& r = x.facets_[f];
          return std::find(r.begin(), r.end(), ridge) != r.end();
        });
        if (around != 2) closed = false;
      }
    }
    if (!closed) throw PreconditionError("closed under faces", "facets of " + key_string(sigma.vertices));
    const RationalMatrix sigma_points = x.vertex_matrix(i);
    for (FaceIndex t : x.facets_[i]) {
      const Face& tau = x.faces_[t];
      if (!is_geometric_facet(sigma_points, sigma.vertices, tau.vertices, x.vertex_matrix(t))) {
        throw PreconditionError("incidences are geometric facets",
                                key_string(tau.vertices) + " in " + key_string(sigma.vertices));
      }
    }
  }
  return x;
}

void LabeledCellComplex::index() {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  const int top = faces_.empty() ? -1 : faces_.back().dim;
  by_dim_.assign(static_cast<std::size_t>(top + 2), {});
  lookup_.clear();
  for (FaceIndex i = 0; i < faces_.size(); ++i) {
    by_dim_[static_cast<std::size_t>(faces_[i].dim + 1)].push_back(i);
    lookup_[faces_[i].vertices] = i;
  }
  facets_.assign(faces_.size(), {});
  for (FaceIndex i = 0; i < faces_.size(); ++i) {
    const int k = faces_[i].dim;
    if (k < 0) continue;
    for (FaceIndex t : by_dim_[static_cast<std::size_t>(k)]) {
      if (is_subset(faces_[t].vertices, faces_[i].vertices)) facets_[i].push_back(t);
    }
  }
}

std::span<const FaceIndex> LabeledCellComplex::faces_of_dim(int k) const {
  const auto slot = static_cast<std::size_t>(k + 1);
  if (k < -1 || slot >= by_dim_.size()) return {};
  return by_dim_[slot];
}

std::optional<FaceIndex> LabeledCellComplex::find(const FaceKey& key) const {
  if (auto it = lookup_.find(key); it != lookup_.end()) return it->second;
  return std::nullopt;
}

RationalMatrix LabeledCellComplex::vertex_matrix(FaceIndex i) const {
  return points_of(vertices_, faces_.at(i).vertices, ambient_);
}

RationalVector LabeledCellComplex::barycenter(FaceIndex i) const {
  const RationalMatrix points = vertex_matrix(i);
  RationalVector sum = RationalVector::Zero(static_cast<Eigen::Index>(ambient_));
  for (Eigen::Index j = 0; j < points.cols(); ++j) sum += points.col(j);
  return sum / Rational(points.cols());
}

std::vector<int> LabeledCellComplex::vertex_ids(FaceIndex i) const {
  std::vector<int> ids;
  for (int v : faces_.at(i).vertices) ids.push_back(vertices_[v].id);
  return ids;
}

LabeledCellComplex LabeledCellComplex::reoriented(FaceIndex i, RationalMatrix basis) const {
  const Face& f = faces_.at(i);
  if (basis.cols() != f.orientation_basis.cols() || basis.rows() != f.orientation_basis.rows() ||
      (basis.cols() > 0 && exact_rank(MatrixX<Rational>(basis.transpose() * f.orientation_basis)) != basis.cols())) {
    throw PreconditionError("orientation basis spans the face", "face " + key_string(f.vertices));
  }
  LabeledCellComplex copy = *this;
  copy.faces_[i].orientation_basis = std::move(basis);
  return copy;
}

LabeledCellComplex LabeledCellComplex::flipped(FaceIndex i) const {
  return reoriented(i, opposite_orientation(faces_.at(i).orientation_basis));
}

int sign_facet(const LabeledCellComplex& x, FaceIndex tau, FaceIndex sigma) {
  const auto& incident = x.facets(sigma);
  if (std::find(incident.begin(), incident.end(), tau) == incident.end()) {
    throw PreconditionError("tau is a facet of sigma", "face " + key_string(x.face(tau).vertices) +
                                                           " in " + key_string(x.face(sigma).vertices));
  }
  const Face& s = x.face(sigma);
  if (s.dim <= 0) return 1;
  const Face& t = x.face(tau);
  const RationalVector inward =
      project_orthogonal<Rational>(RationalVector(x.barycenter(sigma) - x.barycenter(tau)), t.orientation_basis);
  if (inward.isZero()) {
    throw PreconditionError("nondegenerate orientation", "no inward normal for " + key_string(t.vertices));
  }
  RationalMatrix frame(inward.size(), t.orientation_basis.cols() + 1);
  frame << inward, t.orientation_basis;
  const int s_sigma = same_span_orientation(frame, s.orientation_basis);
  if (s_sigma == 0) {
    throw PreconditionError("nondegenerate orientation", "face " + key_string(s.vertices));
  }
  return s_sigma;
}

int sign_same_span(const RationalMatrix& sub_basis, const RationalMatrix& super_basis) {
  if (sub_basis.cols() != super_basis.cols() || sub_basis.rows() != super_basis.rows()) {
    throw PreconditionError("equal dimensions", "orientation bases of different shape");
  }
  if (sub_basis.cols() == 0) return 1;
  RationalMatrix both(sub_basis.rows(), sub_basis.cols() * 2);
  both << sub_basis, super_basis;
  if (exact_rank(both) != sub_basis.cols()) {
    throw PreconditionError("equal spans", "orientation bases span different subspaces");
  }
  return same_span_orientation(sub_basis, super_basis);
}

int sign_same_span(const Face& sub, const Face& super) {
  if (sub.dim != super.dim) throw PreconditionError("equal dimensions", "faces of different dimension");
  if (sub.dim <= 0) return 1;
  return sign_same_span(sub.orientation_basis, super.orientation_basis);
}

std::vector<FaceIndex> cofaces(const LabeledCellComplex& x, FaceIndex tau, int k) {
  std::vector<FaceIndex> out;
  for (FaceIndex s : x.faces_of_dim(k)) {
    const auto& incident = x.facets(s);
    if (std::find(incident.begin(), incident.end(), tau) != incident.end()) out.push_back(s);
  }
  return out;
}

LabeledCellComplex subcomplex_leq(const LabeledCellComplex& x, const ExponentVector& beta) {
  LabeledCellComplex sub = x;
  std::erase_if(sub.faces_, [&](const Face& f) { return !divides(f.label, beta); });
  sub.index();
  return sub;
}

bool point_in_simplex(const RationalVector& point, const RationalMatrix& simplex) {
  const Eigen::Index k = simplex.cols() - 1;
  if (k < 0) return false;
  const RationalVector base = simplex.col(k);
  RationalMatrix edges(simplex.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) edges.col(j) = simplex.col(j) - base;
  const auto lambda = coordinates_in_basis<Rational>(edges, RationalVector(point - base));
  if (!lambda) return false;
  Rational total = 0;
  for (Eigen::Index j = 0; j < k; ++j) {
    if ((*lambda)(j) < 0) return false;
    total += (*lambda)(j);
  }
  return total <= 1;
}

std::vector<FaceKey> pulling_triangulation(const LabeledCellComplex& x, FaceIndex i) {
  const Face& f = x.face(i);
  if (f.dim <= 0) return {f.vertices};
  const int apex = f.vertices.front();
  std::vector<FaceKey> out;
  for (FaceIndex t : x.facets(i)) {
    const auto& tv = x.face(t).vertices;
    if (std::binary_search(tv.begin(), tv.end(), apex)) continue;
    for (auto simplex : pulling_triangulation(x, t)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Rational relative_volume(const LabeledCellComplex& x, FaceIndex i, const RationalMatrix& frame) {
  const Eigen::Index k = frame.cols() - 1;
  if (x.face(i).dim != k) throw PreconditionError("equal dimensions", "face and frame differ in dimension");
  const RationalVector base = frame.col(k);
  RationalMatrix edges(frame.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) edges.col(j) = frame.col(j) - base;
  auto local = [&](int v) {
    auto lambda = coordinates_in_basis<Rational>(edges, RationalVector(x.vertices()[v].coords - base));
    if (!lambda) throw PreconditionError("face in frame hull", "vertex outside the frame's affine hull");
    return *lambda;
  };
  Rational total = 0;
  for (const auto& simplex : pulling_triangulation(x, i)) {
    const RationalVector origin = local(simplex.front());
    RationalMatrix m(k, k);
    for (Eigen::Index j = 0; j < k; ++j) m.col(j) = local(simplex[static_cast<std::size_t>(j + 1)]) - origin;
    total += boost::multiprecision::abs(exact_determinant(m));
  }
  return total;
}

namespace {

bool face_in_simplex(const LabeledCellComplex& x, FaceIndex i, const RationalMatrix& simplex) {
  for (int v : x.face(i).vertices) {
    if (!point_in_simplex(x.vertices()[v].coords, simplex)) return false;
  }
  return true;
}

std::optional<std::string> simplex_complex_defect(const LabeledCellComplex& y) {
  const int d = y.dimension();
  if (d < 0) return "empty complex";
  const auto tops = y.faces_of_dim(d);
  if (tops.size() != 1) return "more than one top face";
  if (static_cast<int>(y.face(tops.front()).vertices.size()) != d + 1) return "top face is not a simplex";
  if (y.faces().size() != (std::size_t{1} << (d + 1))) return "not all faces of the simplex";
  return std::nullopt;
}

}  // namespace

RefinementReport check_refinement(const LabeledCellComplex& x, const LabeledCellComplex& y) {
  if (auto defect = simplex_complex_defect(y)) {
    throw PreconditionError("Y is a simplex complex", *defect);
  }
  if (x.ambient_dimension() != y.ambient_dimension() || x.nvars() != y.nvars()) {
    return {false, "ambient or label dimensions differ"};
  }
  if (x.dimension() != y.dimension()) return {false, "dimensions differ"};
  const FaceIndex top = y.faces_of_dim(y.dimension()).front();
  const RationalMatrix delta = y.vertex_matrix(top);
  for (const auto& v : x.vertices()) {
    if (!point_in_simplex(v.coords, delta)) return {false, "vertex " + std::to_string(v.id) + " outside |Y|"};
  }
  for (FaceIndex i = 1; i < x.faces().size(); ++i) {
    for (FaceIndex s = 1; s < y.faces().size(); ++s) {
      if (!face_in_simplex(x, i, y.vertex_matrix(s))) continue;
      if (!divides(x.face(i).label, y.face(s).label)) {
        return {false, "label of " + key_string(x.face(i).vertices) + " does not divide label of " +
                           key_string(y.face(s).vertices)};
      }
    }
  }
  for (FaceIndex s = 1; s < y.faces().size(); ++s) {
    const Face& sigma = y.face(s);
    const RationalMatrix frame = y.vertex_matrix(s);
    Rational covered = 0;
    for (FaceIndex i : x.faces_of_dim(sigma.dim)) {
      if (face_in_simplex(x, i, frame)) covered += relative_volume(x, i, frame);
    }
    if (covered != 1) {
      return {false, "faces inside " + key_string(sigma.vertices) + " cover " + format_rational(covered) +
                         " of its volume"};
    }
  }
  return {true, {}};
}

std::vector<FaceIndex> contained_faces(const LabeledCellComplex& y, FaceIndex sigma,
                                       const LabeledCellComplex& x, int k) {
  const Face& s = y.face(sigma);
  if (static_cast<int>(s.vertices.size()) != s.dim + 1) {
    throw PreconditionError("sigma is a simplex", "face " + key_string(s.vertices));
  }
  const auto allowed = support(s.label);
  const RationalMatrix frame = y.vertex_matrix(sigma);
  std::vector<FaceIndex> out;
  for (FaceIndex i : x.faces_of_dim(k)) {
    const auto used = support(x.face(i).label);
    if (!std::includes(allowed.begin(), allowed.end(), used.begin(), used.end())) continue;
    if (k >= 0 && !face_in_simplex(x, i, frame)) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace cellres
