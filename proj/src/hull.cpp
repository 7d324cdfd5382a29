#include "cellres/hull.hpp"

#include "cellres/error.hpp"
#include "cellres/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cellres {

Integer minimum_lift_base(std::size_t n) { return factorial(static_cast<unsigned>(n + 1)) + 1; }

void HullParameters::validate() const {
  if (t < minimum_lift_base(n)) {
    throw PreconditionError("t >= (n+1)!+1", "lift base " + t.str() + " is below " + minimum_lift_base(n).str());
  }
}

namespace {

Integer power(const Integer& base, ExponentVector::value_type e) {
  Integer out = 1;
  for (ExponentVector::value_type i = 0; i < e; ++i) out *= base;
  return out;
}

RationalVector lift(const ExponentVector& alpha, const Integer& t) {
  RationalVector p(static_cast<Eigen::Index>(alpha.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i) p(static_cast<Eigen::Index>(i)) = Rational(power(t, alpha[i]));
  return p;
}

// Generalized cross product: a vector orthogonal to the n-1 rows of d.
RationalVector cofactor_normal(const RationalMatrix& d) {
  const Eigen::Index n = d.cols();
  RationalVector c(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RationalMatrix minor(d.rows(), n - 1);
    for (Eigen::Index col = 0, out = 0; col < n; ++col) {
      if (col != j) minor.col(out++) = d.col(col);
    }
    const Rational det = exact_determinant(minor);
    c(j) = (j % 2 == 0) ? det : Rational(-det);
  }
  return c;
}

// Facets of conv(points) + R_+^n with a strictly positive inner normal.
std::set<PointSubset> bounded_facets(const RationalMatrix& points) {
  const int n = static_cast<int>(points.rows());
  const int r = static_cast<int>(points.cols());
  std::set<PointSubset> facets;
  for_each_combination(r, n, [&](const std::vector<int>& choice) {
    RationalMatrix d(n - 1, n);
    for (int i = 1; i < n; ++i) {
      d.row(i - 1) = (points.col(choice[static_cast<std::size_t>(i)]) - points.col(choice[0])).transpose();
    }
    RationalVector normal = cofactor_normal(d);
    if ((normal.array() < 0).all()) normal = -normal;
    if (!(normal.array() > 0).all()) return;
    const Rational level = normal.dot(RationalVector(points.col(choice[0])));
    PointSubset on_plane;
    for (int p = 0; p < r; ++p) {
      const Rational value = normal.dot(RationalVector(points.col(p)));
      if (value < level) return;
      if (value == level) on_plane.push_back(p);
    }
    facets.insert(std::move(on_plane));
  });
  return facets;
}

struct Projection {
  RationalVector weights;  // 1 / (t^{b_i} - 1)

  Rational scale(const RationalVector& p) const {
    const RationalVector shifted = p - RationalVector::Ones(p.size());
    return Rational(1) / weights.dot(shifted);
  }
  RationalVector apply(const RationalVector& p) const {
    const RationalVector ones = RationalVector::Ones(p.size());
    return ones + scale(p) * (p - ones);
  }
  // Derivative of apply() at p, applied to the columns of w.
  RationalMatrix push(const RationalVector& p, const RationalMatrix& w) const {
    const RationalVector shifted = p - RationalVector::Ones(p.size());
    const Rational lambda = scale(p);
    RationalMatrix out(w.rows(), w.cols());
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      const RationalVector col = w.col(j);
      out.col(j) = lambda * col - (lambda * lambda * weights.dot(col)) * shifted;
    }
    return out;
  }
};

Projection projection_for(const LabeledCellComplex& h, const ExponentVector& b) {
  const std::size_t n = b.size();
  if (h.nvars() != n || h.ambient_dimension() != n) {
    throw PreconditionError("hull complex in R^n", "dimension mismatch with b");
  }
  Projection proj;
  proj.weights = RationalVector(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const ExponentVector want = pure_power(n, i, b[i]);
    const auto it = std::find_if(h.vertices().begin(), h.vertices().end(),
                                 [&](const Vertex& v) { return v.label == want; });
    if (it == h.vertices().end()) {
      throw PreconditionError("pure powers among generators", "no vertex labeled " + to_string(want));
    }
    const Rational xi = it->coords(static_cast<Eigen::Index>(i));
    if (xi <= 1) throw PreconditionError("pure powers among generators", "vertex not on the lifted axis");
    proj.weights(static_cast<Eigen::Index>(i)) = Rational(1) / (xi - 1);
  }
  return proj;
}

std::vector<Face> faces_of_all_subsets(std::size_t count) {
  std::vector<Face> faces;
  for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
    Face f;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (std::size_t{1} << i)) f.vertices.push_back(static_cast<int>(i));
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

LabeledCellComplex hull_complex(const MonomialIdeal& m, std::optional<Integer> t) {
  const std::size_t n = m.nvars();
  if (!is_artinian(m)) throw PreconditionError("Artinian", "hull complex requested for a non-Artinian ideal");
  HullParameters params = t ? HullParameters{*t, n} : HullParameters::defaults(n);
  params.validate();
  if (m.size() < n) throw PreconditionError("hull nondegenerate", "fewer generators than variables");

  std::vector<Vertex> vertices;
  RationalMatrix points(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& g = m.generators()[i];
    vertices.push_back({static_cast<int>(i), lift(g, params.t), g});
    points.col(static_cast<Eigen::Index>(i)) = vertices.back().coords;
  }
  std::vector<CellSpec> cells;
  for (const auto& f : bounded_facets(points)) cells.push_back({f, std::nullopt});
  if (cells.empty()) throw PreconditionError("hull nondegenerate", "no bounded facets");

  LabeledCellComplex hull = LabeledCellComplex::generate(n, std::move(vertices), cells);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (!hull.find(FaceKey{static_cast<int>(v)})) {
      throw PreconditionError("hull nondegenerate", "generator " + to_string(m.generators()[v]) + " is not a vertex");
    }
  }
  if (hull.dimension() != static_cast<int>(n) - 1) {
    throw PreconditionError("hull nondegenerate", "hull complex is not (n-1)-dimensional");
  }

  // Orient top faces to agree with [v_1..v_n] after the radial embedding.
  const ExponentVector b = pure_power_exponents(m);
  const Projection proj = projection_for(hull, b);
  const LabeledCellComplex delta = delta_complex(embed_in_simplex(hull, b), b);
  const RationalMatrix& delta_basis = delta.face(delta.faces_of_dim(static_cast<int>(n) - 1).front()).orientation_basis;
  const std::vector<FaceIndex> tops(hull.faces_of_dim(static_cast<int>(n) - 1).begin(),
                                    hull.faces_of_dim(static_cast<int>(n) - 1).end());
  for (FaceIndex i : tops) {
    const RationalMatrix pushed = proj.push(hull.barycenter(i), hull.face(i).orientation_basis);
    if (sign_same_span(pushed, delta_basis) < 0) hull = hull.flipped(i);
  }
  return hull;
}

LabeledCellComplex embed_in_simplex(const LabeledCellComplex& h, const ExponentVector& b) {
  const Projection proj = projection_for(h, b);
  const RationalVector ones = RationalVector::Ones(static_cast<Eigen::Index>(b.size()));
  std::vector<Vertex> vertices = h.vertices();
  for (auto& v : vertices) {
    if (v.coords == ones) throw PreconditionError("p != (1,..,1)", "vertex " + std::to_string(v.id));
    if ((v.coords.array() < 1).any()) throw PreconditionError("p_i >= 1", "vertex " + std::to_string(v.id));
    v.coords = proj.apply(v.coords);
  }
  std::vector<Face> faces;
  for (FaceIndex i = 0; i < h.faces().size(); ++i) {
    Face f = h.face(i);
    if (f.dim > 0) f.orientation_basis = proj.push(h.barycenter(i), f.orientation_basis);
    faces.push_back(std::move(f));
  }
  return LabeledCellComplex::from_faces(h.ambient_dimension(), std::move(vertices), std::move(faces));
}

LabeledCellComplex delta_complex(const LabeledCellComplex& x, const ExponentVector& b) {
  const std::size_t n = b.size();
  if (x.nvars() != n) throw PreconditionError("labels in n variables", "dimension mismatch with b");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    const ExponentVector want = pure_power(n, i, b[i]);
    const auto it = std::find_if(x.vertices().begin(), x.vertices().end(),
                                 [&](const Vertex& v) { return v.label == want; });
    if (it == x.vertices().end()) {
      throw PreconditionError("pure powers among vertex labels", "no vertex labeled " + to_string(want));
    }
    vertices.push_back({static_cast<int>(i), it->coords, want});
  }
  return LabeledCellComplex::from_faces(x.ambient_dimension(), std::move(vertices), faces_of_all_subsets(n));
}

LabeledCellComplex scarf_complex(const MonomialIdeal& m, std::size_t bound, std::optional<Integer> t) {
  const std::size_t r = m.size();
  if (r > bound) {
    throw PreconditionError("generator count within Scarf bound",
                            std::to_string(r) + " generators exceed " + std::to_string(bound));
  }
  const std::size_t n = m.nvars();
  const auto& gens = m.generators();

  struct Seen {
    std::size_t count = 0;
    std::vector<int> subset;
  };
  std::map<ExponentVector, Seen> by_lcm;
  std::vector<int> path;
  auto visit = [&](auto&& self, std::size_t next, const ExponentVector& current) -> void {
    auto& entry = by_lcm[current];
    if (entry.count++ == 0) entry.subset = path;
    for (std::size_t i = next; i < r; ++i) {
      path.push_back(static_cast<int>(i));
      self(self, i + 1, lcm(current, gens[i]));
      path.pop_back();
    }
  };
  visit(visit, 0, ExponentVector(n));

  HullParameters params = t ? HullParameters{*t, n} : HullParameters::defaults(n);
  params.validate();
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < r; ++i) vertices.push_back({static_cast<int>(i), lift(gens[i], params.t), gens[i]});
  if (is_artinian(m)) {
    const ExponentVector b = pure_power_exponents(m);
    RationalVector weights(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      weights(static_cast<Eigen::Index>(i)) = Rational(1) / (Rational(power(params.t, b[i])) - 1);
    }
    const Projection proj{weights};
    for (auto& v : vertices) v.coords = proj.apply(v.coords);
  }

  std::vector<Face> faces;
  for (const auto& [label, seen] : by_lcm) {
    if (seen.count != 1 || seen.subset.empty()) continue;
    Face f;
    f.vertices = seen.subset;
    faces.push_back(std::move(f));
  }
  LabeledCellComplex scarf = LabeledCellComplex::from_faces(n, std::move(vertices), std::move(faces));
  for (const auto& f : scarf.faces()) {
    if (static_cast<int>(f.vertices.size()) != f.dim + 1) {
      throw PreconditionError("Scarf faces are simplices", "affinely dependent Scarf face");
    }
  }
  return scarf;
}

LabeledCellComplex taylor_complex(const MonomialIdeal& m, std::size_t bound) {
  const std::size_t r = m.size();
  if (r > bound) {
    throw PreconditionError("generator count within Taylor bound",
                            std::to_string(r) + " generators exceed " + std::to_string(bound));
  }
  const std::size_t ambient = r - 1;
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector coords = RationalVector::Zero(static_cast<Eigen::Index>(ambient));
    if (i > 0) coords(static_cast<Eigen::Index>(i - 1)) = 1;
    vertices.push_back({static_cast<int>(i), coords, m.generators()[i]});
  }
  return LabeledCellComplex::from_faces(ambient, std::move(vertices), faces_of_all_subsets(r));
}

bool same_face_poset(const LabeledCellComplex& a, const LabeledCellComplex& b) {
  if (a.faces().size() != b.faces().size()) return false;
  for (std::size_t i = 0; i < a.faces().size(); ++i) {
    if (a.face(i).vertices != b.face(i).vertices || a.face(i).label != b.face(i).label) return false;
  }
  return true;
}

}  // namespace cellres
