#pragma once

#include "cellres/exponent.hpp"
#include "cellres/polytope.hpp"
#include "cellres/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cellres {

/// Sorted positions into the vertex array of the owning complex. The empty
/// key is the empty face.
using FaceKey = std::vector<int>;
using FaceIndex = std::size_t;

struct Vertex {
  int id = 0;
  RationalVector coords;
  ExponentVector label;
};

/// An oriented face. The orientation is an ordered basis (columns) of the
/// linear span of the face; faces of dimension <= 0 carry an empty basis.
struct Face {
  FaceKey vertices;
  int dim = -1;
  RationalMatrix orientation_basis;
  ExponentVector label;
};

/// A cell to be added to a complex, optionally with a prescribed orientation.
struct CellSpec {
  FaceKey vertices;
  std::optional<RationalMatrix> orientation_basis;
};

/// Oriented polyhedral cell complex with monomial vertex labels and exact
/// rational vertex coordinates. Faces are stored in (dim, key) order, the
/// empty face first. Immutable once built.
class LabeledCellComplex {
 public:
  /// Adds every geometric face of every given cell. Faces without a
  /// prescribed orientation get default_orientation().
  static LabeledCellComplex generate(std::size_t ambient, std::vector<Vertex> vertices,
                                     const std::vector<CellSpec>& cells);

  /// Uses the faces exactly as given (they must already be closed under
  /// taking faces); the empty face is added if missing. Labels are
  /// recomputed from the vertices. Throws PreconditionError when the data
  /// violates the complex invariants.
  static LabeledCellComplex from_faces(std::size_t ambient, std::vector<Vertex> vertices,
                                       std::vector<Face> faces);

  std::size_t ambient_dimension() const noexcept { return ambient_; }
  std::size_t nvars() const noexcept { return nvars_; }
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 2; }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(FaceIndex i) const { return faces_.at(i); }

  /// Indices of the faces of dimension k (k >= -1), in key order.
  std::span<const FaceIndex> faces_of_dim(int k) const;
  std::optional<FaceIndex> find(const FaceKey& key) const;
  FaceIndex empty_face() const { return 0; }

  /// Codimension-one faces of face i.
  const std::vector<FaceIndex>& facets(FaceIndex i) const { return facets_.at(i); }

  /// Vertex coordinates of a face as matrix columns.
  RationalMatrix vertex_matrix(FaceIndex i) const;
  RationalVector barycenter(FaceIndex i) const;
  /// External vertex ids of a face, in key order.
  std::vector<int> vertex_ids(FaceIndex i) const;

  /// Copy with a different orientation basis on one face.
  LabeledCellComplex reoriented(FaceIndex i, RationalMatrix basis) const;
  /// Copy with the orientation of one face reversed.
  LabeledCellComplex flipped(FaceIndex i) const;

 private:
  friend LabeledCellComplex subcomplex_leq(const LabeledCellComplex& x, const ExponentVector& beta);

  LabeledCellComplex() = default;
  void index();

  std::size_t ambient_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Face> faces_;
  std::vector<std::vector<FaceIndex>> by_dim_;
  std::map<FaceKey, FaceIndex> lookup_;
  std::vector<std::vector<FaceIndex>> facets_;
};

/// Orientation from the first affinely independent vertices u_0..u_k in key
/// order: the basis (u_0 - u_k, ..., u_{k-1} - u_k).
RationalMatrix default_orientation(const std::vector<Vertex>& vertices, const FaceKey& key);

/// Basis with its first vector negated.
RationalMatrix opposite_orientation(const RationalMatrix& basis);

/// sign(tau, sigma) for a facet tau of sigma, from an inward normal of tau
/// in sigma (the barycenter difference projected off span(tau)).
int sign_facet(const LabeledCellComplex& x, FaceIndex tau, FaceIndex sigma);

/// sign(sigma', sigma) for two orientations of the same linear span.
/// Throws PreconditionError when dimensions or spans differ.
int sign_same_span(const RationalMatrix& sub_basis, const RationalMatrix& super_basis);
int sign_same_span(const Face& sub, const Face& super);

/// Faces of dimension k having tau as a facet.
std::vector<FaceIndex> cofaces(const LabeledCellComplex& x, FaceIndex tau, int k);

/// Faces whose label divides z^beta, with their orientations.
LabeledCellComplex subcomplex_leq(const LabeledCellComplex& x, const ExponentVector& beta);

/// Point lies in the simplex spanned by the columns of `simplex`.
bool point_in_simplex(const RationalVector& point, const RationalMatrix& simplex);

/// k-dimensional volume of face i of x measured in the affine frame of the
/// k-simplex `frame` (columns are its vertices), so the frame simplex itself
/// has measure 1. The face must lie in the affine hull of the frame.
Rational relative_volume(const LabeledCellComplex& x, FaceIndex i, const RationalMatrix& frame);

/// Sub-simplices of face i from pulling its smallest vertex; each entry
/// lists the vertex positions of one top simplex.
std::vector<FaceKey> pulling_triangulation(const LabeledCellComplex& x, FaceIndex i);

struct RefinementReport {
  bool ok = false;
  std::string reason;
};

/// X refines Y, where Y must consist of the faces of a single simplex:
/// |X| = |Y| (vertex containment plus face-by-face volume sums), every face
/// of X lies in a face of Y, and containment implies label divisibility.
RefinementReport check_refinement(const LabeledCellComplex& x, const LabeledCellComplex& y);
inline bool is_refinement(const LabeledCellComplex& x, const LabeledCellComplex& y) {
  return check_refinement(x, y).ok;
}

/// Faces sigma' of X of dimension k contained in the simplex face sigma of
/// Y: the variables of sigma' lie in the support of sigma's label and its
/// vertices lie in sigma.
std::vector<FaceIndex> contained_faces(const LabeledCellComplex& y, FaceIndex sigma,
                                       const LabeledCellComplex& x, int k);

}  // namespace cellres
