#include "cellres/io.hpp"

#include "cellres/error.hpp"

#include <limits>
#include <map>
#include <set>

namespace cellres {

namespace {

void require_keys(const Json& j, const std::set<std::string>& allowed, const std::set<std::string>& required,
                  const std::string& what) {
  if (!j.is_object()) throw PreconditionError(what + " is an object", j.type_name());
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw PreconditionError("known keys in " + what, "unknown key \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw PreconditionError("required keys in " + what, "missing \"" + key + "\"");
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw PreconditionError("rational coordinates are \"p/q\" strings", j.dump());
  return parse_rational(j.get<std::string>());
}

RationalVector vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw PreconditionError(what + " is an array", j.dump());
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json exponent_to_json(const ExponentVector& e) { return Json(e.entries()); }

ExponentVector exponent_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("exponent vector is an integer array", j.dump());
  std::vector<ExponentVector::value_type> entries;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw PreconditionError("exponent vector is an integer array", j.dump());
    entries.push_back(x.get<ExponentVector::value_type>());
  }
  return ExponentVector(std::move(entries));
}

MonomialIdeal ideal_from_json(const Json& j) {
  require_keys(j, {"n", "generators"}, {"n", "generators"}, "ideal");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1) {
    throw PreconditionError("n >= 1", j["n"].dump());
  }
  const auto n = j["n"].get<std::size_t>();
  if (!j["generators"].is_array()) throw PreconditionError("generators is an array", j["generators"].dump());
  std::vector<ExponentVector> gens;
  for (const auto& g : j["generators"]) {
    gens.push_back(exponent_from_json(g));
    if (gens.back().size() != n) {
      throw PreconditionError("generators have length n", "generator " + g.dump() + " with n = " + std::to_string(n));
    }
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

Json ideal_to_json(const MonomialIdeal& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(exponent_to_json(g));
  return Json{{"n", m.nvars()}, {"generators", gens}};
}

LabeledCellComplex complex_from_json(const Json& j) {
  // "dim", "label" and "f_vector" are accepted so that emitted complexes
  // read back; they are checked against the rebuilt complex.
  require_keys(j, {"vertices", "faces", "f_vector"}, {"vertices", "faces"}, "complex");
  if (!j["vertices"].is_array() || j["vertices"].empty()) {
    throw PreconditionError("complex has vertices", "empty or malformed vertex list");
  }
  std::vector<Vertex> vertices;
  std::map<int, int> position;
  for (const auto& v : j["vertices"]) {
    require_keys(v, {"id", "coords", "label"}, {"id", "coords", "label"}, "vertex");
    if (!v["id"].is_number_integer()) throw PreconditionError("vertex ids are integers", v["id"].dump());
    const int id = v["id"].get<int>();
    if (!position.emplace(id, static_cast<int>(vertices.size())).second) {
      throw PreconditionError("distinct vertex ids", std::to_string(id));
    }
    vertices.push_back({id, vector_from_json(v["coords"], "coords"), exponent_from_json(v["label"])});
  }
  const std::size_t ambient = static_cast<std::size_t>(vertices.front().coords.size());

  if (!j["faces"].is_array()) throw PreconditionError("faces is an array", j["faces"].dump());
  std::vector<CellSpec> cells;
  for (const auto& f : j["faces"]) {
    require_keys(f, {"vertices", "orientation_basis", "dim", "label"}, {"vertices"}, "face");
    CellSpec cell;
    for (const auto& id : f["vertices"]) {
      const auto it = id.is_number_integer() ? position.find(id.get<int>()) : position.end();
      if (it == position.end()) throw PreconditionError("faces use known vertex ids", id.dump());
      cell.vertices.push_back(it->second);
    }
    std::sort(cell.vertices.begin(), cell.vertices.end());
    if (f.contains("orientation_basis")) {
      const auto& rows = f["orientation_basis"];
      if (!rows.is_array()) throw PreconditionError("orientation_basis is a list of vectors", rows.dump());
      RationalMatrix basis(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(rows.size()));
      for (std::size_t c = 0; c < rows.size(); ++c) {
        const RationalVector col = vector_from_json(rows[c], "orientation vector");
        if (static_cast<std::size_t>(col.size()) != ambient) {
          throw PreconditionError("orientation vectors in ambient dimension", rows[c].dump());
        }
        basis.col(static_cast<Eigen::Index>(c)) = col;
      }
      cell.orientation_basis = std::move(basis);
    }
    cells.push_back(std::move(cell));
  }
  LabeledCellComplex x = LabeledCellComplex::generate(ambient, std::move(vertices), cells);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Json& f = j["faces"][c];
    const Face& built = x.face(*x.find(cells[c].vertices));
    if (f.contains("label") && exponent_from_json(f["label"]) != built.label) {
      throw PreconditionError("face label is the lcm of its vertex labels", f["vertices"].dump());
    }
    if (f.contains("dim") && f["dim"] != built.dim) {
      throw PreconditionError("face dimension matches its geometry", f["vertices"].dump());
    }
  }
  if (j.contains("f_vector")) {
    Json f_vector = Json::array();
    for (int k = 0; k <= x.dimension(); ++k) f_vector.push_back(x.faces_of_dim(k).size());
    if (j["f_vector"] != f_vector) throw PreconditionError("f_vector matches the faces", j["f_vector"].dump());
  }
  return x;
}

Json face_to_json(const LabeledCellComplex& x, FaceIndex i) { return Json(x.vertex_ids(i)); }

Json complex_to_json(const LabeledCellComplex& x) {
  Json vertices = Json::array();
  for (const auto& v : x.vertices()) {
    vertices.push_back({{"id", v.id}, {"coords", vector_to_json(v.coords)}, {"label", exponent_to_json(v.label)}});
  }
  Json faces = Json::array();
  for (FaceIndex i = 1; i < x.faces().size(); ++i) {
    const Face& f = x.face(i);
    Json basis = Json::array();
    for (Eigen::Index c = 0; c < f.orientation_basis.cols(); ++c) {
      basis.push_back(vector_to_json(f.orientation_basis.col(c)));
    }
    faces.push_back({{"vertices", face_to_json(x, i)},
                     {"dim", f.dim},
                     {"label", exponent_to_json(f.label)},
                     {"orientation_basis", basis}});
  }
  Json f_vector = Json::array();
  for (int k = 0; k <= x.dimension(); ++k) f_vector.push_back(x.faces_of_dim(k).size());
  return Json{{"vertices", vertices}, {"faces", faces}, {"f_vector", f_vector}};
}

Json signed_matrix_to_json(const SignedMonomialMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      entries.push_back({{"row", i}, {"col", j}, {"sign", e.sign}, {"exp", exponent_to_json(e.exponent)}});
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json free_complex_to_json(const FreeComplex& f, const LabeledCellComplex& x) {
  Json levels = Json::array();
  for (int k = -1; k <= f.length(); ++k) {
    Json faces = Json::array();
    for (FaceIndex i : f.basis(k)) faces.push_back(face_to_json(x, i));
    Json degrees = Json::array();
    for (const auto& d : f.degrees(k)) degrees.push_back(exponent_to_json(d));
    levels.push_back({{"k", k}, {"faces", faces}, {"degrees", degrees}});
  }
  Json maps = Json::array();
  for (int k = 0; k <= f.length(); ++k) {
    Json m = signed_matrix_to_json(f.phi(k));
    m["k"] = k;
    maps.push_back(std::move(m));
  }
  return Json{{"levels", levels}, {"differentials", maps}};
}

Json residue_to_json(const ResidueCurrent& r) {
  Json out = Json::array();
  for (const auto& e : r.entries) {
    Json entry{{"face", e.vertex_ids}, {"sign", e.value.sign}};
    entry["alpha"] = e.value.is_zero() ? Json(nullptr) : exponent_to_json(e.value.alpha);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace cellres
