#include "cellres/error.hpp"
#include "cellres/hull.hpp"
#include "instances.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cellres;

namespace {

std::set<ExponentVector> labels_of_dim(const LabeledCellComplex& x, int k) {
  std::set<ExponentVector> out;
  for (FaceIndex f : x.faces_of_dim(k)) out.insert(x.face(f).label);
  return out;
}

/// Vertex subsets of x as generator masks (vertex position = generator index).
std::set<std::uint64_t> face_masks(const LabeledCellComplex& x) {
  std::set<std::uint64_t> out;
  for (const auto& f : x.faces()) {
    if (f.dim < 0) continue;
    std::uint64_t mask = 0;
    for (int v : f.vertices) mask |= std::uint64_t{1} << x.vertices()[static_cast<std::size_t>(v)].id;
    out.insert(mask);
  }
  return out;
}

RationalVector vec(std::initializer_list<Rational> values) {
  RationalVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

}  // namespace

TEST_SUITE("hull") {
  TEST_CASE("lift base") {
    CHECK(minimum_lift_base(2) == 7);
    CHECK(minimum_lift_base(3) == 25);
    CHECK_NOTHROW(HullParameters::defaults(3).validate());
    CHECK_THROWS_AS((HullParameters{24, 3}.validate()), PreconditionError);
    CHECK_THROWS_AS(hull_complex(fixtures::maxsquare(), Integer(24)), PreconditionError);
    CHECK_NOTHROW(hull_complex(fixtures::maxsquare(), Integer(26)));
  }

  TEST_CASE("complete intersections give the simplex") {
    for (const ExponentVector b : {ExponentVector{3, 2}, ExponentVector{3, 2, 4}, ExponentVector{1, 5, 2, 3}}) {
      std::vector<ExponentVector> gens;
      for (std::size_t i = 0; i < b.size(); ++i) {
        ExponentVector g(b.size());
        g.set(i, b[i]);
        gens.push_back(g);
      }
      const auto h = hull_complex(MonomialIdeal::from_generators(gens));
      CHECK(h.dimension() == static_cast<int>(b.size()) - 1);
      CHECK(h.faces().size() == (std::size_t{1} << b.size()));
      CHECK(labels_of_dim(h, h.dimension()) == std::set<ExponentVector>{b});
    }
  }

  TEST_CASE("the square of the maximal ideal in three variables") {
    const auto h = hull_complex(fixtures::maxsquare());
    CHECK(h.vertices().size() == 6);
    CHECK(h.faces_of_dim(0).size() == 6);
    CHECK(h.faces_of_dim(1).size() == 9);
    CHECK(h.faces_of_dim(2).size() == 4);
    CHECK(labels_of_dim(h, 2) == std::set<ExponentVector>{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1}});
    // Every top label is the lcm of its vertex labels (recomputed here).
    for (FaceIndex f : h.faces_of_dim(2)) {
      ExponentVector l(3);
      for (int v : h.face(f).vertices) l = oracle::join(l, h.vertices()[static_cast<std::size_t>(v)].label);
      CHECK(l == h.face(f).label);
    }
    // Vertices sit at t^alpha.
    for (const auto& v : h.vertices()) {
      for (std::size_t i = 0; i < 3; ++i) {
        Integer p = 1;
        for (std::int64_t e = 0; e < v.label[i]; ++e) p *= 25;
        CHECK(v.coords(static_cast<Eigen::Index>(i)) == Rational(p));
      }
    }
  }

  TEST_CASE("two-variable hulls are paths through consecutive corners") {
    auto check_path = [](const MonomialIdeal& m) {
      std::vector<ExponentVector> corners = m.generators();
      std::sort(corners.begin(), corners.end(), [](const auto& a, const auto& b) { return a[0] > b[0]; });
      std::set<ExponentVector> expected;
      for (std::size_t i = 0; i + 1 < corners.size(); ++i) expected.insert(oracle::join(corners[i], corners[i + 1]));
      const auto h = hull_complex(m);
      CHECK(h.dimension() == 1);
      CHECK(h.faces_of_dim(0).size() == corners.size());
      CHECK(labels_of_dim(h, 1) == expected);
      CHECK(h.faces_of_dim(1).size() == corners.size() - 1);
    };
    check_path(MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}}));
    CHECK(labels_of_dim(hull_complex(MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}})), 1) ==
          std::set<ExponentVector>{{2, 1}, {1, 2}});
    for (const auto& m : fixtures::staircases(31, 30)) check_path(m);
  }

  TEST_CASE("face poset is stable between t and t+1") {
    const auto m = MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}});
    CHECK(same_face_poset(hull_complex(m, Integer(7)), hull_complex(m, Integer(8))));
    CHECK(same_face_poset(hull_complex(fixtures::maxsquare(), Integer(25)),
                          hull_complex(fixtures::maxsquare(), Integer(26))));
    for (const auto& g : fixtures::generic3(32, 8)) {
      const Integer t = minimum_lift_base(3);
      CHECK(same_face_poset(hull_complex(g, t), hull_complex(g, t + 1)));
    }
  }

  TEST_CASE("embedding into the simplex") {
    const auto m = fixtures::maxsquare();
    const auto h = hull_complex(m);
    const auto x = embed_in_simplex(h, {2, 2, 2});
    const Rational t = 25;
    // Pure powers are fixed.
    const auto z1sq = fixtures::key_of(x, {{2, 0, 0}});
    CHECK(x.vertices()[static_cast<std::size_t>(z1sq.front())].coords == vec({t * t, 1, 1}));
    // (t,t,1) moves along the ray from (1,1,1) until it meets the plane
    // through the pure powers: sum (p_i - 1)/(t^2 - 1) = 1.
    const auto z1z2 = fixtures::key_of(x, {{1, 1, 0}});
    const RationalVector image = x.vertices()[static_cast<std::size_t>(z1z2.front())].coords;
    const Rational lambda = (t * t - 1) / (2 * (t - 1));
    CHECK(image == vec({1 + lambda * (t - 1), 1 + lambda * (t - 1), 1}));
    CHECK(image == vec({313, 313, 1}));
    const std::vector<RationalVector> delta{vec({t * t, 1, 1}), vec({1, t * t, 1}), vec({1, 1, t * t})};
    for (const auto& v : x.vertices()) CHECK(oracle::in_simplex_barycentric(v.coords, delta));
    CHECK(is_refinement(x, delta_complex(x, {2, 2, 2})));
    CHECK(same_face_poset(h, x));
    for (const auto& s : fixtures::staircases(33, 10)) {
      const auto e = fixtures::embedded_hull(s);
      CHECK(is_refinement(e, delta_complex(e, pure_power_exponents(s))));
    }
  }

  TEST_CASE("hull preconditions") {
    CHECK_THROWS_AS(hull_complex(MonomialIdeal::from_generators({{1, 1}, {2, 0}})), PreconditionError);
    CHECK_THROWS_AS(embed_in_simplex(hull_complex(fixtures::maxsquare()), {2, 2}), PreconditionError);
    CHECK_THROWS_AS(embed_in_simplex(hull_complex(fixtures::maxsquare()), {3, 2, 2}), PreconditionError);
  }

  TEST_CASE("Scarf complexes") {
    const auto m = fixtures::maxsquare();
    const auto s = scarf_complex(m);
    CHECK(face_masks(s) == oracle::unique_lcm_subsets(m.generators()));
    CHECK_FALSE(s.find(fixtures::key_of(s, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})).has_value());
    CHECK(s.faces_of_dim(2).empty());  // every triangle label is also the lcm of a 4-subset
    const auto single = scarf_complex(MonomialIdeal::from_generators({{1, 2, 0}}));
    CHECK(single.faces().size() == 2);
    CHECK(single.faces_of_dim(0).size() == 1);
    for (const auto& g : fixtures::generic3(34, 10)) {
      const auto sc = scarf_complex(g);
      CHECK(face_masks(sc) == oracle::unique_lcm_subsets(g.generators()));
      CHECK(same_face_poset(sc, hull_complex(g)));
    }
    for (const auto& g : fixtures::staircases(35, 10)) CHECK(same_face_poset(scarf_complex(g), hull_complex(g)));
    CHECK_THROWS_AS(scarf_complex(m, 5), PreconditionError);
  }

  TEST_CASE("Taylor complexes") {
    const auto two = taylor_complex(MonomialIdeal::from_generators({{2, 0}, {0, 3}}));
    CHECK(two.faces_of_dim(1).size() == 1);
    CHECK(two.faces_of_dim(0).size() == 2);
    CHECK(two.face(two.faces_of_dim(1).front()).label == ExponentVector{2, 3});
    const auto three = taylor_complex(MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}}));
    CHECK(three.faces_of_dim(2).size() == 1);
    CHECK(three.faces_of_dim(1).size() == 3);
    CHECK(three.face(three.faces_of_dim(2).front()).label == ExponentVector{2, 2});
    const auto six = taylor_complex(fixtures::maxsquare());
    CHECK(six.faces().size() == 64);
    CHECK_THROWS_AS(taylor_complex(fixtures::maxsquare(), 5), PreconditionError);
  }
}
