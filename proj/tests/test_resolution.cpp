#include "cellres/error.hpp"
#include "cellres/hull.hpp"
#include "cellres/random.hpp"
#include "cellres/resolution.hpp"
#include "instances.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cellres;

namespace {

MonomialIdeal complete_intersection(const ExponentVector& b) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    ExponentVector g(b.size());
    g.set(i, b[i]);
    gens.push_back(g);
  }
  return MonomialIdeal::from_generators(gens);
}

ExponentVector unit(std::size_t n, std::size_t i, std::int64_t e) {
  ExponentVector v(n);
  v.set(i, e);
  return v;
}

RationalVector point(std::initializer_list<int> coords) {
  RationalVector p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) p(i++) = c;
  return p;
}

bool box_small(const MonomialIdeal& m) {
  const auto b = pure_power_exponents(m);
  return std::all_of(b.begin(), b.end(), [](auto e) { return e <= 5; });
}

}  // namespace

TEST_SUITE("resolution") {
  TEST_CASE("the simplex complex of a complete intersection is the Koszul complex") {
    const ExponentVector b{2, 3, 1};
    const auto delta = delta_complex(hull_complex(complete_intersection(b)), b);
    const auto f = cellular_complex(delta);
    CHECK(f.length() == 2);
    for (int k = 0; k <= 2; ++k) {
      const auto& phi = f.phi(k);
      for (Eigen::Index col = 0; col < phi.cols(); ++col) {
        const FaceKey& sigma = delta.face(f.basis(k)[static_cast<std::size_t>(col)]).vertices;
        for (Eigen::Index row = 0; row < phi.rows(); ++row) {
          const FaceKey& tau = delta.face(f.basis(k - 1)[static_cast<std::size_t>(row)]).vertices;
          // Koszul: removing the j-th variable (1-based) carries (-1)^(j-1) z_i^{b_i}.
          SignedMonomial expected;
          for (std::size_t j = 0; j < sigma.size(); ++j) {
            FaceKey rest = sigma;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
            if (rest != tau) continue;
            const auto i = static_cast<std::size_t>(sigma[j]);
            expected = SignedMonomial(j % 2 == 0 ? 1 : -1, unit(3, i, b[i]));
          }
          CHECK(phi(row, col) == expected);
        }
      }
    }
  }

  TEST_CASE("two-variable hull differentials") {
    // phi_0(e_v) = z^a w^b e_0 and phi_1(e_sigma_i) = z^{a_i - a_{i+1}} e_{v_{i+1}} - w^{b_{i+1} - b_i} e_{v_i}.
    const auto m = MonomialIdeal::from_generators({{4, 0}, {2, 1}, {1, 3}, {0, 5}});
    const auto x = fixtures::embedded_hull(m);
    const auto f = cellular_complex(x);
    for (Eigen::Index col = 0; col < f.phi(0).cols(); ++col) {
      CHECK(f.phi(0)(0, col) == SignedMonomial(1, f.degrees(0)[static_cast<std::size_t>(col)]));
    }
    const auto& phi1 = f.phi(1);
    CHECK(phi1.cols() == 3);
    for (Eigen::Index col = 0; col < phi1.cols(); ++col) {
      const auto& l = f.degrees(1)[static_cast<std::size_t>(col)];
      int nonzero = 0;
      for (Eigen::Index row = 0; row < phi1.rows(); ++row) {
        const auto& entry = phi1(row, col);
        if (entry.is_zero()) continue;
        ++nonzero;
        const auto& v = f.degrees(0)[static_cast<std::size_t>(row)];
        // The vertex with the larger z-exponent is v_i and gets -w^{...}.
        const bool is_vi = v[0] == l[0];
        CHECK(entry.sign == (is_vi ? -1 : 1));
        CHECK(entry.exponent == (is_vi ? ExponentVector{0, l[1] - v[1]} : ExponentVector{l[0] - v[0], 0}));
      }
      CHECK(nonzero == 2);
    }
  }

  TEST_CASE("single vertex") {
    std::vector<Vertex> v{{0, point({0}), {2, 3}}};
    const auto x = LabeledCellComplex::generate(1, v, {CellSpec{{0}, std::nullopt}});
    const auto f = cellular_complex(x);
    CHECK(f.length() == 0);
    REQUIRE(f.phi(0).rows() == 1);
    REQUIRE(f.phi(0).cols() == 1);
    CHECK(f.phi(0)(0, 0) == SignedMonomial(1, {2, 3}));
    CHECK(is_exact(x, MonomialIdeal::from_generators({{2, 3}})).ok);
  }

  TEST_CASE("d^2 = 0 for every choice of face orientations") {
    const auto x = fixtures::embedded_hull(fixtures::maxsquare());
    for (FaceIndex e : x.faces_of_dim(1)) CHECK_NOTHROW(cellular_complex(x.flipped(e)));
    for (FaceIndex t : x.faces_of_dim(2)) CHECK_NOTHROW(cellular_complex(x.flipped(t)));
  }

  TEST_CASE("reduced homology") {
    const auto delta = delta_complex(fixtures::embedded_hull(fixtures::maxsquare()), {2, 2, 2});
    const auto ranks = reduced_homology_ranks(delta);
    CHECK(std::all_of(ranks.begin(), ranks.end(), [](const Integer& r) { return r == 0; }));
    const auto hollow = fixtures::without_face(delta, delta.face(delta.faces_of_dim(2).front()).vertices);
    CHECK(reduced_homology_ranks(hollow) == std::vector<Integer>{0, 0, 1});
    // Oracle: H_1 of the hollow triangle = 3 edges - rank d_1 - rank d_2 = 3 - 2 - 0.
    std::vector<std::vector<Rational>> d1(3, std::vector<Rational>(3, Rational(0)));
    const IntegerMatrix bd = boundary_matrix(hollow, 1);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) d1[i][j] = Rational(bd(i, j));
    }
    CHECK(3 - oracle::rational_rank(d1) == 1);
    std::vector<Vertex> two{{0, point({0}), {1, 0}}, {1, point({1}), {0, 1}}};
    const auto apart = LabeledCellComplex::generate(1, two, {CellSpec{{0}, std::nullopt}, CellSpec{{1}, std::nullopt}});
    CHECK(reduced_homology_ranks(apart) == std::vector<Integer>{0, 1});
  }

  TEST_CASE("exactness") {
    const auto m = fixtures::maxsquare();
    CHECK(is_exact(taylor_complex(m), m).ok);
    CHECK(is_exact(fixtures::embedded_hull(m), m).ok);
    CHECK(is_exact(hull_complex(m), m).ok);
    const auto report = is_exact(fixtures::maxsquare_hollow(), m);
    CHECK_FALSE(report.ok);
    REQUIRE(report.witness.has_value());
    CHECK(*report.witness == ExponentVector{1, 1, 1});
    const auto parallel = is_exact(fixtures::maxsquare_hollow(), m, 4);
    CHECK(parallel.witness == report.witness);
    CHECK(is_exact(fixtures::maxsquare_minimal(), m).ok);
    CHECK(is_exact(taylor_complex(MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}})),
                   MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}}))
              .ok);
    CHECK_THROWS_AS(is_exact(fixtures::embedded_hull(m), MonomialIdeal::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                    PreconditionError);
  }

  TEST_CASE("exactness agrees with the graded-strand oracle") {
    std::vector<std::pair<LabeledCellComplex, MonomialIdeal>> cases;
    const auto m61 = fixtures::maxsquare();
    cases.emplace_back(fixtures::embedded_hull(m61), m61);
    cases.emplace_back(fixtures::maxsquare_hollow(), m61);
    cases.emplace_back(fixtures::maxsquare_minimal(), m61);
    cases.emplace_back(scarf_complex(m61), m61);
    for (const auto& s : fixtures::staircases(41, 20, 5, 5)) {
      cases.emplace_back(fixtures::embedded_hull(s), s);
      // Dropping an edge disconnects the path.
      const auto x = fixtures::embedded_hull(s);
      cases.emplace_back(fixtures::without_face(x, x.face(x.faces_of_dim(1).front()).vertices), s);
    }
    for (const auto& g : fixtures::generic3(42, 8, 4, 3)) {
      if (!box_small(g)) continue;
      cases.emplace_back(fixtures::embedded_hull(g), g);
      cases.emplace_back(scarf_complex(g), g);
    }
    int inexact = 0;
    for (const auto& [x, m] : cases) {
      const auto verdict = is_exact(x, m);
      const auto failure = oracle::graded_exactness_failure(cellular_complex(x), pure_power_exponents(m));
      CHECK(verdict.ok == !failure.has_value());
      inexact += verdict.ok ? 0 : 1;
    }
    CHECK(inexact >= 21);
  }

  TEST_CASE("minimality") {
    const auto m = fixtures::maxsquare();
    const auto f = cellular_complex(fixtures::embedded_hull(m));
    const auto report = is_minimal(f);
    CHECK_FALSE(report.ok);
    REQUIRE(report.witness.has_value());
    const auto x = fixtures::embedded_hull(m);
    const auto [tau, sigma] = *report.witness;
    CHECK(x.face(tau).label == x.face(sigma).label);
    CHECK(std::find(x.facets(sigma).begin(), x.facets(sigma).end(), tau) != x.facets(sigma).end());
    CHECK(is_minimal(cellular_complex(fixtures::maxsquare_minimal())).ok);
    for (const auto& g : fixtures::generic3(43, 8)) CHECK(is_minimal(cellular_complex(scarf_complex(g))).ok);
    const ExponentVector b{2, 1, 3};
    CHECK(is_minimal(cellular_complex(delta_complex(hull_complex(complete_intersection(b)), b))).ok);
    CHECK_FALSE(is_minimal(cellular_complex(taylor_complex(MonomialIdeal::from_generators({{2, 0}, {1, 1}, {0, 2}})))).ok);
  }

  TEST_CASE("vertex ideal") {
    CHECK(vertex_ideal(fixtures::embedded_hull(fixtures::maxsquare())) == fixtures::maxsquare());
  }

  TEST_CASE("re-orienting faces keeps d^2 = 0 and the exactness verdict") {
    const auto m = fixtures::maxsquare();
    for (std::uint64_t i = 0; i < 5; ++i) {
      Rng rng = split_stream(44, i);
      const auto x = reorient_lower_faces(fixtures::embedded_hull(m), rng);
      const auto f = cellular_complex(x);
      const auto g = cellular_complex(fixtures::embedded_hull(m));
      for (int k = 0; k <= f.length(); ++k) {
        for (Eigen::Index r = 0; r < f.phi(k).rows(); ++r) {
          for (Eigen::Index c = 0; c < f.phi(k).cols(); ++c) {
            CHECK(f.phi(k)(r, c).exponent == g.phi(k)(r, c).exponent);
            CHECK(std::abs(f.phi(k)(r, c).sign) == std::abs(g.phi(k)(r, c).sign));
          }
        }
      }
      CHECK(is_exact(x, m).ok);
      Rng rng2 = split_stream(45, i);
      CHECK_FALSE(is_exact(reorient_lower_faces(fixtures::maxsquare_hollow(), rng2), m).ok);
    }
  }
}
