#include "cellres/random.hpp"

#include "cellres/error.hpp"

#include <algorithm>
#include <set>

namespace cellres {

Rng split_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> distinct_values(Rng& rng, int count, int lo, int hi) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

MonomialIdeal random_complete_intersection(Rng& rng, std::size_t n, int max_exponent) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(pure_power(n, i, uniform(rng, 1, max_exponent)));
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal random_staircase_2d(Rng& rng, int max_generators, int max_exponent) {
  if (max_generators < 2 || max_exponent < max_generators - 1) {
    throw PreconditionError("feasible staircase size", "need max_generators >= 2 and enough exponent room");
  }
  const int r = uniform(rng, 2, max_generators);
  // a_1 > ... > a_r = 0 and 0 = b_1 < ... < b_r.
  std::vector<int> a = distinct_values(rng, r - 1, 1, max_exponent);
  std::vector<int> b = distinct_values(rng, r - 1, 1, max_exponent);
  std::reverse(a.begin(), a.end());
  a.push_back(0);
  b.insert(b.begin(), 0);
  std::vector<ExponentVector> gens;
  for (int i = 0; i < r; ++i) gens.push_back({a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]});
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal random_generic_artinian(Rng& rng, std::size_t n, int max_exponent, int extra) {
  if (max_exponent < 2) throw PreconditionError("max_exponent >= 2", "no room for mixed generators");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<ExponentVector> gens;
    ExponentVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b.set(i, uniform(rng, 2, max_exponent));
      gens.push_back(pure_power(n, i, b[i]));
    }
    const int count = uniform(rng, 1, std::max(extra, 1));
    for (int j = 0; j < count; ++j) {
      ExponentVector g(n);
      for (std::size_t i = 0; i < n; ++i) g.set(i, uniform(rng, 0, static_cast<int>(b[i]) - 1));
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    MonomialIdeal m = MonomialIdeal::from_generators(std::move(gens));
    if (m.size() > n && is_generic(m)) return m;
  }
  throw PreconditionError("generic instance found", "gave up after 10000 draws");
}

LabeledCellComplex reorient_lower_faces(const LabeledCellComplex& x, Rng& rng) {
  LabeledCellComplex out = x;
  const int top = x.dimension();
  for (int k = 1; k < top; ++k) {
    for (FaceIndex i : x.faces_of_dim(k)) {
      const RationalMatrix& basis = x.face(i).orientation_basis;
      // Unit lower-triangular mixing keeps the span; the sign is random.
      RationalMatrix mix = RationalMatrix::Identity(basis.cols(), basis.cols());
      for (Eigen::Index r = 0; r < mix.rows(); ++r) {
        for (Eigen::Index c = 0; c < r; ++c) mix(r, c) = uniform(rng, -2, 2);
      }
      if (uniform(rng, 0, 1) == 1) mix.col(0) = -mix.col(0);
      out = out.reoriented(i, basis * mix);
    }
  }
  return out;
}

}  // namespace cellres
