#pragma once

// Independent brute-force reference computations. None of these call the
// library routine they are used to check; they share only the basic value
// types (ExponentVector, Rational, the complex container).

#include "cellres/cell_complex.hpp"
#include "cellres/monomial_ideal.hpp"
#include "cellres/resolution.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using cellres::ExponentVector;
using cellres::Rational;

inline bool leq(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool in_ideal(const std::vector<ExponentVector>& gens, const ExponentVector& beta) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return leq(g, beta); });
}

/// All lattice points of [0, box], first coordinate slowest.
inline std::vector<ExponentVector> box_points(const ExponentVector& box) {
  std::vector<ExponentVector> points{ExponentVector(box.size())};
  for (std::size_t i = 0; i < box.size(); ++i) {
    std::vector<ExponentVector> next;
    for (const auto& p : points) {
      for (std::int64_t v = 0; v <= box[i]; ++v) {
        ExponentVector q = p;
        q.set(i, v);
        next.push_back(q);
      }
    }
    points = std::move(next);
  }
  return points;
}

/// Count of box points outside the ideal; the box must contain the staircase.
inline std::int64_t staircase_count(const std::vector<ExponentVector>& gens, const ExponentVector& box) {
  std::int64_t count = 0;
  for (const auto& p : box_points(box)) count += in_ideal(gens, p) ? 0 : 1;
  return count;
}

/// Generators not divisible by a different generator (duplicates collapse).
inline std::set<ExponentVector> minimal_generators(const std::vector<ExponentVector>& gens) {
  std::set<ExponentVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
      if (gens[j] != gens[i] && leq(gens[j], gens[i])) minimal = false;
    }
    if (minimal) out.insert(gens[i]);
  }
  return out;
}

inline ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, std::max(a[i], b[i]));
  return out;
}

/// lcm of every nonempty subset, by enumerating all 2^r - 1 subsets.
inline std::set<ExponentVector> subset_lcms(const std::vector<ExponentVector>& gens) {
  std::set<ExponentVector> out;
  const std::size_t r = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    ExponentVector l(gens.front().size());
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (std::uint64_t{1} << i)) l = join(l, gens[i]);
    }
    out.insert(l);
  }
  return out;
}

/// Subsets (as masks) whose lcm no other subset attains.
inline std::set<std::uint64_t> unique_lcm_subsets(const std::vector<ExponentVector>& gens) {
  std::map<ExponentVector, std::vector<std::uint64_t>> by_lcm;
  const std::size_t r = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    ExponentVector l(gens.front().size());
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (std::uint64_t{1} << i)) l = join(l, gens[i]);
    }
    by_lcm[l].push_back(mask);
  }
  std::set<std::uint64_t> out;
  for (const auto& [l, masks] : by_lcm) {
    if (masks.size() == 1) out.insert(masks.front());
  }
  return out;
}

/// Rank over Q by plain Gauss-Jordan elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Degreewise exactness of F at A_0..A_N: for every beta in the box, the
/// beta-graded strand (faces whose label divides z^beta, entries = signs of
/// F's matrices) has no homology in degrees >= 0. Returns the failing beta.
inline std::optional<ExponentVector> graded_exactness_failure(const cellres::FreeComplex& f,
                                                               const ExponentVector& box) {
  for (const auto& beta : box_points(box)) {
    // Strand basis per degree k = -1..N (indices into F's bases).
    std::vector<std::vector<std::size_t>> strand;
    for (int k = -1; k <= f.length(); ++k) {
      std::vector<std::size_t> idx;
      const auto& degs = f.degrees(k);
      for (std::size_t i = 0; i < degs.size(); ++i) {
        if (leq(degs[i], beta)) idx.push_back(i);
      }
      strand.push_back(std::move(idx));
    }
    auto strand_rank = [&](int k) -> std::size_t {  // rank of phi_k restricted
      if (k < 0 || k > f.length()) return 0;
      const auto& rows = strand[static_cast<std::size_t>(k)];
      const auto& cols = strand[static_cast<std::size_t>(k + 1)];
      std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          m[i][j] = f.phi(k)(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j])).sign;
        }
      }
      return rational_rank(std::move(m));
    };
    for (int k = 0; k <= f.length(); ++k) {
      const std::size_t dim = strand[static_cast<std::size_t>(k + 1)].size();
      if (dim != strand_rank(k) + strand_rank(k + 1)) return beta;
    }
  }
  return std::nullopt;
}

/// Barycentric containment of a point in a simplex given by its vertices,
/// by Gauss-Jordan elimination on the system [V; 1] lambda = [p; 1].
inline bool in_simplex_barycentric(const cellres::RationalVector& p, const std::vector<cellres::RationalVector>& simplex) {
  const std::size_t k1 = simplex.size();
  const Eigen::Index d = p.size();
  cellres::RationalMatrix a(d + 1, static_cast<Eigen::Index>(k1));
  cellres::RationalVector rhs(d + 1);
  for (std::size_t j = 0; j < k1; ++j) {
    a.block(0, static_cast<Eigen::Index>(j), d, 1) = simplex[j];
    a(d, static_cast<Eigen::Index>(j)) = 1;
  }
  rhs.head(d) = p;
  rhs(d) = 1;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d + 1), std::vector<Rational>(k1 + 1));
  for (Eigen::Index i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j < k1; ++j) m[static_cast<std::size_t>(i)][j] = a(i, static_cast<Eigen::Index>(j));
    m[static_cast<std::size_t>(i)][k1] = rhs(i);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k1 && row < m.size(); ++c) {
    std::size_t p2 = row;
    while (p2 < m.size() && m[p2][c] == 0) ++p2;
    if (p2 == m.size()) continue;
    std::swap(m[p2], m[row]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[row][c];
      for (std::size_t j = c; j <= k1; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < m.size(); ++i) {
    if (m[i][k1] != 0) return false;  // inconsistent: outside the affine hull
  }
  for (std::size_t i = 0; i < row; ++i) {
    if (m[i][k1] / m[i][pivot_col[i]] < 0) return false;
  }
  return true;
}

}  // namespace oracle
