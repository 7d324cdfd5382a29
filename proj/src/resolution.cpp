#include "cellres/resolution.hpp"

#include "cellres/error.hpp"
#include "cellres/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace cellres {

FreeComplex::FreeComplex(std::size_t nvars, std::vector<std::vector<FaceIndex>> bases,
                         std::vector<std::vector<ExponentVector>> degrees,
                         std::vector<SignedMonomialMatrix> differentials)
    : nvars_(nvars), bases_(std::move(bases)), degrees_(std::move(degrees)), differentials_(std::move(differentials)) {
  if (bases_.size() != differentials_.size() + 1 || degrees_.size() != bases_.size()) {
    throw PreconditionError("graded bases match differentials", "inconsistent level counts");
  }
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const auto& d = differentials_[k];
    if (static_cast<std::size_t>(d.rows()) != bases_[k].size() ||
        static_cast<std::size_t>(d.cols()) != bases_[k + 1].size()) {
      throw PreconditionError("graded bases match differentials", "phi_" + std::to_string(k) + " has wrong shape");
    }
  }
}

namespace {

bool is_zero_matrix(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

// Position of each face of dimension k within faces_of_dim(k).
std::vector<Eigen::Index> positions(const LabeledCellComplex& x, int k) {
  std::vector<Eigen::Index> pos(x.faces().size(), -1);
  const auto faces = x.faces_of_dim(k);
  for (std::size_t i = 0; i < faces.size(); ++i) pos[faces[i]] = static_cast<Eigen::Index>(i);
  return pos;
}

}  // namespace

FreeComplex cellular_complex(const LabeledCellComplex& x) {
  const int top = x.dimension();
  std::vector<std::vector<FaceIndex>> bases;
  std::vector<std::vector<ExponentVector>> degrees;
  for (int k = -1; k <= top; ++k) {
    const auto faces = x.faces_of_dim(k);
    bases.emplace_back(faces.begin(), faces.end());
    std::vector<ExponentVector> labels;
    for (FaceIndex f : faces) labels.push_back(x.face(f).label);
    degrees.push_back(std::move(labels));
  }
  std::vector<SignedMonomialMatrix> differentials;
  for (int k = 0; k <= top; ++k) {
    const auto rows = positions(x, k - 1);
    const auto cols = x.faces_of_dim(k);
    SignedMonomialMatrix phi(static_cast<Eigen::Index>(x.faces_of_dim(k - 1).size()),
                             static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const FaceIndex sigma = cols[j];
      for (FaceIndex tau : x.facets(sigma)) {
        phi(rows[tau], static_cast<Eigen::Index>(j)) =
            SignedMonomial(sign_facet(x, tau, sigma), quotient(x.face(sigma).label, x.face(tau).label));
      }
    }
    differentials.push_back(std::move(phi));
  }
  FreeComplex f(x.nvars(), std::move(bases), std::move(degrees), std::move(differentials));
  for (int k = 1; k <= f.length(); ++k) {
    if (!is_zero_matrix(multiply(to_polynomial(f.phi(k - 1)), to_polynomial(f.phi(k))))) {
      throw PreconditionError("boundary squares to zero",
                              "phi_" + std::to_string(k - 1) + " phi_" + std::to_string(k) + " != 0");
    }
  }
  return f;
}

IntegerMatrix boundary_matrix(const LabeledCellComplex& x, int k) {
  const auto rows = positions(x, k - 1);
  const auto cols = x.faces_of_dim(k);
  IntegerMatrix d = IntegerMatrix::Zero(static_cast<Eigen::Index>(x.faces_of_dim(k - 1).size()),
                                        static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (FaceIndex tau : x.facets(cols[j])) d(rows[tau], static_cast<Eigen::Index>(j)) = sign_facet(x, tau, cols[j]);
  }
  return d;
}

std::vector<Integer> reduced_homology_ranks(const LabeledCellComplex& x) {
  const int top = x.dimension();
  // rank_of[k + 1] = rank of the boundary map out of degree k, k = -1..top+1.
  std::vector<Integer> rank_of(static_cast<std::size_t>(top + 3), Integer(0));
  for (int k = 0; k <= top; ++k) rank_of[static_cast<std::size_t>(k + 1)] = Integer(exact_rank(boundary_matrix(x, k)));
  std::vector<Integer> ranks;
  for (int k = -1; k <= top; ++k) {
    const Integer chains(x.faces_of_dim(k).size());
    ranks.push_back(chains - rank_of[static_cast<std::size_t>(k + 1)] - rank_of[static_cast<std::size_t>(k + 2)]);
  }
  return ranks;
}

MonomialIdeal vertex_ideal(const LabeledCellComplex& x) {
  std::vector<ExponentVector> labels;
  for (const auto& v : x.vertices()) labels.push_back(v.label);
  return MonomialIdeal::from_generators(std::move(labels));
}

ExactnessReport is_exact(const LabeledCellComplex& x, const MonomialIdeal& m, unsigned jobs) {
  if (x.nvars() != m.nvars()) throw PreconditionError("labels in n variables", "complex and ideal differ");
  if (!(vertex_ideal(x) == m)) throw PreconditionError("vertex labels generate M", "ideal mismatch");

  std::vector<ExponentVector> degrees{ExponentVector(m.nvars())};
  for (auto& beta : lcm_lattice(m)) degrees.push_back(std::move(beta));

  auto acyclic = [&](const ExponentVector& beta) {
    const LabeledCellComplex sub = subcomplex_leq(x, beta);
    if (sub.faces().size() == 1) return true;
    const auto ranks = reduced_homology_ranks(sub);
    return std::all_of(ranks.begin(), ranks.end(), [](const Integer& r) { return r == 0; });
  };

  // Each worker scans a strided share and records the first failure it
  // sees; the smallest failing index is the witness.
  const std::size_t total = degrees.size();
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(total, 1));
  std::atomic<std::size_t> first_failure{total};
  auto scan = [&](std::size_t start) {
    for (std::size_t i = start; i < total; i += workers) {
      if (i >= first_failure.load()) return;
      if (!acyclic(degrees[i])) {
        std::size_t seen = first_failure.load();
        while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, scan, w));
    for (auto& t : tasks) t.get();
  }

  ExactnessReport report;
  if (first_failure.load() < total) {
    report.ok = false;
    report.witness = degrees[first_failure.load()];
  }
  return report;
}

MinimalityReport is_minimal(const FreeComplex& f) {
  for (int k = 0; k <= f.length(); ++k) {
    const auto& phi = f.phi(k);
    for (Eigen::Index j = 0; j < phi.cols(); ++j) {
      for (Eigen::Index i = 0; i < phi.rows(); ++i) {
        const auto& entry = phi(i, j);
        if (!entry.is_zero() && entry.exponent.is_zero()) {
          return {false, std::pair{f.basis(k - 1)[static_cast<std::size_t>(i)], f.basis(k)[static_cast<std::size_t>(j)]}};
        }
      }
    }
  }
  return {};
}

}  // namespace cellres
