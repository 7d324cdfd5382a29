#include "cellres/monomial_ideal.hpp"

#include "cellres/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cellres {

MonomialIdeal MonomialIdeal::from_generators(std::vector<ExponentVector> generators) {
  if (generators.empty()) throw PreconditionError("nonempty generators", "empty generator list");
  const std::size_t n = generators.front().size();
  if (n == 0) throw PreconditionError("ambient dimension >= 1", "zero-length exponent vectors");
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw PreconditionError("equal lengths", "generators of lengths " + std::to_string(n) +
                                                   " and " + std::to_string(g.size()));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<ExponentVector> minimal;
  for (const auto& g : generators) {
    const bool redundant = std::any_of(generators.begin(), generators.end(), [&](const ExponentVector& h) {
      return h != g && divides(h, g);
    });
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(), std::greater<>());
  return MonomialIdeal(n, std::move(minimal));
}

bool MonomialIdeal::contains(const ExponentVector& beta) const {
  if (beta.size() != nvars_) {
    throw PreconditionError("beta has length n", "got length " + std::to_string(beta.size()));
  }
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return divides(g, beta); });
}

namespace {

std::optional<std::size_t> pure_power_variable(const ExponentVector& g) {
  const auto s = support(g);
  if (s.size() == 1) return s.front();
  return std::nullopt;
}

}  // namespace

bool is_artinian(const MonomialIdeal& m) {
  std::vector<bool> seen(m.nvars(), false);
  for (const auto& g : m.generators()) {
    if (auto v = pure_power_variable(g)) seen[*v] = true;
    if (g.is_zero()) return true;  // the unit ideal
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

ExponentVector pure_power_exponents(const MonomialIdeal& m) {
  if (!is_artinian(m)) throw PreconditionError("Artinian", "some variable has no pure-power generator");
  ExponentVector b(m.nvars());
  for (const auto& g : m.generators()) {
    if (auto v = pure_power_variable(g)) b.set(*v, g[*v]);
  }
  return b;
}

ExponentVector generator_join(const MonomialIdeal& m) {
  ExponentVector out(m.nvars());
  for (const auto& g : m.generators()) out = lcm(out, g);
  return out;
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& m) {
  std::set<ExponentVector> lattice(m.generators().begin(), m.generators().end());
  std::vector<ExponentVector> frontier(m.generators().begin(), m.generators().end());
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& x : frontier) {
      for (const auto& g : m.generators()) {
        auto joined = lcm(x, g);
        if (lattice.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ExponentVector> out(lattice.begin(), lattice.end());
  std::sort(out.begin(), out.end(), degree_lex_less);
  return out;
}

namespace {

// Number of lattice points outside the ideal generated by `gens` (all of
// length n); the caller guarantees the count is finite.
Integer staircase_count(const std::vector<std::vector<ExponentVector::value_type>>& gens, std::size_t n) {
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](auto e) { return e == 0; })) return 0;
  }
  if (n == 1) {
    auto best = gens.front()[0];
    for (const auto& g : gens) best = std::min(best, g[0]);
    return Integer(best);
  }
  std::set<ExponentVector::value_type> cuts;
  for (const auto& g : gens) cuts.insert(g[n - 1]);
  const std::vector<ExponentVector::value_type> levels(cuts.begin(), cuts.end());
  Integer total = 0;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    std::vector<std::vector<ExponentVector::value_type>> slice;
    for (const auto& g : gens) {
      if (g[n - 1] <= levels[j]) slice.emplace_back(g.begin(), g.end() - 1);
    }
    total += Integer(levels[j + 1] - levels[j]) * staircase_count(slice, n - 1);
  }
  return total;
}

}  // namespace

Integer multiplicity(const MonomialIdeal& m) {
  if (!is_artinian(m)) throw PreconditionError("Artinian", "staircase is unbounded");
  std::vector<std::vector<ExponentVector::value_type>> gens;
  for (const auto& g : m.generators()) gens.push_back(g.entries());
  return staircase_count(gens, m.nvars());
}

bool is_generic(const MonomialIdeal& m) {
  const auto& gens = m.generators();
  const std::size_t n = m.nvars();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      bool shares = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (gens[i][v] > 0 && gens[i][v] == gens[j][v]) shares = true;
      }
      if (!shares) continue;
      const ExponentVector joined = lcm(gens[i], gens[j]);
      const bool strictly_divided = std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) {
        for (std::size_t v = 0; v < n; ++v) {
          if (g[v] > joined[v] - 1) return false;
        }
        return true;
      });
      if (!strictly_divided) return false;
    }
  }
  return true;
}

IrreducibleComponent::IrreducibleComponent(ExponentVector a) : alpha(std::move(a)) {
  for (auto e : alpha) {
    if (e < 1) throw PreconditionError("positive component exponents", to_string(alpha));
  }
}

bool IrreducibleComponent::contains(const ExponentVector& beta) const {
  require_same_length(alpha, beta);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (beta[i] >= alpha[i]) return true;
  }
  return false;
}

bool in_intersection(const std::vector<IrreducibleComponent>& components, const ExponentVector& beta) {
  if (components.empty()) throw PreconditionError("nonempty components", "empty component list");
  return std::all_of(components.begin(), components.end(),
                     [&](const IrreducibleComponent& c) { return c.contains(beta); });
}

bool equals_ideal(const std::vector<IrreducibleComponent>& components, const MonomialIdeal& m,
                  std::optional<ExponentVector> box) {
  if (components.empty()) throw PreconditionError("nonempty components", "empty component list");
  const ExponentVector pure = pure_power_exponents(m);
  const ExponentVector scan = box.value_or(pure);
  if (!divides(pure, scan)) {
    throw PreconditionError("box >= pure powers", to_string(scan) + " < " + to_string(pure));
  }
  return for_each_in_box(scan, [&](const ExponentVector& beta) {
    return in_intersection(components, beta) == m.contains(beta);
  });
}

std::vector<std::pair<ExponentVector::value_type, ExponentVector::value_type>>
staircase_corners_2d(const MonomialIdeal& m) {
  if (m.nvars() != 2) throw PreconditionError("n = 2", "ideal has " + std::to_string(m.nvars()) + " variables");
  if (!is_artinian(m)) throw PreconditionError("Artinian", "missing pure power");
  std::vector<std::pair<ExponentVector::value_type, ExponentVector::value_type>> corners;
  for (const auto& g : m.generators()) corners.emplace_back(g[0], g[1]);
  std::sort(corners.begin(), corners.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    if (!(corners[i].first > corners[i + 1].first && corners[i].second < corners[i + 1].second)) {
      throw PreconditionError("strict staircase", "corners not strictly monotone");
    }
  }
  if (corners.back().first != 0 || corners.front().second != 0) {
    throw PreconditionError("strict staircase", "missing axis corners");
  }
  return corners;
}

}  // namespace cellres
