#include "racg/structure.hpp"

#include <algorithm>

#include "racg/errors.hpp"

namespace racg {

namespace {

void check_subset(const Presentation& p, GeneratorSet subset) {
  if (!subset.is_subset_of(p.all()))
    throw InputError("subset contains generators outside the presentation");
}

// Bron-Kerbosch with Tomita pivoting on bitmasks.
void bron_kerbosch(const Presentation& p, GeneratorSet clique,
                   GeneratorSet candidates, GeneratorSet excluded,
                   std::vector<GeneratorSet>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(clique);
    return;
  }
  Generator pivot = 0;
  int best = -1;
  for (Generator u : candidates | excluded) {
    int covered = (candidates & p.commuting_with(u)).size();
    if (covered > best) {
      best = covered;
      pivot = u;
    }
  }
  for (Generator v : candidates - p.commuting_with(pivot)) {
    bron_kerbosch(p, clique | GeneratorSet::single(v),
                  candidates & p.commuting_with(v),
                  excluded & p.commuting_with(v), out);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

bool is_spherical(const Presentation& p, GeneratorSet subset) {
  check_subset(p, subset);
  return p.is_clique(subset);
}

bool is_infinite(const Presentation& p, GeneratorSet subset) {
  return !is_spherical(p, subset);
}

std::vector<GeneratorSet> maximal_spherical_subsets(const Presentation& p) {
  std::vector<GeneratorSet> out;
  bron_kerbosch(p, GeneratorSet{}, p.all(), GeneratorSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneratorSet> Decomposition::infinite_components() const {
  std::vector<GeneratorSet> out;
  for (auto c : components) {
    if (c.size() >= 2) out.push_back(c);
  }
  return out;
}

Decomposition irreducible_components(const Presentation& p) {
  Decomposition d;
  GeneratorSet unseen = p.all();
  while (!unseen.empty()) {
    GeneratorSet component = GeneratorSet::single(unseen.front());
    GeneratorSet frontier = component;
    while (!frontier.empty()) {
      GeneratorSet next;
      for (Generator s : frontier) {
        // infinity-neighbours of s
        next = next | (p.all() - p.commuting_with(s) - GeneratorSet::single(s));
      }
      frontier = next - component;
      component = component | frontier;
    }
    d.components.push_back(component);
    unseen = unseen - component;
    if (component.size() >= 2)
      d.s_tilde = d.s_tilde | component;
    else
      d.finite_part = d.finite_part | component;
  }
  return d;
}

MinimalityVerdict boundary_minimal(const Presentation& p) {
  if (p.is_clique(p.all())) return EmptyBoundary{};
  auto infinite = irreducible_components(p).infinite_components();
  if (infinite.size() == 1) return Minimal{};
  GeneratorSet rest;
  for (std::size_t i = 1; i < infinite.size(); ++i) rest = rest | infinite[i];
  return Splitting{infinite.front(), rest};
}

bool parabolic_orbit_dense(const Presentation& p, GeneratorSet subset) {
  check_subset(p, subset);
  auto infinite = irreducible_components(p).infinite_components();
  if (infinite.empty()) return false;
  return std::all_of(infinite.begin(), infinite.end(), [&](GeneratorSet c) {
    return !p.is_clique(c & subset);
  });
}

}  // namespace racg
