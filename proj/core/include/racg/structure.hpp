#pragma once

#include <variant>
#include <vector>

#include "racg/presentation.hpp"

namespace racg {

// W_T is finite exactly when T is a clique of the commutation graph.
bool is_spherical(const Presentation& p, GeneratorSet subset);
bool is_infinite(const Presentation& p, GeneratorSet subset);

// Maximal cliques of the commutation graph, list sorted lexicographically.
std::vector<GeneratorSet> maximal_spherical_subsets(const Presentation& p);

// Irreducible decomposition: components of the graph whose edges are the
// pairs with o(st) = infinity.
struct Decomposition {
  std::vector<GeneratorSet> components;  // ordered by smallest member
  GeneratorSet s_tilde;                  // union of components of size >= 2
  GeneratorSet finite_part;              // union of singleton components

  std::vector<GeneratorSet> infinite_components() const;
};

Decomposition irreducible_components(const Presentation& p);

struct Minimal {
  friend bool operator==(const Minimal&, const Minimal&) = default;
};
struct EmptyBoundary {
  friend bool operator==(const EmptyBoundary&, const EmptyBoundary&) = default;
};
// W_{S~} = W_first x W_rest with both factors infinite.
struct Splitting {
  GeneratorSet first;
  GeneratorSet rest;
  friend bool operator==(const Splitting&, const Splitting&) = default;
};

using MinimalityVerdict = std::variant<Minimal, Splitting, EmptyBoundary>;

// Minimal iff the infinite part S~ is a single irreducible factor.  A finite
// group (S a clique) has empty boundary and gets its own verdict.
MinimalityVerdict boundary_minimal(const Presentation& p);

// Orbit density of the parabolic boundary: true iff S_i and T span an
// infinite subgroup for every infinite factor S_i.  False for finite W.
bool parabolic_orbit_dense(const Presentation& p, GeneratorSet subset);

}  // namespace racg
