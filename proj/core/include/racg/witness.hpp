#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "racg/ball.hpp"
#include "racg/normal_form.hpp"
#include "racg/presentation.hpp"
#include "racg/structure.hpp"

namespace racg {

// Certificate that W^{s0} is quasi-dense.  Starting from the maximal clique
// U0 of the infinite part, right-multiplying an element with descent set
// exactly V_{k-1} by chain[k-1] yields descent set exactly V_k, ending at
// {s0}.  Every element is within |U0| of W^{U0}, hence within
// |U0| + |chain| of W^{s0} inside W_{S~}; the commuting finite factor adds
// at most |S \ S~|.
struct QuasiDensityWitness {
  Generator s0 = 0;
  GeneratorSet start_clique;
  std::vector<Generator> chain;
  std::vector<GeneratorSet> trace;  // V_0 = start_clique, ..., V_m = {s0}
  int bound_n = 0;

  NormalForm multiplier(const Presentation& p) const {
    return reduce(p, Word{chain});
  }

  friend bool operator==(const QuasiDensityWitness&,
                         const QuasiDensityWitness&) = default;
};

struct FiniteGroup {
  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};

using WitnessOutcome = std::variant<QuasiDensityWitness, Splitting, FiniteGroup>;

// {t in V : o(at) = 2} + {a}.  PreconditionError unless V is a clique and
// a is not in V.
GeneratorSet apply_step(const Presentation& p, GeneratorSet clique, Generator a);

// FiniteGroup for a clique, Splitting when S~ has several irreducible
// factors, otherwise the shortest chain from the least maximal clique of S~
// to a singleton (ties broken by generator order).
WitnessOutcome find_witness(const Presentation& p);

// Structural invariants of a witness; PreconditionError on the first
// violation.
void validate_witness(const Presentation& p, const QuasiDensityWitness& w);

struct CertificationReport {
  int radius = 0;
  std::size_t inclusion_cases = 0;
  // Elements u with descent set U0 for which u*x has descent set != {s0}.
  std::vector<NormalForm> inclusion_violations;
  QuasiDensityVerdict density;

  bool passed(int bound_n) const {
    return inclusion_violations.empty() && density.dense() &&
           density.as_dense().n <= bound_n;
  }
};

// Checks the witness on B_R: the chain inclusion for every element with
// descent set exactly U0, and quasi-density of W^{s0} within bound_n.
// Requires R > bound_n.
CertificationReport certify_witness(const Presentation& p,
                                    const QuasiDensityWitness& w, int radius,
                                    const BallOptions& options = {});
CertificationReport certify_witness(const Ball& b, const QuasiDensityWitness& w);

// An element of B_{R-n_max} farther than n_max from every member of W^{s}
// inside B_R, if one exists.  Requires R > n_max.
std::optional<NotWithin> find_hole(const Presentation& p, Generator s,
                                   int radius, int n_max,
                                   const BallOptions& options = {});
std::optional<NotWithin> find_hole(const Ball& b, Generator s, int n_max);

}  // namespace racg
