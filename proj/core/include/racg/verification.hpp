#pragma once

#include <span>
#include <string>
#include <vector>

#include "racg/ball.hpp"
#include "racg/descent.hpp"

namespace racg {

// Exhaustive checks of the structural facts about descent sets, run over
// every element of a Cayley ball.
//
//   length-step          |l(ws) - l(w)| = |l(sw) - l(w)| = 1
//   descent-clique       right_descents(w) = {s : l(ws) < l(w)} and is a clique
//   longest-coset        for T maximal spherical, the longest element w' of
//                        wW_T has descent set exactly T and d(w, w') <= |T|
//   infinite-shift       o(st) = inf and S(w) = {s}  =>  S(wt) = {t}
//   commuting-conjugate  tw reduced and twt' = w  =>  t = t' and t commutes
//                        with every letter of w
//   descent-transfer     U spherical, s0 not in U, S(w) = U
//                        =>  S(ws0) = {t in U : o(s0 t) = 2} + {s0}
struct SuiteResult {
  std::string name;
  std::string statement;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> counterexamples;  // first few, formatted

  bool passed() const { return violations == 0; }
};

using DescentFn = DescentProfile (*)(const Presentation&,
                                     std::span<const Generator>);

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: run all
  // Descent computation under test.  Swappable so the harness itself can be
  // mutation-tested.
  DescentFn descents = &right_descents;
  std::size_t max_counterexamples = 5;
};

const std::vector<std::string>& suite_names();

// InputError on an unknown suite name.
std::vector<SuiteResult> run_suites(const Ball& b, const VerifyOptions& options = {});

// Deliberately wrong descent computation that ignores the final letter.
DescentProfile descent_off_by_one(const Presentation& p,
                                  std::span<const Generator> reduced);

}  // namespace racg
