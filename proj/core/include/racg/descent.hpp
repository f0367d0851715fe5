#pragma once

#include <span>

#include "racg/normal_form.hpp"
#include "racg/presentation.hpp"

namespace racg {

// A subset of S used as a descent set, or as the target T of W^T.
using DescentProfile = GeneratorSet;

// {s : l(ws) < l(w)}.  In a right-angled system these are the letters of a
// reduced word that commute with every later letter.
DescentProfile right_descents(const Presentation& p,
                              std::span<const Generator> reduced);
DescentProfile right_descents(const Presentation& p, const NormalForm& w);

// {s : l(sw) < l(w)}.
DescentProfile left_descents(const Presentation& p,
                             std::span<const Generator> reduced);
DescentProfile left_descents(const Presentation& p, const NormalForm& w);

// Shortest element of the coset w W_T.
NormalForm coset_min_rep(const Presentation& p, const NormalForm& w,
                         GeneratorSet subset);

// Longest element of w W_T; `spherical` must be a clique (InputError
// otherwise).  Equals coset_min_rep(w, T) times the product of T.
NormalForm coset_longest_rep(const Presentation& p, const NormalForm& w,
                             GeneratorSet spherical);

}  // namespace racg
