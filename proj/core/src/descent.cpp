#include "racg/descent.hpp"

#include <vector>

#include "racg/errors.hpp"

namespace racg {

DescentProfile right_descents(const Presentation& p,
                              std::span<const Generator> reduced) {
  DescentProfile out;
  GeneratorSet blocked;
  for (std::size_t i = reduced.size(); i-- > 0;) {
    Generator g = reduced[i];
    if (!blocked.contains(g)) out.insert(g);
    blocked = blocked | p.blocking(g);
  }
  return out;
}

DescentProfile right_descents(const Presentation& p, const NormalForm& w) {
  return right_descents(p, w.letters());
}

DescentProfile left_descents(const Presentation& p,
                             std::span<const Generator> reduced) {
  DescentProfile out;
  GeneratorSet blocked;
  for (Generator g : reduced) {
    if (!blocked.contains(g)) out.insert(g);
    blocked = blocked | p.blocking(g);
  }
  return out;
}

DescentProfile left_descents(const Presentation& p, const NormalForm& w) {
  return left_descents(p, w.letters());
}

NormalForm coset_min_rep(const Presentation& p, const NormalForm& w,
                         GeneratorSet subset) {
  std::vector<Generator> letters(w.letters().begin(), w.letters().end());
  for (;;) {
    GeneratorSet strip = right_descents(p, letters) & subset;
    if (strip.empty()) break;
    multiply_in_place(p, letters, strip.front());
  }
  return NormalForm::from_trusted(std::move(letters));
}

NormalForm coset_longest_rep(const Presentation& p, const NormalForm& w,
                             GeneratorSet spherical) {
  if (!spherical.is_subset_of(p.all()))
    throw InputError("subset contains generators outside the presentation");
  if (!p.is_clique(spherical))
    throw InputError("coset_longest_rep needs a spherical subset, got {" +
                     p.format(spherical) + "}");
  NormalForm base = coset_min_rep(p, w, spherical);
  std::vector<Generator> letters(base.letters().begin(), base.letters().end());
  for (Generator t : spherical) multiply_in_place(p, letters, t);
  return NormalForm::from_trusted(std::move(letters));
}

}  // namespace racg
